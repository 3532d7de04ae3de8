#pragma once

#include "recolor/error.hpp"
#include "recolor/graph.hpp"
#include "recolor/colouring.hpp"
#include "recolor/sequence.hpp"
#include "recolor/degeneracy.hpp"
#include "recolor/recolour.hpp"
#include "recolor/explorer.hpp"
#include "recolor/classifier.hpp"
#include "recolor/corpus.hpp"
