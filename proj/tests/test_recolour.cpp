#include <gtest/gtest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "recolor/recolor.hpp"

using namespace recolor;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no recolor::Error thrown";
  return ErrorCode::InvalidArgument;
}

std::map<Vertex, int> recolour_counts(const RecolouringSequence& seq) {
  std::map<Vertex, int> out;
  for (const auto& s : seq) ++out[s.vertex];
  return out;
}

}  // namespace

// --- Kempe swaps -----------------------------------------------------------

TEST(KempeComponent, Collects) {
  const auto comp = kempe_component(graphs::path(4), Colouring(3, {1, 2, 1, 3}), 0, 1, 2);
  EXPECT_EQ(comp.vertices, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_TRUE(kempe_component(graphs::path(4), Colouring(3, {1, 2, 1, 3}), 3, 1, 2).vertices.empty());
}

TEST(KempeSwap, Examples) {
  const auto p3 = graphs::path(3);
  const Colouring c(3, {1, 2, 1});
  const auto seq = kempe_swap_via_scratch(p3, c, kempe_component(p3, c, 0, 1, 2));
  EXPECT_EQ(seq.size(), 2u * 1 + 2);
  EXPECT_EQ(apply_sequence(p3, c, seq), Colouring(3, {2, 1, 2}));

  EXPECT_TRUE(kempe_swap_via_scratch(p3, c, KempeComponent{1, 2, {}}).empty());

  // A lone vertex coloured i moves straight to j.
  const Graph k2(2, {{0, 1}});
  const Colouring c2(4, {1, 3});
  const auto single = kempe_swap_via_scratch(k2, c2, kempe_component(k2, c2, 0, 1, 2));
  EXPECT_EQ(single, RecolouringSequence({{0, 2}}));
  // ... and a lone vertex coloured j takes a two-step detour.
  const auto detour = kempe_swap_via_scratch(k2, c2, kempe_component(k2, c2, 0, 2, 1));
  EXPECT_EQ(detour, RecolouringSequence({{0, 4}, {0, 2}}));
}

TEST(KempeSwap, Errors) {
  const auto p3 = graphs::path(3);
  EXPECT_EQ(code_of([&] { kempe_swap_via_scratch(p3, Colouring(3, {1, 2, 1}), KempeComponent{1, 2, {0, 1}}); }),
            ErrorCode::ComponentNotMaximal);
  EXPECT_EQ(code_of([&] { kempe_swap_via_scratch(p3, Colouring(3, {1, 2, 3}), KempeComponent{1, 2, {0, 1}}); }),
            ErrorCode::ScratchColourInUse);
  EXPECT_EQ(code_of([&] { kempe_swap_via_scratch(p3, Colouring(3, {1, 3, 1}), KempeComponent{1, 3, {0}}); }),
            ErrorCode::ScratchColourInUse);
  EXPECT_EQ(code_of([&] { kempe_swap_via_scratch(p3, Colouring(3, {1, 2, 1}), KempeComponent{1, 1, {0}}); }),
            ErrorCode::InvalidArgument);
}

TEST(KempeSwap, ExchangesColoursOnComponentOnly) {
  std::mt19937_64 rng(17);
  int done = 0;
  while (done < 300) {
    const auto g = oracle::random_graph(7, 0.4, rng);
    const int k = g.max_degree() + 1;
    if (k < 3) continue;
    const auto base = oracle::random_colouring(g, k - 1, rng);
    if (!base) continue;
    const auto c = base->with_palette(k);
    const Vertex anchor = static_cast<Vertex>(rng() % g.order());
    const Colour i = c[anchor];
    Colour j = static_cast<Colour>(1 + rng() % (k - 1));
    if (j == i) j = i % (k - 1) + 1;
    if (i == j) continue;
    const auto comp = kempe_component(g, c, anchor, i, j);
    const auto seq = kempe_swap_via_scratch(g, c, comp);
    const auto end = apply_sequence(g, c, seq);
    int seconds = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      const bool inside = std::binary_search(comp.vertices.begin(), comp.vertices.end(), v);
      if (!inside) {
        EXPECT_EQ(end[v], c[v]);
        continue;
      }
      seconds += c[v] == j;
      EXPECT_EQ(end[v], c[v] == i ? j : i);
    }
    EXPECT_EQ(seq.size(), static_cast<std::size_t>(2 * seconds) + (comp.vertices.size() - seconds));
    ++done;
  }
}

// --- elimination -----------------------------------------------------------

TEST(EliminateTopColour, AlreadyAvoidsTop) {
  const auto res = eliminate_top_colour(graphs::diamond(), Colouring(4, {1, 2, 3, 3}));
  EXPECT_TRUE(res.sequence.empty());
  EXPECT_EQ(res.colouring, Colouring(4, {1, 2, 3, 3}));
}

TEST(EliminateTopColour, StarCentre) {
  // The centre sees 1,2,3, so the walk moves on to a leaf first.
  const auto star = graphs::star(3);
  const Colouring c(4, {4, 1, 2, 3});
  const auto res = eliminate_top_colour(star, c);
  EXPECT_EQ(res.rounds.size(), 1u);
  EXPECT_EQ(apply_sequence(star, c, res.sequence), res.colouring);
  EXPECT_FALSE(res.colouring.uses(4));
  EXPECT_EQ(res.sequence.size(), 2u);
  EXPECT_EQ(res.sequence[1].vertex, 0);
  // The shortest walk has the same length.
  EXPECT_EQ(oracle_distance(star, 4, c, res.colouring), 2);

  // With a repeated leaf colour the centre moves directly.
  const auto direct = eliminate_top_colour(star, Colouring(4, {4, 1, 1, 2}));
  EXPECT_EQ(direct.sequence, RecolouringSequence({{0, 3}}));
}

TEST(EliminateTopColour, PathOfFour) {
  const auto p4 = graphs::path(4);
  const Colouring c(3, {1, 2, 3, 1});
  const auto res = eliminate_top_colour(p4, c);
  EXPECT_EQ(apply_sequence(p4, c, res.sequence), res.colouring);
  EXPECT_FALSE(res.colouring.uses(3));
  EXPECT_LE(res.sequence.size(), 16u);
  const auto d = oracle_distance(p4, 3, c, res.colouring);
  ASSERT_TRUE(d.has_value());
  EXPECT_LE(*d, static_cast<int>(res.sequence.size()));
}

TEST(EliminateTopColour, Errors) {
  EXPECT_EQ(code_of([] { eliminate_top_colour(graphs::complete(4), Colouring(4, {1, 2, 3, 4})); }),
            ErrorCode::DegeneracyTooHigh);
  EXPECT_EQ(code_of([] { eliminate_top_colour(graphs::diamond(), Colouring(3, {1, 2, 3, 3})); }),
            ErrorCode::PaletteTooSmall);
  EXPECT_EQ(code_of([] { eliminate_top_colour(graphs::path(3), Colouring(3, {1, 1, 3})); }),
            ErrorCode::ImproperColouring);
}

TEST(EliminateTopColour, BoundsAndRoundStructure) {
  for (int n = 3; n <= 6; ++n)
    for (const auto& g : all_graphs(n)) {
      const int k = g.max_degree() + 1;
      if (g.max_degree() < 1 || degeneracy(g) > k - 2) continue;
      const auto ordering = degeneracy_ordering(g);
      for (const auto& c : enumerate_colourings(g, k)) {
        const auto res = eliminate_top_colour(g, c);
        ASSERT_EQ(apply_sequence(g, c, res.sequence), res.colouring);
        ASSERT_FALSE(res.colouring.uses(k));
        ASSERT_LE(res.sequence.size(), static_cast<std::size_t>(n * n));
        ASSERT_LE(res.rounds.size(), static_cast<std::size_t>(n));
        for (auto [v, times] : recolour_counts(res.sequence)) ASSERT_LE(times, n);
        int last_h = -1;
        for (const auto& round : res.rounds) {
          EXPECT_GT(round.h, last_h);  // progress between rounds
          last_h = round.h;
          for (std::size_t s = 1; s < round.pairs.size(); ++s)  // walk moves later
            EXPECT_GT(ordering.position[round.pairs[s].first], ordering.position[round.pairs[s - 1].first]);
          for (const auto& [v, col] : round.pairs) EXPECT_GE(ordering.position[v], round.h);
          EXPECT_EQ(round.pairs.front().first, ordering.order[round.h]);
          EXPECT_NE(round.pairs.front().second, k);
        }
      }
    }
}

// --- paths -----------------------------------------------------------------

TEST(PathBetweenDeltaColourings, Examples) {
  const auto p3 = graphs::path(3);
  EXPECT_TRUE(path_between_delta_colourings(p3, Colouring(3, {1, 2, 1}), Colouring(3, {1, 2, 1})).empty());
  const Colouring a(3, {1, 2, 1}), b(3, {2, 1, 2});
  const auto seq = path_between_delta_colourings(p3, a, b);
  EXPECT_EQ(apply_sequence(p3, a, seq), b);
  EXPECT_GE(static_cast<int>(seq.size()), *oracle_distance(p3, 3, a, b));

  const auto d = graphs::diamond();
  const Colouring x(4, {1, 2, 3, 3}), y(4, {3, 1, 2, 2});
  const auto s2 = path_between_delta_colourings(d, x, y);
  EXPECT_EQ(apply_sequence(d, x, s2), y);
  EXPECT_LE(s2.size(), 10u * 16);
}

TEST(PathBetweenDeltaColourings, Errors) {
  EXPECT_EQ(code_of([] {
              path_between_delta_colourings(graphs::path(3), Colouring(3, {1, 2, 3}), Colouring(3, {1, 2, 1}));
            }),
            ErrorCode::NotDeltaColouring);
  EXPECT_EQ(code_of([] {
              path_between_delta_colourings(graphs::cycle(4), Colouring(3, {1, 2, 1, 2}), Colouring(3, {2, 1, 2, 1}));
            }),
            ErrorCode::DegeneracyTooHigh);
}

TEST(PathBetweenDeltaColourings, AllPairsOnSmallGraphs) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& g : all_graphs(n)) {
      const int delta = g.max_degree();
      if (delta < 1 || degeneracy(g) > delta - 1) continue;
      std::vector<Colouring> deltas;
      for (const auto& c : enumerate_colourings(g, delta)) deltas.push_back(c.with_palette(delta + 1));
      for (const auto& a : deltas)
        for (const auto& b : deltas) {
          const auto seq = path_between_delta_colourings(g, a, b);
          ASSERT_EQ(apply_sequence(g, a, seq), b);
          ASSERT_LE(seq.size(), static_cast<std::size_t>(10 * n * n));
        }
    }
}

TEST(FindPathNonRegular, Examples) {
  const auto d = graphs::diamond();
  const Colouring a(4, {1, 2, 3, 3}), b(4, {4, 3, 1, 2});
  EXPECT_TRUE(find_path_non_regular(d, a, a).empty());
  const auto seq = find_path_non_regular(d, a, b);
  EXPECT_EQ(apply_sequence(d, a, seq), b);
  EXPECT_TRUE(oracle_distance(d, 4, a, b).has_value());

  EXPECT_EQ(code_of([] {
              find_path_non_regular(graphs::cycle(6), Colouring(3, {1, 2, 1, 2, 1, 2}),
                                    Colouring(3, {1, 2, 1, 2, 1, 3}));
            }),
            ErrorCode::MaxDegreeTooSmall);
  EXPECT_EQ(code_of([] {
              const auto c = Colouring(4, {1, 2, 1, 2, 2, 1, 2, 1});
              find_path_non_regular(graphs::cube(), c, c);
            }),
            ErrorCode::GraphIsRegular);
  const Graph two_stars(8, {{0, 1}, {0, 2}, {0, 3}, {4, 5}, {4, 6}, {4, 7}});
  EXPECT_EQ(code_of([&] {
              const auto c = Colouring(4, {1, 2, 2, 2, 1, 2, 2, 2});
              find_path_non_regular(two_stars, c, c);
            }),
            ErrorCode::GraphDisconnected);
  EXPECT_EQ(code_of([&] { find_path_non_regular(d, Colouring(5, {1, 2, 3, 3}), Colouring(5, {1, 2, 3, 3})); }),
            ErrorCode::InvalidArgument);
}

TEST(FindPathNonRegular, EveryPairOnDiamond) {
  const auto d = graphs::diamond();
  const auto all = enumerate_colourings(d, 4);
  for (const auto& a : all)
    for (const auto& b : all) {
      const auto seq = find_path_non_regular(d, a, b);
      ASSERT_EQ(apply_sequence(d, a, seq), b);
      ASSERT_LE(seq.size(), 3u * 16 + 2 * 4 * 3);
    }
}

TEST(FindPathNonRegular, LargerRandomGraphs) {
  std::mt19937_64 rng(99);
  int done = 0;
  while (done < 40) {
    const auto g = oracle::random_graph(12, 0.3, rng);
    if (!is_connected(g) || g.is_regular() || g.max_degree() < 3) continue;
    const int k = g.max_degree() + 1;
    const auto a = oracle::random_colouring(g, k, rng);
    const auto b = oracle::random_colouring(g, k, rng);
    if (!a || !b) continue;
    const auto seq = find_path_non_regular(g, *a, *b);
    EXPECT_EQ(apply_sequence(g, *a, seq), *b);
    EXPECT_LE(seq.size(), static_cast<std::size_t>(10 * 12 * 12));
    ++done;
  }
}

TEST(FindPathNonRegular, Deterministic) {
  const auto g = graphs::diamond();
  const Colouring a(4, {1, 2, 3, 4}), b(4, {2, 1, 4, 3});
  EXPECT_EQ(find_path_non_regular(g, a, b), find_path_non_regular(g, a, b));
}
