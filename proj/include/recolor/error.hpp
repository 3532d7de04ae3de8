#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace recolor {

enum class ErrorCode {
  // input parsing
  MalformedLine,
  VertexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  ColourOutOfRange,
  SizeMismatch,
  // colourings and sequences
  ImproperColouring,
  ImproperIntermediate,
  NoOpStep,
  PathNotConnected,
  InvalidArgument,
  // algorithm preconditions
  GraphIsRegular,
  GraphDisconnected,
  MaxDegreeTooSmall,
  PaletteTooSmall,
  DegeneracyTooHigh,
  NotDeltaColouring,
  BudgetSumMismatch,
  NotKDegenerate,
  PartNotIndependent,
  ScratchColourInUse,
  ComponentNotMaximal,
  StateSpaceExceedsLimit,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::ColourOutOfRange: return "ColourOutOfRange";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::ImproperColouring: return "ImproperColouring";
    case ErrorCode::ImproperIntermediate: return "ImproperIntermediate";
    case ErrorCode::NoOpStep: return "NoOpStep";
    case ErrorCode::PathNotConnected: return "PathNotConnected";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::GraphIsRegular: return "GraphIsRegular";
    case ErrorCode::GraphDisconnected: return "GraphDisconnected";
    case ErrorCode::MaxDegreeTooSmall: return "MaxDegreeTooSmall";
    case ErrorCode::PaletteTooSmall: return "PaletteTooSmall";
    case ErrorCode::DegeneracyTooHigh: return "DegeneracyTooHigh";
    case ErrorCode::NotDeltaColouring: return "NotDeltaColouring";
    case ErrorCode::BudgetSumMismatch: return "BudgetSumMismatch";
    case ErrorCode::NotKDegenerate: return "NotKDegenerate";
    case ErrorCode::PartNotIndependent: return "PartNotIndependent";
    case ErrorCode::ScratchColourInUse: return "ScratchColourInUse";
    case ErrorCode::ComponentNotMaximal: return "ComponentNotMaximal";
    case ErrorCode::StateSpaceExceedsLimit: return "StateSpaceExceedsLimit";
  }
  return "Unknown";
}

/// Library-wide exception. `index()` carries the 1-based input line for parse
/// errors and the 0-based step for sequence errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace recolor
