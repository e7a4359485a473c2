#pragma once

#include <stdexcept>
#include <string>

namespace superchar {

/// Violated mathematical precondition (bad weight, wrong algebra kind, ...).
struct MathError : std::domain_error {
  explicit MathError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed textual input (weight specs, diagram strings, CLI values).
struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation needs block-graph edges for osp, which only a plugged-in
/// provider can generate.  The default build ships none.
struct ProviderUnavailable : std::runtime_error {
  explicit ProviderUnavailable(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace superchar
