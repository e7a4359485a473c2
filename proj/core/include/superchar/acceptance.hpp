#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "superchar/blockgraph.hpp"

namespace superchar {

struct CriterionResult {
  std::string name;
  enum class Status { Pass, Fail, Skip } status = Status::Fail;
  std::string detail;
};

/// Runs the full exact verification suite (one entry per criterion; the
/// provider-dependent osp table check reports Skip when no provider is
/// given).  All comparisons are literal equality of exact objects.
std::vector<CriterionResult> run_acceptance(std::ostream* progress = nullptr,
                                            const EdgeProvider* provider = nullptr);

/// True iff nothing failed (skips allowed).
bool acceptance_ok(const std::vector<CriterionResult>& results);

}  // namespace superchar
