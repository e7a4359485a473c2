#pragma once

#include <optional>
#include <vector>

#include "superchar/charring.hpp"

namespace superchar {

/// Image of an Euler supercharacter under ds_j, expressed over the smaller
/// algebra.  terms is empty for the vanishing branch.
struct DsImage {
  enum class TermKind { Euler, Kac };
  struct Term {
    TermKind kind = TermKind::Euler;
    Weight weight;  // module weight in the target algebra
    long long coeff = 1;
  };
  Algebra target = Algebra::trivial(Kind::GL);
  std::vector<Term> terms;
  bool sigma_pair = false;
  int parity_shift = 0;  // ||howl(lambda)|| mod 2

  /// Supercharacter-level weight expansion over the target lattice.
  ZSum sch_expansion() const;
};

/// The target algebra of ds at rank j.
Algebra ds_target(const Algebra& g, int j);

/// Removes the first j leftmost x symbols of diag(lambda); the result is a
/// dominant weight of the rank-j-smaller algebra.  Requires tail >= j.
Weight cut_tail(const Algebra& g, const Weight& lambda, int j);

/// ds_j applied to the Euler supercharacter of lambda (the tail-cutting
/// formula, with the Kac-module and sigma-doubling special cases).
DsImage ds_on_euler(const Algebra& g, const Weight& lambda, int j);

/// Independent oracle: restriction of a supercharacter-level sum to the
/// sub-Cartan cut out by j iso-roots.  Merges each cut pair (eps_p, delta_q)
/// into one direction, asserts the mixed coefficients cancel (supersymmetry),
/// and re-indexes the survivors as weights of the target algebra.
ZSum ds_restrict_oracle(const Algebra& g, const ZSum& f, int j);

/// The typical module of the tail-cut algebra attached to lambda's block.
struct CoreModule {
  Algebra target = Algebra::trivial(Kind::GL);
  Weight nu;               // dominant typical weight of the target
  bool sigma_pair = false; // osp(2m|2n) with non sigma-invariant nu
  long long sdim = 0;      // superdimension of the core module
};
CoreModule core_module(const Algebra& g, const Weight& lambda);

struct SimpleImage {
  CoreModule core;
  long long mult = 0;
  int parity_shift = 0;
};
/// DS at rank = atypicality applied to L(lambda): an isotypic multiple of the
/// core module.  Path counts are native for gl, provider-backed for osp.
SimpleImage ds_on_simple(const Algebra& g, const Weight& lambda,
                         const EdgeProvider* provider = nullptr);

long long sdim_simple(const Algebra& g, const Weight& lambda,
                      const EdgeProvider* provider = nullptr);

struct ModifiedSdim {
  long long mult = 0;  // m(lambda)
  CoreModule core;     // the sdim^0 normalization stays symbolic
};
/// Modified superdimension data on the atypicality-k ideal: vanishes below k,
/// undefined above.
ModifiedSdim sdim_modified(const Algebra& g, const Weight& lambda, int k,
                           const EdgeProvider* provider = nullptr);

/// Sign-twisting projection along beta0 = +-(eps_p - delta_q):
/// e^{a eps_p} -> 1, e^{a delta_q} -> i^{2a}, other coordinates restricted.
/// The output lives on the (m-1|n-1) lattice.
GSum pr_map(const Algebra& g, const GSum& f, const Weight& beta0);

/// Exact Gaussian-integer verification of the projection identity
/// pr(KW(lam,S)(1+e^{-beta0})) against its closed form.
bool proppr_check(const Algebra& g, const Weight& lam_hat, const std::vector<Weight>& S);

}  // namespace superchar
