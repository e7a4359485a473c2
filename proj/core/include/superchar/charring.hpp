#pragma once

#include <vector>

#include "superchar/blockgraph.hpp"
#include "superchar/diagram.hpp"
#include "superchar/g0char.hpp"

namespace superchar {

/// Signed Weyl symmetrization sum_w sgn(w) w(f), expanded termwise.
ZSum jw(const Algebra& g, const ZSum& f);

/// KW(lam_hat, S) / (R e^rho) expanded in the basis of irreducible
/// g_0-characters with the xi-grading by parity of the odd subset.
/// S is normalized into positive roots first (shifting lam_hat along the
/// exchanged roots), then the product over Delta_1^+ minus S is expanded
/// incrementally and every monomial is Weyl-reduced.
G0Char kw_char(const Algebra& g, Weight lam_hat, std::vector<Weight> iso);

/// Same expansion with an arbitrary excluded subset of Delta_1^+ (the
/// parabolic Euler-characteristic route; the excluded set need not be
/// isotropic).
G0Char kw_char_excluded(const Algebra& g, const Weight& lam_hat,
                        const std::vector<Weight>& excluded);

/// Euler character E_lambda: kw_char at the straightened weight divided by
/// the tail normalization.  Memoized.
G0Char euler_char(const Algebra& g, const Weight& lambda);

/// E_{lambda,i}: exposed at i = tail(lambda) (= E_lambda) and, for gl, at
/// i = 0 where it is the Kac-module character.
G0Char euler_char_i(const Algebra& g, const Weight& lambda, int i);

/// Character of the Kac module K(lambda) (gl).
G0Char kac_char(const Algebra& g, const Weight& lambda);

/// Positive odd roots of the tail subalgebra of a stable weight (the
/// equal-rank subalgebra of defect tail(lambda) that lambda vanishes on).
std::vector<Weight> tail_odd_roots(const Algebra& g, const Weight& lambda);

/// Weyl vector of the base eps^{m-s}(eps delta)^s delta^{n-s} (gl).
Weight rho_mixed_tail(const Algebra& g, int s);

struct EulerTerm {
  Weight mu;
  long long coeff = 0;   // signed multiplicity of E_mu in ch L(lambda)
  int parity = 0;        // grading twist p(lambda - mu)
  long long paths = 0;   // d_<^{lambda,mu}
};
/// Euler-basis decomposition of ch L(lambda) through the block graph.
std::vector<EulerTerm> euler_decomposition(const Algebra& g, const Weight& lambda,
                                           const EdgeProvider* provider = nullptr);

/// ch L(lambda) as a xi-graded g_0-decomposition.
G0Char irr_char(const Algebra& g, const Weight& lambda,
                const EdgeProvider* provider = nullptr);

/// Graded multiplicity of L_{g_0}(kappa) in L(lambda).
std::pair<long long, long long> g0_multiplicity(const Algebra& g, const Weight& lambda,
                                                const Weight& kappa,
                                                const EdgeProvider* provider = nullptr);

/// Keeps the monomials whose central-character fingerprint matches chi.
ZSum p_chi(const Algebra& g, const ZSum& f, const CoreFingerprint& chi);

enum class Translation { Std, StdDual };
/// Translation-functor action on numerator-level sums:
/// P_{chi'}(ch V * P_chi(f)).
ZSum theta(const Algebra& g, const ZSum& f, Translation v, const CoreFingerprint& chi,
           const CoreFingerprint& chi_to);

/// A Kac-Wakimoto term coeff * KW(lam, iso), kept symbolic.
struct KWTerm {
  long long coeff = 1;
  Weight lam;
  std::vector<Weight> iso;
};
/// ch V * KW(lam, S) re-expanded as a finite list of KW terms; the pair of
/// weights along each iso-root merges into a single term with that root
/// dropped from the denominator.
std::vector<KWTerm> theta_kw_terms(const Algebra& g, const Weight& lam,
                                   const std::vector<Weight>& iso, Translation v);
G0Char kw_terms_reduce(const Algebra& g, const std::vector<KWTerm>& terms);

struct DenomReport {
  long long j = 1;
  bool direct_ok = false;
  bool reversed_ok = false;  // reversed pairing, factor (-1)^{[s/2]}
};
/// The denominator identity KW(rho', S_min) = j * R e^rho as an exact
/// polynomial identity in Z[Lambda] (numerator form), plus the variant with
/// the reversed iso-set pairing.
DenomReport denominator_check(const Algebra& g);

/// Numerator-form J_W(e^{lam + rho1} prod_{Delta_1^+ \ S}(1 + e^{-beta})),
/// the exact polynomial with KW(lam, S) = (that) / (R_0 e^{rho_0}) * Re^rho.
ZSum kw_numerator(const Algebra& g, Weight lam, std::vector<Weight> iso);

}  // namespace superchar
