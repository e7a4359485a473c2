#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superchar/weight.hpp"

namespace superchar {

enum class Kind { GL, OspEven, OspOdd };

std::string kind_str(Kind k);

/// One letter of the base word: which basis vector sits at this slot.
struct Letter {
  bool is_eps;
  int index;  // 1-based
};

/// A Weyl group element for S_m x S_n (gl) or the hyperoctahedral variants
/// (osp).  perm[i] is the image slot of coordinate i; flip bits negate
/// coordinates after permuting.
struct WeylElt {
  std::vector<int> perm_eps, perm_delta;
  unsigned flip_eps = 0, flip_delta = 0;
};

/// Root data for gl(m|n), osp(2m|2n) or osp(2m+1|2n) with the distinguished
/// (gl) resp. mixed (osp) base.  Immutable after construction.
class Algebra {
 public:
  /// Builds the algebra.  m = n = 0 is rejected here (CLI-facing contract);
  /// use trivial() for the zero algebra that shows up as a ds target.
  static Algebra make(Kind kind, int m, int n);
  static Algebra trivial(Kind kind);

  Kind kind() const { return kind_; }
  int m() const { return m_; }
  int n() const { return n_; }
  int defect() const { return m_ < n_ ? m_ : n_; }
  bool is_gl() const { return kind_ == Kind::GL; }
  std::string key() const;  // "gl:2,2" — also the CLI spelling

  const std::vector<Letter>& word() const { return word_; }
  const std::vector<Weight>& simple_roots() const { return simple_; }
  const std::vector<Weight>& even_positive() const { return delta0_plus_; }
  const std::vector<Weight>& odd_positive() const { return delta1_plus_; }
  const Weight& rho() const { return rho_; }
  const Weight& rho0() const { return rho0_; }
  const Weight& rho1() const { return rho1_; }

  /// The iso-set S_s of the base chain, s = 0..defect().
  std::vector<Weight> iso_chain(int s) const;

  /// True iff the roots are independent, odd, and pairwise/self orthogonal.
  bool iso_set_check(const std::vector<Weight>& s) const;

  /// sum of positive odd roots of a base word, halved (used for base changes).
  Weight rho1_of_word(const std::vector<Letter>& word) const;
  /// Weyl vector of a different compatible base: rho + rho1(Sigma) - rho1(word).
  Weight rho_of_word(const std::vector<Letter>& word) const;

  struct Normalized {
    bool regular = false;
    Weight rep;  // strictly dominant representative when regular
    int sign = 0;
  };
  /// Sorts mu into the strictly dominant chamber of the even Weyl group,
  /// tracking det(w); reports Singular when a reflection fixes mu.
  Normalized weyl_orbit_normalize(const Weight& mu) const;

  /// Dominant-chamber representative without the regularity demand
  /// (multiplicity lookups are Weyl invariant).
  Weight dominant_conjugate(const Weight& mu) const;

  long long weyl_order() const;
  /// All of W, enumerated.  Guarded against |W| > 1e6.
  std::vector<WeylElt> weyl_elements() const;
  Weight apply(const WeylElt& w, const Weight& mu) const;
  int sgn(const WeylElt& w) const;
  /// Full signed orbit {(w(mu), sgn w)} of a regular dominant weight.
  std::vector<std::pair<Weight, int>> signed_orbit(const Weight& dom) const;

  /// Involution of osp(2m|2n) flipping the sign of the last eps coordinate.
  Weight sigma(const Weight& w) const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.kind_ == b.kind_ && a.m_ == b.m_ && a.n_ == b.n_;
  }

 private:
  Algebra() = default;
  void build();

  Kind kind_ = Kind::GL;
  int m_ = 0, n_ = 0;
  std::vector<Letter> word_;
  std::vector<Weight> simple_;
  std::vector<Weight> delta0_plus_, delta1_plus_;
  Weight rho0_, rho1_, rho_;
};

}  // namespace superchar
