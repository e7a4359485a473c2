#pragma once

#include <map>
#include <utility>

#include "superchar/algebra.hpp"
#include "superchar/formal_sum.hpp"

namespace superchar {

/// Element of the xi-graded character ring of g_0: a finite combination of
/// irreducible g_0-characters with an (even, odd) integer pair per highest
/// weight.  Collapsing xi -> 1 gives ordinary characters, xi -> -1
/// supercharacters.
class G0Char {
 public:
  using Pair = std::pair<long long, long long>;
  using Map = std::map<Weight, Pair>;

  G0Char() = default;
  explicit G0Char(Algebra g) : alg_(std::move(g)) {}

  const Algebra& algebra() const { return alg_; }
  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add(const Weight& kappa, long long even, long long odd);
  Pair coeff(const Weight& kappa) const {
    auto it = terms_.find(kappa);
    return it == terms_.end() ? Pair{0, 0} : it->second;
  }

  G0Char& operator+=(const G0Char& o);
  friend G0Char operator+(G0Char a, const G0Char& b) { return a += b; }
  friend G0Char operator-(const G0Char& a);
  friend G0Char operator-(G0Char a, const G0Char& b) { return a += -b; }
  friend G0Char operator*(long long c, const G0Char& a);
  friend bool operator==(const G0Char& a, const G0Char& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const G0Char& a, const G0Char& b) { return !(a == b); }

  /// Swaps the even/odd components when p is odd (multiplication by xi^p).
  G0Char parity_twist(int p) const;

  /// Ungraded view: kappa -> even + xi * odd.
  std::map<Weight, long long> collapse(int xi) const;

  /// Exact division of every coefficient; throws when not divisible.
  G0Char divided_by(long long j) const;

  std::string str() const;

 private:
  Algebra alg_ = Algebra::trivial(Kind::GL);
  Map terms_;
};

struct Dims {
  long long dim = 0;
  long long sdim = 0;
};

/// Dimension of the irreducible g_0-module with highest weight kappa
/// (Weyl product formula, exact).
long long g0_irrep_dim(const Algebra& g, const Weight& kappa);

/// dim = sum (even+odd) dim L0, sdim = sum (even-odd) dim L0.
Dims dims(const G0Char& c);

/// Full weight-multiplicity expansion at xi = +1 or -1 (Freudenthal per
/// g_0 factor, exact); an independent route to dims().
ZSum weight_expand(const G0Char& c, int xi);
/// Expansion of a single irreducible g_0-character.
ZSum g0_irrep_weights(const Algebra& g, const Weight& kappa);

}  // namespace superchar
