#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "superchar/rational.hpp"

namespace superchar {

/// A vector on the eps/delta basis of the weight lattice of gl(m|n) or
/// osp(M|2n).  The bilinear form is (eps_i|eps_j) = delta_ij = -(delta_i|delta_j),
/// (eps_i|delta_j) = 0.
struct Weight {
  std::vector<Rat> eps;
  std::vector<Rat> delta;

  Weight() = default;
  Weight(std::vector<Rat> e, std::vector<Rat> d)
      : eps(std::move(e)), delta(std::move(d)) {}
  static Weight zero(int m, int n) {
    return Weight(std::vector<Rat>(m), std::vector<Rat>(n));
  }

  int m() const { return static_cast<int>(eps.size()); }
  int n() const { return static_cast<int>(delta.size()); }

  bool is_zero() const {
    for (const auto& c : eps) if (!c.is_zero()) return false;
    for (const auto& c : delta) if (!c.is_zero()) return false;
    return true;
  }

  bool is_integral() const {
    for (const auto& c : eps) if (!c.is_integer()) return false;
    for (const auto& c : delta) if (!c.is_integer()) return false;
    return true;
  }

  /// Parity homomorphism: sum of the delta coordinates mod 2.
  /// Defined only on the integral lattice.
  int parity() const {
    long long s = 0;
    for (const auto& c : delta) s += c.as_int();
    return static_cast<int>(((s % 2) + 2) % 2);
  }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rat& c, Weight w);
  friend Weight operator-(Weight w);

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.eps == b.eps && a.delta == b.delta;
  }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b);  // lexicographic

  size_t hash() const;
  std::string str() const;  // "(a1,..,am | b1,..,bn)"
};

struct WeightHash {
  size_t operator()(const Weight& w) const { return w.hash(); }
};

/// Standard bilinear form.  Throws on shape mismatch.
Rat bilinear(const Weight& a, const Weight& b);

/// e_i / d_j basis vectors for an (m|n) shape.
Weight eps_vec(int m, int n, int i);
Weight delta_vec(int m, int n, int j);

}  // namespace superchar
