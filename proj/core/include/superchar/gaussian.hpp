#pragma once

#include <string>

#include "superchar/errors.hpp"

namespace superchar {

/// Gaussian integer a + b*i.  Only the sign-twisting projection needs these;
/// every externally returned coefficient is asserted back to Z.
struct Gauss {
  long long re = 0;
  long long im = 0;

  constexpr Gauss() = default;
  constexpr Gauss(long long r) : re(r), im(0) {}  // NOLINT
  constexpr Gauss(long long r, long long i) : re(r), im(i) {}

  /// i^k for k taken mod 4 (k may be negative).
  static Gauss unit_power(long long k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }

  friend Gauss operator+(Gauss a, Gauss b) { return {a.re + b.re, a.im + b.im}; }
  friend Gauss operator-(Gauss a, Gauss b) { return {a.re - b.re, a.im - b.im}; }
  friend Gauss operator-(Gauss a) { return {-a.re, -a.im}; }
  friend Gauss operator*(Gauss a, Gauss b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Gauss& operator+=(Gauss o) { return *this = *this + o; }
  Gauss& operator*=(Gauss o) { return *this = *this * o; }
  friend bool operator==(Gauss a, Gauss b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(Gauss a, Gauss b) { return !(a == b); }
  bool is_zero() const { return re == 0 && im == 0; }

  long long as_int() const {
    if (im != 0) throw MathError("Gauss: expected integral coefficient");
    return re;
  }

  std::string str() const {
    if (im == 0) return std::to_string(re);
    return "(" + std::to_string(re) + (im < 0 ? "-" : "+") +
           std::to_string(im < 0 ? -im : im) + "i)";
  }
};

}  // namespace superchar
