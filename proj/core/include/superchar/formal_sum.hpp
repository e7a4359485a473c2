#pragma once

#include <map>
#include <string>

#include "superchar/gaussian.hpp"
#include "superchar/weight.hpp"

namespace superchar {

/// Sparse linear combination of exponentials e^mu with exact coefficients.
/// Zero coefficients are never stored.
template <class C>
class FormalSum {
 public:
  using Map = std::map<Weight, C>;

  FormalSum() = default;
  static FormalSum monomial(const Weight& w, C c = C(1)) {
    FormalSum f;
    f.add(w, c);
    return f;
  }

  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add(const Weight& w, C c) {
    if (c == C(0)) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second == C(0)) terms_.erase(it);
    }
  }

  C coeff(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? C(0) : it->second;
  }

  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(const FormalSum& a) {
    FormalSum r;
    for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
    return r;
  }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a += -b; }
  friend FormalSum operator*(C c, const FormalSum& a) {
    FormalSum r;
    for (const auto& [w, k] : a.terms_) r.add(w, c * k);
    return r;
  }
  friend FormalSum operator*(const FormalSum& a, const FormalSum& b) {
    FormalSum r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add(wa + wb, ca * cb);
    return r;
  }
  friend bool operator==(const FormalSum& a, const FormalSum& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const FormalSum& a, const FormalSum& b) { return !(a == b); }

  /// e^mu -> (-1)^p(mu) e^mu.
  FormalSum pi_twist() const {
    FormalSum r;
    for (const auto& [w, c] : terms_) r.add(w, w.parity() ? -c : c);
    return r;
  }

  /// Evaluation at e^mu -> 1 (the dimension functional on characters).
  C eval_at_one() const {
    C s(0);
    for (const auto& [w, c] : terms_) s += c;
    return s;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += coeff_str(c) + "*e^" + w.str();
    }
    return out;
  }

 private:
  static std::string coeff_str(long long c) { return std::to_string(c); }
  static std::string coeff_str(const Gauss& c) { return c.str(); }
  Map terms_;
};

using ZSum = FormalSum<long long>;
using GSum = FormalSum<Gauss>;

}  // namespace superchar
