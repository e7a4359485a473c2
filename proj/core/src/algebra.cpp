#include "superchar/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace superchar {

std::string kind_str(Kind k) {
  switch (k) {
    case Kind::GL: return "gl";
    case Kind::OspEven: return "ospE";
    case Kind::OspOdd: return "ospO";
  }
  return "?";
}

Algebra Algebra::make(Kind kind, int m, int n) {
  if (m < 0 || n < 0) throw MathError("algebra: negative rank");
  if (m == 0 && n == 0) throw MathError("algebra: m = n = 0");
  Algebra a;
  a.kind_ = kind;
  a.m_ = m;
  a.n_ = n;
  a.build();
  return a;
}

Algebra Algebra::trivial(Kind kind) {
  Algebra a;
  a.kind_ = kind;
  a.m_ = 0;
  a.n_ = 0;
  return a;
}

std::string Algebra::key() const {
  return kind_str(kind_) + ":" + std::to_string(m_) + "," + std::to_string(n_);
}

namespace {

Weight letter_vec(int m, int n, const Letter& l) {
  return l.is_eps ? eps_vec(m, n, l.index) : delta_vec(m, n, l.index);
}

// Base words.  gl uses eps^m delta^n; osp uses the mixed word containing the
// maximal chain of odd roots, with the pairing arranged so that the iso-set
// chain S_s sits inside the base.
std::vector<Letter> base_word(Kind kind, int m, int n) {
  std::vector<Letter> w;
  if (kind == Kind::GL) {
    for (int i = 1; i <= m; ++i) w.push_back({true, i});
    for (int j = 1; j <= n; ++j) w.push_back({false, j});
  } else if (kind == Kind::OspEven) {
    // delta^{n-m} (delta eps)^m  or  eps^{m-n} (delta eps)^n
    int k = std::min(m, n);
    for (int j = 1; j <= n - k; ++j) w.push_back({false, j});
    for (int i = 1; i <= m - k; ++i) w.push_back({true, i});
    for (int t = 1; t <= k; ++t) {
      w.push_back({false, n - k + t});
      w.push_back({true, m - k + t});
    }
  } else {
    // delta^{n-m} (eps delta)^m  or  eps^{m-n} (eps delta)^n
    int k = std::min(m, n);
    for (int j = 1; j <= n - k; ++j) w.push_back({false, j});
    for (int i = 1; i <= m - k; ++i) w.push_back({true, i});
    for (int t = 1; t <= k; ++t) {
      w.push_back({true, m - k + t});
      w.push_back({false, n - k + t});
    }
  }
  return w;
}

}  // namespace

void Algebra::build() {
  word_ = base_word(kind_, m_, n_);

  // Positions in the word decide signs of the mixed odd roots.
  std::vector<int> pos_eps(m_ + 1), pos_delta(n_ + 1);
  for (int p = 0; p < static_cast<int>(word_.size()); ++p) {
    (word_[p].is_eps ? pos_eps[word_[p].index] : pos_delta[word_[p].index]) = p;
  }

  auto ev = [&](int i) { return eps_vec(m_, n_, i); };
  auto dv = [&](int j) { return delta_vec(m_, n_, j); };

  // Even positive roots.
  for (int i = 1; i <= m_; ++i)
    for (int j = i + 1; j <= m_; ++j) {
      delta0_plus_.push_back(ev(i) - ev(j));
      if (kind_ != Kind::GL) delta0_plus_.push_back(ev(i) + ev(j));
    }
  if (kind_ == Kind::OspOdd)
    for (int i = 1; i <= m_; ++i) delta0_plus_.push_back(ev(i));
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) {
      delta0_plus_.push_back(dv(i) - dv(j));
      if (kind_ != Kind::GL) delta0_plus_.push_back(dv(i) + dv(j));
    }
  if (kind_ != Kind::GL)
    for (int j = 1; j <= n_; ++j) delta0_plus_.push_back(Rat(2) * dv(j));

  // Odd positive roots.
  if (kind_ == Kind::GL) {
    for (int i = 1; i <= m_; ++i)
      for (int j = 1; j <= n_; ++j) delta1_plus_.push_back(ev(i) - dv(j));
  } else {
    for (int i = 1; i <= m_; ++i)
      for (int j = 1; j <= n_; ++j) {
        delta1_plus_.push_back(ev(i) + dv(j));
        delta1_plus_.push_back(pos_eps[i] < pos_delta[j] ? ev(i) - dv(j)
                                                         : dv(j) - ev(i));
      }
    if (kind_ == Kind::OspOdd)
      for (int j = 1; j <= n_; ++j) delta1_plus_.push_back(dv(j));
  }

  // Simple roots: consecutive differences plus the tail rule of the type.
  simple_.clear();
  for (size_t p = 0; p + 1 < word_.size(); ++p) {
    simple_.push_back(letter_vec(m_, n_, word_[p]) - letter_vec(m_, n_, word_[p + 1]));
  }
  if (!word_.empty()) {
    const Letter& last = word_.back();
    if (kind_ == Kind::GL) {
      // nothing to add
    } else if (last.is_eps) {
      // type D end: fork w[N-2] + w[N-1]
      if (word_.size() >= 2 && kind_ == Kind::OspEven) {
        simple_.push_back(letter_vec(m_, n_, word_[word_.size() - 2]) +
                          letter_vec(m_, n_, last));
      } else if (kind_ == Kind::OspOdd) {
        simple_.push_back(letter_vec(m_, n_, last));  // short root eps_m
      }
    } else {
      simple_.push_back(kind_ == Kind::OspEven ? Rat(2) * letter_vec(m_, n_, last)
                                               : letter_vec(m_, n_, last));
    }
  }

  rho0_ = Weight::zero(m_, n_);
  for (const auto& a : delta0_plus_) rho0_ += a;
  rho0_ = Rat(1, 2) * rho0_;
  rho1_ = Weight::zero(m_, n_);
  for (const auto& a : delta1_plus_) rho1_ += a;
  rho1_ = Rat(1, 2) * rho1_;

  if (kind_ == Kind::GL) {
    // gl leaves rho0 ambiguous up to the supertrace direction; we pin rho to
    // sum (m+1-i) eps_i - sum i delta_i and shift rho0 to keep rho = rho0 - rho1.
    rho_ = Weight::zero(m_, n_);
    for (int i = 1; i <= m_; ++i) rho_.eps[i - 1] = m_ + 1 - i;
    for (int j = 1; j <= n_; ++j) rho_.delta[j - 1] = -j;
    rho0_ = rho_ + rho1_;
  } else {
    rho_ = rho0_ - rho1_;
  }
}

std::vector<Weight> Algebra::iso_chain(int s) const {
  if (s < 0 || s > defect()) throw MathError("iso_chain: s out of range");
  std::vector<Weight> out;
  for (int i = 1; i <= s; ++i) {
    if (kind_ == Kind::GL) {
      out.push_back(eps_vec(m_, n_, m_ + 1 - i) - delta_vec(m_, n_, i));
    } else if (kind_ == Kind::OspEven) {
      out.push_back(delta_vec(m_, n_, n_ + 1 - i) - eps_vec(m_, n_, m_ + 1 - i));
    } else {
      out.push_back(eps_vec(m_, n_, m_ + 1 - i) - delta_vec(m_, n_, n_ + 1 - i));
    }
  }
  return out;
}

bool Algebra::iso_set_check(const std::vector<Weight>& s) const {
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i; j < s.size(); ++j)
      if (!bilinear(s[i], s[j]).is_zero()) return false;
  // Independence: the roots are +-eps_p +- delta_q with distinct p's and q's
  // whenever they are orthogonal, but check rank honestly by elimination.
  std::vector<std::vector<Rat>> rows;
  for (const auto& w : s) {
    std::vector<Rat> r;
    for (const auto& c : w.eps) r.push_back(c);
    for (const auto& c : w.delta) r.push_back(c);
    rows.push_back(std::move(r));
  }
  size_t rank = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && !rows[r][c].is_zero()) {
        Rat f = rows[r][c] / rows[rank][c];
        for (size_t cc = c; cc < cols; ++cc) rows[r][cc] -= f * rows[rank][cc];
      }
    }
    ++rank;
  }
  return rank == s.size();
}

Weight Algebra::rho1_of_word(const std::vector<Letter>& word) const {
  if (kind_ != Kind::GL) {
    // Only the eps_i - delta_j signs depend on the word; recompute from scratch.
    std::vector<int> pe(m_ + 1), pd(n_ + 1);
    for (int p = 0; p < static_cast<int>(word.size()); ++p)
      (word[p].is_eps ? pe[word[p].index] : pd[word[p].index]) = p;
    Weight sum = Weight::zero(m_, n_);
    for (int i = 1; i <= m_; ++i)
      for (int j = 1; j <= n_; ++j) {
        sum += eps_vec(m_, n_, i) + delta_vec(m_, n_, j);
        Weight mixed = eps_vec(m_, n_, i) - delta_vec(m_, n_, j);
        sum += (pe[i] < pd[j]) ? mixed : -mixed;
      }
    if (kind_ == Kind::OspOdd)
      for (int j = 1; j <= n_; ++j) sum += delta_vec(m_, n_, j);
    return Rat(1, 2) * sum;
  }
  std::vector<int> pe(m_ + 1), pd(n_ + 1);
  for (int p = 0; p < static_cast<int>(word.size()); ++p)
    (word[p].is_eps ? pe[word[p].index] : pd[word[p].index]) = p;
  Weight sum = Weight::zero(m_, n_);
  for (int i = 1; i <= m_; ++i)
    for (int j = 1; j <= n_; ++j) {
      Weight root = eps_vec(m_, n_, i) - delta_vec(m_, n_, j);
      sum += (pe[i] < pd[j]) ? root : -root;
    }
  return Rat(1, 2) * sum;
}

Weight Algebra::rho_of_word(const std::vector<Letter>& word) const {
  return rho_ + rho1_ - rho1_of_word(word);
}

namespace {

// Sorting machinery shared by the chamber normalizations.  Returns the
// parity of the permutation that sorts vals into strictly decreasing order
// via the given comparison key, or nullopt on a tie.
std::optional<int> sort_desc(std::vector<Rat>& vals, bool by_abs) {
  int inv = 0;
  auto keyless = [&](const Rat& a, const Rat& b) {
    return by_abs ? a.abs() < b.abs() : a < b;
  };
  // insertion sort, counting swaps
  for (size_t i = 1; i < vals.size(); ++i) {
    size_t j = i;
    while (j > 0 && keyless(vals[j - 1], vals[j])) {
      std::swap(vals[j - 1], vals[j]);
      ++inv;
      --j;
    }
  }
  for (size_t i = 0; i + 1 < vals.size(); ++i) {
    bool tie = by_abs ? vals[i].abs() == vals[i + 1].abs() : vals[i] == vals[i + 1];
    if (tie) return std::nullopt;
  }
  return inv % 2;
}

}  // namespace

Algebra::Normalized Algebra::weyl_orbit_normalize(const Weight& mu) const {
  Normalized out;
  Weight rep = mu;
  int sign = 1;

  // eps block
  if (kind_ == Kind::GL) {
    auto p = sort_desc(rep.eps, false);
    if (!p) return out;
    if (*p) sign = -sign;
  } else if (kind_ == Kind::OspEven) {
    auto p = sort_desc(rep.eps, true);
    if (!p) return out;  // covers |v_i| = |v_j| and double zeros
    if (*p) sign = -sign;
    int negs = 0;
    bool has_zero = false;
    for (const auto& v : rep.eps) {
      if (v.sign() < 0) ++negs;
      if (v.is_zero()) has_zero = true;
    }
    for (auto& v : rep.eps) v = v.abs();
    if (negs % 2 == 1 && !has_zero && !rep.eps.empty()) {
      rep.eps.back() = -rep.eps.back();
    }
    // flips in W(D_m) come in pairs, so det is the sorting parity alone
  } else {
    auto p = sort_desc(rep.eps, true);
    if (!p) return out;
    if (*p) sign = -sign;
    int negs = 0;
    for (const auto& v : rep.eps) {
      if (v.is_zero()) return out;  // fixed by a short reflection
      if (v.sign() < 0) ++negs;
    }
    for (auto& v : rep.eps) v = v.abs();
    if (negs % 2) sign = -sign;
  }

  // delta block (type C for osp, plain permutations for gl)
  if (kind_ == Kind::GL) {
    auto p = sort_desc(rep.delta, false);
    if (!p) return out;
    if (*p) sign = -sign;
  } else {
    auto p = sort_desc(rep.delta, true);
    if (!p) return out;
    if (*p) sign = -sign;
    int negs = 0;
    for (const auto& v : rep.delta) {
      if (v.is_zero()) return out;
      if (v.sign() < 0) ++negs;
    }
    for (auto& v : rep.delta) v = v.abs();
    if (negs % 2) sign = -sign;
  }

  out.regular = true;
  out.rep = std::move(rep);
  out.sign = sign;
  return out;
}

Weight Algebra::dominant_conjugate(const Weight& mu) const {
  Weight rep = mu;
  if (kind_ == Kind::GL) {
    std::sort(rep.eps.begin(), rep.eps.end(), [](const Rat& a, const Rat& b) { return b < a; });
    std::sort(rep.delta.begin(), rep.delta.end(), [](const Rat& a, const Rat& b) { return b < a; });
    return rep;
  }
  int negs = 0;
  bool has_zero = false;
  for (const auto& v : rep.eps) {
    if (v.sign() < 0) ++negs;
    if (v.is_zero()) has_zero = true;
  }
  for (auto& v : rep.eps) v = v.abs();
  std::sort(rep.eps.begin(), rep.eps.end(), [](const Rat& a, const Rat& b) { return b < a; });
  if (kind_ == Kind::OspEven && negs % 2 == 1 && !has_zero && !rep.eps.empty())
    rep.eps.back() = -rep.eps.back();
  for (auto& v : rep.delta) v = v.abs();
  std::sort(rep.delta.begin(), rep.delta.end(), [](const Rat& a, const Rat& b) { return b < a; });
  return rep;
}

long long Algebra::weyl_order() const {
  auto fact = [](int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  long long o = fact(m_) * fact(n_);
  if (kind_ == Kind::OspEven) {
    for (int i = 1; i < m_; ++i) o *= 2;
    for (int j = 0; j < n_; ++j) o *= 2;
  } else if (kind_ == Kind::OspOdd) {
    for (int i = 0; i < m_; ++i) o *= 2;
    for (int j = 0; j < n_; ++j) o *= 2;
  }
  return o;
}

std::vector<WeylElt> Algebra::weyl_elements() const {
  if (weyl_order() > 1000000)
    throw MathError("weyl_elements: group too large to materialize");
  std::vector<int> pe(m_), pd(n_);
  std::iota(pe.begin(), pe.end(), 0);
  std::iota(pd.begin(), pd.end(), 0);
  std::vector<std::vector<int>> perms_e, perms_d;
  do perms_e.push_back(pe);
  while (std::next_permutation(pe.begin(), pe.end()));
  do perms_d.push_back(pd);
  while (std::next_permutation(pd.begin(), pd.end()));

  std::vector<unsigned> flips_e, flips_d;
  if (kind_ == Kind::GL) {
    flips_e = {0};
    flips_d = {0};
  } else {
    for (unsigned f = 0; f < (1u << m_); ++f)
      if (kind_ == Kind::OspOdd || __builtin_popcount(f) % 2 == 0) flips_e.push_back(f);
    for (unsigned f = 0; f < (1u << n_); ++f) flips_d.push_back(f);
  }

  std::vector<WeylElt> out;
  out.reserve(perms_e.size() * perms_d.size() * flips_e.size() * flips_d.size());
  for (const auto& p1 : perms_e)
    for (unsigned f1 : flips_e)
      for (const auto& p2 : perms_d)
        for (unsigned f2 : flips_d) out.push_back({p1, p2, f1, f2});
  return out;
}

Weight Algebra::apply(const WeylElt& w, const Weight& mu) const {
  Weight out = Weight::zero(m_, n_);
  for (int i = 0; i < m_; ++i) {
    int to = w.perm_eps[i];
    out.eps[to] = (w.flip_eps >> to) & 1 ? -mu.eps[i] : mu.eps[i];
  }
  for (int j = 0; j < n_; ++j) {
    int to = w.perm_delta[j];
    out.delta[to] = (w.flip_delta >> to) & 1 ? -mu.delta[j] : mu.delta[j];
  }
  return out;
}

int Algebra::sgn(const WeylElt& w) const {
  int s = 1;
  auto perm_parity = [](const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++inv;
    return inv % 2;
  };
  if (perm_parity(w.perm_eps)) s = -s;
  if (perm_parity(w.perm_delta)) s = -s;
  if (__builtin_popcount(w.flip_eps) % 2) s = -s;
  if (__builtin_popcount(w.flip_delta) % 2) s = -s;
  return s;
}

std::vector<std::pair<Weight, int>> Algebra::signed_orbit(const Weight& dom) const {
  std::vector<std::pair<Weight, int>> out;
  for (const auto& w : weyl_elements()) out.emplace_back(apply(w, dom), sgn(w));
  return out;
}

Weight Algebra::sigma(const Weight& w) const {
  if (kind_ != Kind::OspEven) throw MathError("sigma: defined for osp(2m|2n) only");
  Weight out = w;
  if (m_ > 0) out.eps[m_ - 1] = -out.eps[m_ - 1];
  return out;
}

}  // namespace superchar
