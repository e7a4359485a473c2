#include "superchar/g0char.hpp"

#include <algorithm>
#include <mutex>
#include <queue>
#include <unordered_map>

namespace superchar {

void G0Char::add(const Weight& kappa, long long even, long long odd) {
  if (!even && !odd) return;
  auto [it, fresh] = terms_.emplace(kappa, Pair{even, odd});
  if (!fresh) {
    it->second.first += even;
    it->second.second += odd;
    if (!it->second.first && !it->second.second) terms_.erase(it);
  }
}

G0Char& G0Char::operator+=(const G0Char& o) {
  for (const auto& [k, p] : o.terms_) add(k, p.first, p.second);
  return *this;
}

G0Char operator-(const G0Char& a) {
  G0Char r(a.alg_);
  for (const auto& [k, p] : a.terms_) r.terms_.emplace(k, G0Char::Pair{-p.first, -p.second});
  return r;
}

G0Char operator*(long long c, const G0Char& a) {
  G0Char r(a.alg_);
  if (c == 0) return r;
  for (const auto& [k, p] : a.terms_)
    r.terms_.emplace(k, G0Char::Pair{c * p.first, c * p.second});
  return r;
}

G0Char G0Char::parity_twist(int p) const {
  if (p % 2 == 0) return *this;
  G0Char r(alg_);
  for (const auto& [k, pr] : terms_) r.terms_.emplace(k, Pair{pr.second, pr.first});
  return r;
}

std::map<Weight, long long> G0Char::collapse(int xi) const {
  std::map<Weight, long long> out;
  for (const auto& [k, p] : terms_) {
    long long v = p.first + xi * p.second;
    if (v) out.emplace(k, v);
  }
  return out;
}

G0Char G0Char::divided_by(long long j) const {
  G0Char r(alg_);
  for (const auto& [k, p] : terms_) {
    if (p.first % j || p.second % j)
      throw MathError("G0Char: non-exact division by " + std::to_string(j) +
                      " at " + k.str());
    r.terms_.emplace(k, Pair{p.first / j, p.second / j});
  }
  return r;
}

std::string G0Char::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, p] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")*L0" + k.str();
  }
  return s;
}

long long g0_irrep_dim(const Algebra& g, const Weight& kappa) {
  Weight nu = kappa + g.rho0();
  Rat prod(1);
  for (const auto& alpha : g.even_positive()) prod *= bilinear(nu, alpha) / bilinear(g.rho0(), alpha);
  long long d = prod.as_int();
  if (d <= 0) throw MathError("g0_irrep_dim: non-dominant highest weight " + kappa.str());
  return d;
}

Dims dims(const G0Char& c) {
  Dims out;
  for (const auto& [k, p] : c.terms()) {
    long long d = g0_irrep_dim(c.algebra(), k);
    out.dim += (p.first + p.second) * d;
    out.sdim += (p.first - p.second) * d;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weight multiplicities per g_0 factor (Freudenthal with the factor's own
// positive-definite form; the delta-side super-form is globally negated).

namespace {

enum class FactorType { Perm, B, C, D };

struct VecHash {
  size_t operator()(const std::vector<Rat>& v) const {
    size_t h = 146527 + v.size();
    for (const auto& c : v) h = h * 1099511628211ull ^ c.hash();
    return h;
  }
};

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Rat> factor_dominant(FactorType t, std::vector<Rat> v) {
  auto desc = [](std::vector<Rat>& x) {
    std::sort(x.begin(), x.end(), [](const Rat& a, const Rat& b) { return b < a; });
  };
  if (t == FactorType::Perm) {
    desc(v);
    return v;
  }
  int negs = 0;
  bool zero = false;
  for (const auto& c : v) {
    if (c.sign() < 0) ++negs;
    if (c.is_zero()) zero = true;
  }
  for (auto& c : v) c = c.abs();
  desc(v);
  if (t == FactorType::D && negs % 2 == 1 && !zero && !v.empty()) v.back() = -v.back();
  return v;
}

struct Factor {
  FactorType type = FactorType::Perm;
  std::vector<std::vector<Rat>> pos_roots;
  std::vector<Rat> rho;

  std::unordered_map<std::vector<Rat>, ZSum, VecHash> cache;

  // All weights with multiplicities of the irreducible with highest weight hw.
  const ZSum& weights(const std::vector<Rat>& hw);
};

const ZSum& Factor::weights(const std::vector<Rat>& hw) {
  auto it = cache.find(hw);
  if (it != cache.end()) return it->second;

  using V = std::vector<Rat>;
  std::unordered_map<V, long long, VecHash> mult;
  auto depth = [&](const V& v) {
    V diff = hw;
    for (size_t i = 0; i < diff.size(); ++i) diff[i] -= v[i];
    return dot(diff, rho);
  };
  auto cmp = [&](const std::pair<Rat, V>& a, const std::pair<Rat, V>& b) {
    return b.first < a.first;  // min-heap on depth
  };
  std::priority_queue<std::pair<Rat, V>, std::vector<std::pair<Rat, V>>, decltype(cmp)>
      queue(cmp);
  std::unordered_map<V, bool, VecHash> seen;
  Rat hw_norm = dot(hw, hw) + Rat(2) * dot(hw, rho);

  queue.push({Rat(0), hw});
  seen[hw] = true;
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    long long m;
    V dom = factor_dominant(type, v);
    if (dom == hw) {
      m = 1;
    } else {
      // Freudenthal: all contributing weights lie strictly closer to hw and
      // are resolved already.  k is bounded by the rho-depth, which every
      // weight of the module keeps non-negative.
      Rat num;
      V diff = hw;
      for (size_t i = 0; i < diff.size(); ++i) diff[i] -= v[i];
      for (const auto& alpha : pos_roots) {
        Rat step = dot(alpha, rho);
        Rat budget = dot(diff, rho);
        long long kmax = (budget / step).num() / (budget / step).den();
        V mu = v;
        for (long long k = 1; k <= kmax; ++k) {
          for (size_t i = 0; i < mu.size(); ++i) mu[i] += alpha[i];
          auto found = mult.find(mu);
          if (found != mult.end() && found->second)
            num += Rat(2 * found->second) * dot(mu, alpha);
        }
      }
      Rat denom = hw_norm - dot(v, v) - Rat(2) * dot(v, rho);
      if (denom.is_zero()) {
        m = 0;  // same Casimir norm as hw but not conjugate to it
      } else {
        Rat q = num / denom;
        m = q.as_int();
      }
    }
    if (m < 0) throw MathError("Freudenthal produced a negative multiplicity");
    mult[v] = m;
    if (m > 0) {
      for (const auto& alpha : pos_roots) {
        V child = v;
        for (size_t i = 0; i < child.size(); ++i) child[i] -= alpha[i];
        if (!seen[child]) {
          seen[child] = true;
          queue.push({depth(child), child});
        }
      }
    }
  }

  ZSum out;
  for (const auto& [v, m] : mult) {
    if (!m) continue;
    Weight w;
    w.eps = v;  // block-local; re-assembled by the caller
    out.add(w, m);
  }
  return cache.emplace(hw, std::move(out)).first->second;
}

// Splits the even root system of g into its eps and delta factors.
std::pair<Factor, Factor> make_factors(const Algebra& g) {
  Factor fe, fd;
  fe.type = g.kind() == Kind::GL      ? FactorType::Perm
            : g.kind() == Kind::OspEven ? FactorType::D
                                        : FactorType::B;
  fd.type = g.kind() == Kind::GL ? FactorType::Perm : FactorType::C;
  for (const auto& alpha : g.even_positive()) {
    bool on_eps = false;
    for (const auto& c : alpha.eps)
      if (!c.is_zero()) on_eps = true;
    if (on_eps) {
      fe.pos_roots.push_back(alpha.eps);
    } else {
      std::vector<Rat> neg;  // delta block carries the negated form
      for (const auto& c : alpha.delta) neg.push_back(c);
      fd.pos_roots.push_back(std::move(neg));
    }
  }
  fe.rho.assign(g.m(), Rat(0));
  for (const auto& r : fe.pos_roots)
    for (int i = 0; i < g.m(); ++i) fe.rho[i] += Rat(1, 2) * r[i];
  fd.rho.assign(g.n(), Rat(0));
  for (const auto& r : fd.pos_roots)
    for (int j = 0; j < g.n(); ++j) fd.rho[j] += Rat(1, 2) * r[j];
  return {std::move(fe), std::move(fd)};
}

struct ExpansionCache {
  std::mutex mu;
  std::unordered_map<std::string, std::unordered_map<Weight, ZSum, WeightHash>> by_algebra;
  std::unordered_map<std::string, std::pair<Factor, Factor>> factors;
};

ExpansionCache& expansion_cache() {
  static ExpansionCache c;
  return c;
}

}  // namespace

ZSum g0_irrep_weights(const Algebra& g, const Weight& kappa) {
  auto& cache = expansion_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  auto& per_alg = cache.by_algebra[g.key()];
  auto it = per_alg.find(kappa);
  if (it != per_alg.end()) return it->second;

  auto fit = cache.factors.find(g.key());
  if (fit == cache.factors.end())
    fit = cache.factors.emplace(g.key(), make_factors(g)).first;
  auto& [fe, fd] = fit->second;

  const ZSum& we = fe.weights(kappa.eps);
  const ZSum& wd = fd.weights(kappa.delta);
  ZSum out;
  for (const auto& [ve, me] : we.terms())
    for (const auto& [vd, md] : wd.terms())
      out.add(Weight(ve.eps, vd.eps), me * md);
  per_alg.emplace(kappa, out);
  return out;
}

ZSum weight_expand(const G0Char& c, int xi) {
  if (xi != 1 && xi != -1) throw MathError("weight_expand: xi must be +-1");
  ZSum out;
  for (const auto& [kappa, p] : c.terms()) {
    long long coeff = xi == 1 ? p.first + p.second : p.first - p.second;
    if (!coeff) continue;
    ZSum w = g0_irrep_weights(c.algebra(), kappa);
    for (const auto& [mu, m] : w.terms()) out.add(mu, coeff * m);
  }
  return out;
}

}  // namespace superchar
