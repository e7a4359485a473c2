#include "superchar/ds.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace superchar {

Algebra ds_target(const Algebra& g, int j) {
  if (j < 0 || j > g.defect()) throw MathError("ds: rank out of range");
  int m = g.m() - j, n = g.n() - j;
  if (m == 0 && n == 0) return Algebra::trivial(g.kind());
  return Algebra::make(g.kind(), m, n);
}

Weight cut_tail(const Algebra& g, const Weight& lambda, int j) {
  Invariants inv = invariants(g, lambda);
  if (j < 0 || j > inv.tail) throw MathError("cut_tail: tail shorter than the cut");
  if (j == 0) return lambda;
  WeightDiagram f = diag(g, lambda);
  int left = j;
  for (auto it = f.cells.begin(); it != f.cells.end() && left > 0;) {
    int take = std::min(left, it->second.times);
    it->second.times -= take;
    left -= take;
    it = it->second.occupied() ? std::next(it) : f.cells.erase(it);
  }
  if (left) throw MathError("cut_tail: ran out of crosses");

  Algebra target = ds_target(g, j);
  WeightDiagram ft;
  ft.kind = target.kind();
  ft.m = target.m();
  ft.n = target.n();
  if (g.is_gl()) {
    // gl positions are anchored to the rank: each cut pair slides the
    // surviving symbols one step left against the smaller Weyl vector.
    for (const auto& [p, c] : f.cells) ft.cells[p - j] = c;
  } else {
    ft.cells = f.cells;
  }
  ft.sign = f.sign;
  if (target.kind() == Kind::OspEven && ft.sign == DiagSign::None && ft.empty_at(0) &&
      target.m() > 0) {
    ft.sign = DiagSign::Plus;  // sigma-preferred representative; callers pair it
  }
  if (target.kind() == Kind::OspOdd && ft.times_at(0) == 0) ft.sign = DiagSign::None;
  if (target.m() + target.n() == 0) return Weight();
  return module_weight_of(target, ft);
}

ZSum DsImage::sch_expansion() const {
  ZSum out;
  for (const auto& t : terms) {
    G0Char c = t.kind == TermKind::Euler ? euler_char(target, t.weight)
                                           : kac_char(target, t.weight);
    ZSum w = weight_expand(c, -1);
    for (const auto& [mu, k] : w.terms()) out.add(mu, t.coeff * k);
  }
  return out;
}

namespace {

// Parity of the core symbols left of the leftmost cross.  The restriction
// homomorphism picks up this sign on the non-stable gl weights (for stable
// ones the count is zero); verified against the restriction oracle.
int leading_core_sign(const Algebra& g, const Weight& lambda) {
  if (!g.is_gl()) return 1;
  WeightDiagram f = diag(g, lambda);
  auto xs = f.cross_positions();
  if (xs.empty()) return 1;
  int cores = 0;
  for (const auto& [p, c] : f.cells)
    if (p < xs.front()) cores += c.gt + c.lt;
  return cores % 2 ? -1 : 1;
}

}  // namespace

DsImage ds_on_euler(const Algebra& g, const Weight& lambda, int j) {
  if (j < 1 || j > g.defect()) throw MathError("ds_on_euler: rank out of range");
  Invariants inv = invariants(g, lambda);
  DsImage img;
  img.target = ds_target(g, j);
  img.parity_shift = static_cast<int>(((inv.norm % 2) + 2) % 2);
  if (inv.tail < j) return img;

  // iterate rank-1 cuts so the sign contributions compose as ds_j = (ds_1)^j
  Algebra cur = g;
  Weight lam = lambda;
  long long coeff = 1;
  for (int step = 0; step < j - 1; ++step) {
    coeff *= leading_core_sign(cur, lam);
    Weight next = cut_tail(cur, lam, 1);
    cur = ds_target(cur, 1);
    lam = next;
  }
  coeff *= leading_core_sign(cur, lam);
  int last_tail = invariants(cur, lam).tail;
  Weight cut = cut_tail(cur, lam, 1);

  if (last_tail > 1) {
    img.terms.push_back({DsImage::TermKind::Euler, cut, coeff});
    return img;
  }
  // final tail exactly one
  if (g.is_gl()) {
    img.terms.push_back({DsImage::TermKind::Kac, cut, coeff});
    return img;
  }
  if (g.kind() == Kind::OspOdd || cur.m() == 1) {
    img.terms.push_back({DsImage::TermKind::Euler, cut, coeff});
    return img;
  }
  Weight twisted = img.target.sigma(cut);
  if (twisted == cut) {
    img.terms.push_back({DsImage::TermKind::Euler, cut, coeff});
  } else {
    img.sigma_pair = true;
    img.terms.push_back({DsImage::TermKind::Euler, cut, coeff});
    img.terms.push_back({DsImage::TermKind::Euler, twisted, coeff});
  }
  return img;
}

namespace {

// One rank of the restriction: identify the eps/delta directions of the cut
// pair, check the merged exponents cancel away from zero, drop the pair.
ZSum restrict_once(const Algebra& g, const ZSum& f, Algebra& target_out) {
  int p = g.m();            // eps index being cut (1-based)
  int q = g.is_gl() ? 1 : g.n();
  target_out = ds_target(g, 1);

  std::map<std::pair<Weight, long long>, long long> buckets;
  for (const auto& [mu, c] : f.terms()) {
    long long k = (mu.eps[p - 1] + mu.delta[q - 1]).as_int();
    Weight bar;
    for (int i = 1; i <= g.m(); ++i)
      if (i != p) bar.eps.push_back(mu.eps[i - 1]);
    for (int jj = 1; jj <= g.n(); ++jj)
      if (jj != q) bar.delta.push_back(mu.delta[jj - 1]);
    buckets[{bar, k}] += c;
  }
  ZSum out;
  for (const auto& [key, c] : buckets) {
    if (!c) continue;
    if (key.second != 0)
      throw MathError("ds_restrict_oracle: non-supersymmetric input (t-degree " +
                      std::to_string(key.second) + " survives)");
    out.add(key.first, c);
  }
  return out;
}

}  // namespace

ZSum ds_restrict_oracle(const Algebra& g, const ZSum& f, int j) {
  if (j < 0 || j > g.defect()) throw MathError("ds_restrict_oracle: rank out of range");
  ZSum cur = f;
  Algebra alg = g;
  for (int step = 0; step < j; ++step) {
    Algebra next = alg;
    cur = restrict_once(alg, cur, next);
    alg = next;
  }
  return cur;
}

CoreModule core_module(const Algebra& g, const Weight& lambda) {
  Invariants inv = invariants(g, lambda);
  int j = inv.atypicality;
  CoreModule cm;
  cm.target = ds_target(g, j);
  WeightDiagram core = core_of(diag(g, lambda));
  WeightDiagram ft;
  ft.kind = cm.target.kind();
  ft.m = cm.target.m();
  ft.n = cm.target.n();
  ft.cells = core.cells;
  if (ft.kind == Kind::OspEven && ft.empty_at(0) && cm.target.m() > 0)
    ft.sign = DiagSign::Plus;
  if (cm.target.m() + cm.target.n() == 0) {
    cm.nu = Weight();
    cm.sdim = 1;
    return cm;
  }
  cm.nu = module_weight_of(cm.target, ft);
  if (invariants(cm.target, cm.nu).atypicality != 0)
    throw MathError("core_module: core weight is not typical");
  cm.sdim = dims(euler_char(cm.target, cm.nu)).sdim;
  if (cm.target.kind() == Kind::OspEven) {
    Weight tw = cm.target.sigma(cm.nu);
    if (tw != cm.nu) {
      cm.sigma_pair = true;
      cm.sdim += dims(euler_char(cm.target, tw)).sdim;
    }
  }
  return cm;
}

SimpleImage ds_on_simple(const Algebra& g, const Weight& lambda,
                         const EdgeProvider* provider) {
  Invariants inv = invariants(g, lambda);
  SimpleImage out;
  out.core = core_module(g, lambda);
  out.mult = m_lambda(g, lambda, provider);
  out.parity_shift = static_cast<int>(((inv.norm % 2) + 2) % 2);
  return out;
}

long long sdim_simple(const Algebra& g, const Weight& lambda,
                      const EdgeProvider* provider) {
  // sum over the Kostant predecessors with the supercharacter signs; every
  // Kostant Euler term of the block contributes the same core sdim.
  CoreModule cm = core_module(g, lambda);
  if (cm.sdim == 0) return 0;
  MarkedGraph graph = build_block_graph(g, {lambda}, 0, provider);
  Invariants li = invariants(g, lambda);
  long long total = 0;
  for (size_t i = 0; i < graph.vertices().size(); ++i) {
    if (!graph.kostant()[i]) continue;
    const Weight& mu = graph.vertices()[i];
    long long d = count_paths(graph, mu, lambda).incr;
    if (!d) continue;
    long long dn = li.norm - graph.norms()[i];
    int sign = ((dn + (lambda - mu).parity()) % 2 + 2) % 2 ? -1 : 1;
    total += sign * d;
  }
  return total * cm.sdim;
}

ModifiedSdim sdim_modified(const Algebra& g, const Weight& lambda, int k,
                           const EdgeProvider* provider) {
  Invariants inv = invariants(g, lambda);
  if (inv.atypicality > k)
    throw MathError("sdim_modified: weight lies above the atypicality-k ideal");
  ModifiedSdim out;
  if (inv.atypicality < k) return out;  // the trace vanishes below k
  out.mult = m_lambda(g, lambda, provider);
  out.core = core_module(g, lambda);
  return out;
}

namespace {

std::pair<int, int> beta0_indices(const Algebra& g, const Weight& beta0) {
  int p = 0, q = 0;
  bool bad = false;
  for (int i = 1; i <= g.m(); ++i)
    if (!beta0.eps[i - 1].is_zero()) {
      if (p || beta0.eps[i - 1].abs() != Rat(1)) bad = true;
      p = i;
    }
  for (int jj = 1; jj <= g.n(); ++jj)
    if (!beta0.delta[jj - 1].is_zero()) {
      if (q || beta0.delta[jj - 1].abs() != Rat(1)) bad = true;
      q = jj;
    }
  if (bad || p == 0 || q == 0 || !bilinear(beta0, beta0).is_zero())
    throw MathError("pr_map: beta0 must be +-(eps_p - delta_q)");
  return {p, q};
}

Gauss phase_of(const Weight& mu, int q) {
  Rat a = mu.delta[q - 1];
  return Gauss::unit_power((Rat(2) * a).as_int());
}

Weight drop_pq(const Algebra& g, const Weight& mu, int p, int q) {
  Weight bar;
  for (int i = 1; i <= g.m(); ++i)
    if (i != p) bar.eps.push_back(mu.eps[i - 1]);
  for (int jj = 1; jj <= g.n(); ++jj)
    if (jj != q) bar.delta.push_back(mu.delta[jj - 1]);
  return bar;
}

}  // namespace

GSum pr_map(const Algebra& g, const GSum& f, const Weight& beta0) {
  auto [p, q] = beta0_indices(g, beta0);
  GSum out;
  for (const auto& [mu, c] : f.terms()) out.add(drop_pq(g, mu, p, q), c * phase_of(mu, q));
  return out;
}

namespace {

// N and D with KW(lam, S) = N / D, D the product of (1 + e^{-gamma}) over the
// whole Weyl orbit of S.  Grouping by the image set keeps this small.
struct ClearedKW {
  GSum num;
  std::vector<Weight> denom_orbit;  // distinct gamma
};

ClearedKW kw_cleared(const Algebra& g, const Weight& lam, const std::vector<Weight>& S) {
  ClearedKW out;
  std::set<Weight> orbit;
  std::map<std::vector<Weight>, GSum> groups;
  for (const auto& w : g.weyl_elements()) {
    std::vector<Weight> ws;
    for (const auto& beta : S) ws.push_back(g.apply(w, beta));
    std::sort(ws.begin(), ws.end());
    for (const auto& x : ws) orbit.insert(x);
    groups[ws].add(g.apply(w, lam), Gauss(g.sgn(w)));
  }
  out.denom_orbit.assign(orbit.begin(), orbit.end());
  for (const auto& [ws, inner] : groups) {
    GSum prod = inner;
    for (const auto& gamma : out.denom_orbit) {
      if (std::binary_search(ws.begin(), ws.end(), gamma)) continue;
      GSum next = prod;
      for (const auto& [mu, c] : prod.terms()) next.add(mu - gamma, c);
      prod = std::move(next);
    }
    out.num += prod;
  }
  return out;
}

GSum times_factor(const GSum& f, const GSum& factor) {
  GSum out;
  for (const auto& [mu, c] : f.terms())
    for (const auto& [nu, d] : factor.terms()) out.add(mu + nu, c * d);
  return out;
}

}  // namespace

bool proppr_check(const Algebra& g, const Weight& lam_hat, const std::vector<Weight>& S) {
  if (S.empty()) throw MathError("proppr_check: S must contain beta0");
  Weight beta0 = S.front();
  auto [p, q] = beta0_indices(g, beta0);

  // assumption (lam - xi | h(S)^*) = 0 with xi the half-sum marker of osp-odd
  Weight xi = Weight::zero(g.m(), g.n());
  if (g.kind() == Kind::OspOdd) {
    for (auto& c : xi.eps) c = Rat(1, 2);
    for (auto& c : xi.delta) c = Rat(-1, 2);
  }
  // (lam - xi) must vanish on the root-lattice part of the S-span: all form
  // values on the touched basis vectors agree (gl) or vanish (osp).
  {
    std::vector<Rat> vals;
    Weight diff = lam_hat - xi;
    for (const auto& beta : S) {
      auto [bp, bq] = beta0_indices(g, beta);
      vals.push_back(bilinear(diff, eps_vec(g.m(), g.n(), bp)));
      vals.push_back(bilinear(diff, delta_vec(g.m(), g.n(), bq)));
    }
    for (const auto& v : vals) {
      bool ok = g.is_gl() ? v == vals.front() : v.is_zero();
      if (!ok) throw MathError("proppr_check: weight violates the vanishing assumption");
    }
  }

  ClearedKW lhs = kw_cleared(g, lam_hat, S);
  // numerator of KW(lam,S)(1+e^{-beta0}):
  GSum one_plus;
  one_plus.add(Weight::zero(g.m(), g.n()), Gauss(1));
  one_plus.add(-beta0, Gauss(1));
  GSum n_full = times_factor(lhs.num, one_plus);

  GSum pr_n;
  for (const auto& [mu, c] : n_full.terms()) pr_n.add(drop_pq(g, mu, p, q), c * phase_of(mu, q));
  GSum pr_d;
  pr_d.add(Weight::zero(g.m() - 1, g.n() - 1), Gauss(1));
  for (const auto& gamma : lhs.denom_orbit) {
    GSum factor;
    factor.add(Weight::zero(g.m(), g.n()), Gauss(1));
    factor.add(-gamma, Gauss(1));
    GSum pf;
    for (const auto& [mu, c] : factor.terms()) pf.add(drop_pq(g, mu, p, q), c * phase_of(mu, q));
    pr_d = times_factor(pr_d, pf);
  }

  Algebra target = ds_target(g, 1);
  Weight lam_cut = drop_pq(g, lam_hat, p, q);
  std::vector<Weight> s_cut;
  for (size_t i = 1; i < S.size(); ++i) s_cut.push_back(drop_pq(g, S[i], p, q));

  bool sigma_branch = g.kind() == Kind::OspEven && g.m() > 1 && S.size() == 1;
  GSum rhs_num;
  std::vector<Weight> rhs_orbit;
  if (sigma_branch) {
    ClearedKW a = kw_cleared(target, lam_cut, {});
    ClearedKW b = kw_cleared(target, target.sigma(lam_cut), {});
    rhs_num = a.num + b.num;
  } else {
    long long a = static_cast<long long>(S.size());
    if (g.kind() == Kind::OspOdd || (g.kind() == Kind::OspEven && g.m() > 1)) a *= 2;
    Gauss c = phase_of(lam_hat, q);  // e^{-i pi (lam|delta_q)} = i^{2 d_q}
    ClearedKW r = kw_cleared(target, lam_cut, s_cut);
    rhs_num = r.num;
    GSum scale;
    scale.add(Weight::zero(g.m() - 1, g.n() - 1), Gauss(a) * c);
    rhs_num = times_factor(rhs_num, scale);
    rhs_orbit = r.denom_orbit;
  }

  // cross-multiplied comparison: pr(N) * D' == N' * pr(D)
  GSum lhs_poly = pr_n;
  for (const auto& gamma : rhs_orbit) {
    GSum factor;
    factor.add(Weight::zero(g.m() - 1, g.n() - 1), Gauss(1));
    factor.add(-gamma, Gauss(1));
    lhs_poly = times_factor(lhs_poly, factor);
  }
  GSum rhs_poly = times_factor(rhs_num, pr_d);
  return lhs_poly == rhs_poly;
}

}  // namespace superchar
