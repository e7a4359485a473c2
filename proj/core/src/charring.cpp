#include "superchar/charring.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace superchar {

ZSum jw(const Algebra& g, const ZSum& f) {
  ZSum out;
  for (const auto& [mu, c] : f.terms()) {
    auto norm = g.weyl_orbit_normalize(mu);
    if (!norm.regular) continue;
    for (const auto& [im, s] : g.signed_orbit(norm.rep)) out.add(im, c * norm.sign * s);
  }
  return out;
}

namespace {

// Moves negative roots of S to their positive partners, shifting lam along
// the exchanged root each time (the KW terms are invariant under this).
void normalize_iso_pairs(const Algebra& g, Weight& lam, std::vector<Weight>& iso) {
  const auto& pos = g.odd_positive();
  for (auto& beta : iso) {
    if (std::find(pos.begin(), pos.end(), beta) != pos.end()) continue;
    Weight neg = -beta;
    if (std::find(pos.begin(), pos.end(), neg) == pos.end())
      throw MathError("iso-set root is not an odd root: " + beta.str());
    lam += beta;
    beta = neg;
  }
}

// even/odd coefficient pair with xi-action swapping the components
using Pair = std::pair<long long, long long>;

std::map<Weight, Pair> subset_product(const Algebra& g,
                                      const std::vector<Weight>& excluded) {
  std::map<Weight, Pair> poly;
  poly[Weight::zero(g.m(), g.n())] = {1, 0};
  for (const auto& beta : g.odd_positive()) {
    if (std::find(excluded.begin(), excluded.end(), beta) != excluded.end()) continue;
    std::map<Weight, Pair> next = poly;
    for (const auto& [w, c] : poly) {
      Pair& slot = next[w - beta];
      slot.first += c.second;  // xi * (even part)
      slot.second += c.first;
    }
    poly = std::move(next);
  }
  return poly;
}

G0Char reduce_poly(const Algebra& g, const Weight& lam_hat,
                   const std::map<Weight, Pair>& poly) {
  G0Char out(g);
  Weight base = lam_hat + g.rho1();
  for (const auto& [w, c] : poly) {
    auto norm = g.weyl_orbit_normalize(base + w);
    if (!norm.regular) continue;
    Weight kappa = norm.rep - g.rho0();
    long long e = norm.sign * c.first;
    long long o = norm.sign * c.second;
    out.add(kappa, e, o);
  }
  return out;
}

}  // namespace

G0Char kw_char(const Algebra& g, Weight lam_hat, std::vector<Weight> iso) {
  normalize_iso_pairs(g, lam_hat, iso);
  if (!g.iso_set_check(iso)) throw MathError("kw_char: not an iso-set");
  for (const auto& beta : iso)
    if (!bilinear(lam_hat, beta).is_zero())
      throw MathError("kw_char: weight not orthogonal to the iso-set");
  return reduce_poly(g, lam_hat, subset_product(g, iso));
}

G0Char kw_char_excluded(const Algebra& g, const Weight& lam_hat,
                        const std::vector<Weight>& excluded) {
  const auto& pos = g.odd_positive();
  for (const auto& beta : excluded)
    if (std::find(pos.begin(), pos.end(), beta) == pos.end())
      throw MathError("kw_char_excluded: excluded root not in Delta_1^+");
  return reduce_poly(g, lam_hat, subset_product(g, excluded));
}

namespace {

struct EulerCache {
  std::mutex mu;
  std::unordered_map<std::string, G0Char> memo;
};
EulerCache& euler_cache() {
  static EulerCache c;
  return c;
}

}  // namespace

G0Char euler_char(const Algebra& g, const Weight& lambda) {
  std::string key = g.key() + "|" + lambda.str();
  {
    auto& c = euler_cache();
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.memo.find(key);
    if (it != c.memo.end()) return it->second;
  }
  DaggerData d = dagger(g, lambda);
  G0Char e = kw_char(g, d.dagger, d.iso).divided_by(d.j);
  // the straightened weight sits in a parity frame shifted against lambda's;
  // twist so the leading constituent is even
  if (g.is_gl()) e = e.parity_twist((d.dagger - g.rho() - lambda).parity());
  auto& c = euler_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  c.memo.emplace(key, e);
  return e;
}

G0Char euler_char_i(const Algebra& g, const Weight& lambda, int i) {
  Invariants inv = invariants(g, lambda);
  if (i == inv.tail) return euler_char(g, lambda);
  if (i == 0 && g.is_gl()) return kac_char(g, lambda);
  throw MathError("euler_char_i: only i = tail and the gl i = 0 case are defined");
}

G0Char kac_char(const Algebra& g, const Weight& lambda) {
  if (!g.is_gl()) throw MathError("kac_char: Kac modules live on the gl side");
  return kw_char(g, lambda + g.rho(), {});
}

std::vector<Weight> tail_odd_roots(const Algebra& g, const Weight& lambda) {
  Invariants inv = invariants(g, lambda);
  int s = inv.tail;
  std::vector<Weight> out;
  if (g.is_gl()) {
    for (int i = g.m() - s + 1; i <= g.m(); ++i)
      for (int j = 1; j <= s; ++j)
        out.push_back(eps_vec(g.m(), g.n(), i) - delta_vec(g.m(), g.n(), j));
    return out;
  }
  int elo = g.m() - s - (inv.t == 2 ? 1 : 0) + 1;
  int dlo = g.n() - s + 1;
  for (const auto& beta : g.odd_positive()) {
    bool inside = true;
    for (int i = 1; i <= g.m(); ++i)
      if (!beta.eps[i - 1].is_zero() && i < elo) inside = false;
    for (int j = 1; j <= g.n(); ++j)
      if (!beta.delta[j - 1].is_zero() && j < dlo) inside = false;
    if (inside) out.push_back(beta);
  }
  return out;
}

Weight rho_mixed_tail(const Algebra& g, int s) {
  if (!g.is_gl()) return g.rho();
  std::vector<Letter> word;
  for (int i = 1; i <= g.m() - s; ++i) word.push_back({true, i});
  for (int t = 1; t <= s; ++t) {
    word.push_back({true, g.m() - s + t});
    word.push_back({false, t});
  }
  for (int j = s + 1; j <= g.n(); ++j) word.push_back({false, j});
  return g.rho_of_word(word);
}

std::vector<EulerTerm> euler_decomposition(const Algebra& g, const Weight& lambda,
                                           const EdgeProvider* provider) {
  MarkedGraph graph = build_block_graph(g, {lambda}, 0, provider);
  Invariants li = invariants(g, lambda);
  std::vector<EulerTerm> out;
  for (size_t i = 0; i < graph.vertices().size(); ++i) {
    const Weight& mu = graph.vertices()[i];
    PathCounts pc = count_paths(graph, mu, lambda);
    if (!pc.incr) continue;
    EulerTerm t;
    t.mu = mu;
    t.paths = pc.incr;
    long long dn = li.norm - graph.norms()[i];
    t.coeff = (dn % 2 == 0 ? 1 : -1) * pc.incr;
    t.parity = (lambda - mu).parity();
    out.push_back(std::move(t));
  }
  return out;
}

G0Char irr_char(const Algebra& g, const Weight& lambda, const EdgeProvider* provider) {
  G0Char sum(g);
  for (const auto& t : euler_decomposition(g, lambda, provider))
    sum += t.coeff * euler_char(g, t.mu).parity_twist(t.parity);
  return sum;
}

std::pair<long long, long long> g0_multiplicity(const Algebra& g, const Weight& lambda,
                                                const Weight& kappa,
                                                const EdgeProvider* provider) {
  return irr_char(g, lambda, provider).coeff(kappa);
}

ZSum p_chi(const Algebra& g, const ZSum& f, const CoreFingerprint& chi) {
  ZSum out;
  for (const auto& [mu, c] : f.terms())
    if (core_fingerprint(g, mu) == chi) out.add(mu, c);
  return out;
}

namespace {

std::vector<Weight> translation_weights(const Algebra& g, Translation v) {
  std::vector<Weight> ws;
  for (int i = 1; i <= g.m(); ++i) ws.push_back(eps_vec(g.m(), g.n(), i));
  for (int j = 1; j <= g.n(); ++j) ws.push_back(delta_vec(g.m(), g.n(), j));
  if (v == Translation::StdDual)
    for (auto& w : ws) w = -w;
  return ws;
}

}  // namespace

ZSum theta(const Algebra& g, const ZSum& f, Translation v, const CoreFingerprint& chi,
           const CoreFingerprint& chi_to) {
  ZSum inside = p_chi(g, f, chi);
  ZSum prod;
  for (const auto& gamma : translation_weights(g, v))
    for (const auto& [mu, c] : inside.terms()) prod.add(mu + gamma, c);
  return p_chi(g, prod, chi_to);
}

std::vector<KWTerm> theta_kw_terms(const Algebra& g, const Weight& lam,
                                   const std::vector<Weight>& iso, Translation v) {
  std::vector<KWTerm> out;
  for (const auto& gamma : translation_weights(g, v)) {
    // gamma pairs with at most one iso root; paired basis weights combine
    // with their partner into a term with the root removed.
    int paired = -1;
    for (size_t i = 0; i < iso.size(); ++i)
      if (!bilinear(gamma, iso[i]).is_zero()) {
        if (paired >= 0) throw MathError("theta_kw_terms: weight meets two iso roots");
        paired = static_cast<int>(i);
      }
    if (paired < 0) {
      out.push_back({1, lam + gamma, iso});
      continue;
    }
    // For V_std keep the eps member of the pair, for the dual the -delta one;
    // the partner weight is absorbed.
    const Weight& beta = iso[paired];
    bool keep = false;
    if (v == Translation::Std) {
      // gamma is eps_p or delta_q with beta = +-(eps_p - delta_q); keep eps_p.
      keep = bilinear(gamma, gamma) == Rat(1) && bilinear(gamma, beta).sign() != 0 &&
             !gamma.eps.empty() && [&] {
               for (const auto& c : gamma.eps)
                 if (!c.is_zero()) return true;
               return false;
             }();
    } else {
      keep = [&] {
        for (const auto& c : gamma.delta)
          if (!c.is_zero()) return true;
        return false;
      }();
    }
    if (!keep) continue;
    std::vector<Weight> rest;
    for (size_t i = 0; i < iso.size(); ++i)
      if (static_cast<int>(i) != paired) rest.push_back(iso[i]);
    out.push_back({1, lam + gamma, rest});
  }
  return out;
}

G0Char kw_terms_reduce(const Algebra& g, const std::vector<KWTerm>& terms) {
  G0Char sum(g);
  for (const auto& t : terms) sum += t.coeff * kw_char(g, t.lam, t.iso);
  return sum;
}

ZSum kw_numerator(const Algebra& g, Weight lam, std::vector<Weight> iso) {
  normalize_iso_pairs(g, lam, iso);
  ZSum prod = ZSum::monomial(lam + g.rho1());
  for (const auto& beta : g.odd_positive()) {
    if (std::find(iso.begin(), iso.end(), beta) != iso.end()) continue;
    ZSum next = prod;
    for (const auto& [w, c] : prod.terms()) next.add(w - beta, c);
    prod = std::move(next);
  }
  return jw(g, prod);
}

DenomReport denominator_check(const Algebra& g) {
  int s = g.defect();
  if (s < 1) throw MathError("denominator_check: defect must be positive");
  DenomReport rep;
  long long fact = 1;
  for (int i = 2; i <= s; ++i) fact *= i;
  if (g.is_gl()) {
    rep.j = fact;
  } else if (g.kind() == Kind::OspEven && g.m() <= g.n()) {
    rep.j = std::max(1LL, (1LL << (s - 1)) * fact);
  } else {
    rep.j = (1LL << s) * fact;
  }

  // The base containing the maximal iso-set, and the pairing aligned with
  // that base: the direct identity carries +j there, the pairing reversed
  // within the same index blocks carries (-1)^{[s/2]} j.
  Weight rho_prime = g.rho();
  std::vector<Weight> S, Srev;
  if (g.is_gl()) {
    std::vector<Letter> word;
    for (int i = 1; i <= g.m() - s; ++i) word.push_back({true, i});
    for (int t = 1; t <= s; ++t) {
      word.push_back({true, g.m() - s + t});
      word.push_back({false, t});
    }
    for (int j = s + 1; j <= g.n(); ++j) word.push_back({false, j});
    rho_prime = g.rho_of_word(word);
    for (int t = 1; t <= s; ++t)
      S.push_back(eps_vec(g.m(), g.n(), g.m() - s + t) - delta_vec(g.m(), g.n(), t));
    for (int t = 1; t <= s; ++t)
      Srev.push_back(eps_vec(g.m(), g.n(), g.m() - s + t) -
                     delta_vec(g.m(), g.n(), s + 1 - t));
  } else {
    S = g.iso_chain(s);
    for (int i = 0; i < s; ++i) {
      Weight r = Weight::zero(g.m(), g.n());
      r.eps = S[i].eps;
      r.delta = S[s - 1 - i].delta;
      Srev.push_back(r);
    }
  }

  ZSum rhs = (FormalSum<long long>::monomial(Weight::zero(g.m(), g.n()), rep.j)) *
             jw(g, ZSum::monomial(g.rho0()));
  rep.direct_ok = kw_numerator(g, rho_prime, S) == rhs;

  long long sign = (s / 2) % 2 ? -1 : 1;
  ZSum rhs_rev = (FormalSum<long long>::monomial(Weight::zero(g.m(), g.n()), sign * rep.j)) *
                 jw(g, ZSum::monomial(g.rho0()));
  rep.reversed_ok = kw_numerator(g, rho_prime, Srev) == rhs_rev;
  return rep;
}

}  // namespace superchar
