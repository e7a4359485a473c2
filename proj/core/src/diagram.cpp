#include "superchar/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace superchar {

int WeightDiagram::atypicality() const {
  int k = 0;
  for (const auto& [p, c] : cells) k += c.times;
  return k;
}

std::vector<int> WeightDiagram::cross_positions() const {
  std::vector<int> xs;
  for (const auto& [p, c] : cells)
    for (int i = 0; i < c.times; ++i) xs.push_back(p);
  return xs;
}

namespace {

long long factorial(int k) {
  long long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

void put(WeightDiagram& f, int p, int gt, int lt, int times) {
  if (!gt && !lt && !times) return;
  Cell& c = f.cells[p];
  c.gt += gt;
  c.lt += lt;
  c.times += times;
}

void validate_cells(const WeightDiagram& f) {
  for (const auto& [p, c] : f.cells) {
    if (c.gt > 1 || c.lt > 1)
      throw MathError("diagram: repeated core symbol at position " + std::to_string(p));
    if (f.kind != Kind::GL) {
      if (p < 0) throw MathError("diagram: negative osp position");
      if (p == 0 && f.kind == Kind::OspEven && c.lt)
        throw MathError("diagram: '<' at the zero position");
      if (p > 0 && c.gt + c.lt + c.times > 1)
        throw MathError("diagram: stacked symbols away from zero");
      if (p == 0 && c.gt && c.lt)
        throw MathError("diagram: '>' and '<' share the zero position");
    }
  }
}

}  // namespace

WeightDiagram diagram_of_shifted(const Algebra& g, const Weight& mu) {
  if (mu.m() != g.m() || mu.n() != g.n())
    throw MathError("diagram_of_shifted: weight shape does not match algebra");
  WeightDiagram f;
  f.kind = g.kind();
  f.m = g.m();
  f.n = g.n();

  std::map<int, int> ecnt, dcnt;
  if (g.kind() == Kind::GL) {
    for (const auto& a : mu.eps) ++ecnt[a.as_int()];
    for (const auto& b : mu.delta) ++dcnt[(-b).as_int()];
  } else if (g.kind() == Kind::OspEven) {
    for (const auto& a : mu.eps) ++ecnt[a.abs().as_int()];
    for (const auto& b : mu.delta) ++dcnt[b.abs().as_int()];
  } else {
    auto half_pos = [](const Rat& v) {
      Rat twice = Rat(2) * v.abs() - Rat(1);
      if (!twice.is_integer() || twice.as_int() % 2 != 0)
        throw MathError("diagram: osp-odd coordinate not in 1/2 + Z");
      return static_cast<int>(twice.as_int() / 2);
    };
    for (const auto& a : mu.eps) ++ecnt[half_pos(a)];
    for (const auto& b : mu.delta) ++dcnt[half_pos(b)];
  }

  for (const auto& [p, e] : ecnt) {
    int d = dcnt.count(p) ? dcnt[p] : 0;
    int t = std::min(e, d);
    put(f, p, e - t, 0, t);
  }
  for (const auto& [p, d] : dcnt) {
    int e = ecnt.count(p) ? ecnt[p] : 0;
    int t = std::min(e, d);
    put(f, p, 0, d - t, 0);
  }

  // Signs.
  if (g.kind() == Kind::OspEven) {
    if (f.empty_at(0) && g.m() > 0) {
      bool neg = false, zero = false;
      for (const auto& a : mu.eps) {
        if (a.sign() < 0) neg = true;
        if (a.is_zero()) zero = true;
      }
      if (zero) throw MathError("diagram: zero eps coordinate with empty zero position");
      f.sign = neg ? DiagSign::Minus : DiagSign::Plus;
    }
  } else if (g.kind() == Kind::OspOdd) {
    const Cell* z = f.at(0);
    if (z && z->times > 0 && !z->core()) {
      bool has_plus_half = false;
      for (const auto& a : mu.eps)
        if (a == Rat(1, 2)) has_plus_half = true;
      f.sign = has_plus_half ? DiagSign::Plus : DiagSign::Minus;
    }
  }

  validate_cells(f);
  return f;
}

WeightDiagram diag(const Algebra& g, const Weight& lambda) {
  return diagram_of_shifted(g, lambda + g.rho());
}

Weight shifted_weight_of(const Algebra& g, const WeightDiagram& f) {
  if (f.kind != g.kind() || f.m != g.m() || f.n != g.n())
    throw MathError("shifted_weight_of: diagram shape does not match algebra");
  validate_cells(f);
  std::vector<Rat> evals, dvals;

  if (g.kind() == Kind::GL) {
    for (const auto& [p, c] : f.cells) {
      for (int i = 0; i < c.gt + c.times; ++i) evals.push_back(p);
      for (int i = 0; i < c.lt + c.times; ++i) dvals.push_back(Rat(-p));
    }
  } else if (g.kind() == Kind::OspEven) {
    for (const auto& [p, c] : f.cells) {
      for (int i = 0; i < c.gt + c.times; ++i) evals.push_back(p);
      for (int i = 0; i < c.lt + c.times; ++i) dvals.push_back(p);
    }
    if (f.sign != DiagSign::None) {
      if (!f.empty_at(0))
        throw MathError("osp diagram: sign with occupied zero position");
      if (evals.empty()) throw MathError("osp diagram: sign without eps symbols");
    } else if (f.empty_at(0) && g.m() > 0) {
      throw MathError("osp diagram: empty zero position needs a sign");
    }
  } else {
    const Cell* z = f.at(0);
    int k = z ? z->times : 0;
    int zg = z ? z->gt : 0;
    int zl = z ? z->lt : 0;
    for (const auto& [p, c] : f.cells) {
      if (p == 0) continue;
      for (int i = 0; i < c.gt + c.times; ++i) evals.push_back(Rat(2 * p + 1, 2));
      for (int i = 0; i < c.lt + c.times; ++i) dvals.push_back(Rat(2 * p + 1, 2));
    }
    // Zero position: delta readings are +1/2; eps readings are -1/2 except
    // for the one +1/2 forced by a (+) sign or by the unpaired slot that a
    // full stack under '>' occupies when m > n.
    for (int i = 0; i < k + zl; ++i) dvals.push_back(Rat(1, 2));
    int plus_half = 0;
    if (k > 0 && !zg && !zl) {
      if (f.sign == DiagSign::None)
        throw MathError("osp-odd diagram: zero stack needs a sign");
      plus_half = f.sign == DiagSign::Plus ? 1 : 0;
    } else if (zg) {
      plus_half = (g.m() > g.n() && k == g.n()) ? 1 : 0;
    }
    int etotal = k + zg;
    for (int i = 0; i < plus_half; ++i) evals.push_back(Rat(1, 2));
    for (int i = 0; i < etotal - plus_half; ++i) evals.push_back(Rat(-1, 2));
  }

  if (static_cast<int>(evals.size()) != g.m() || static_cast<int>(dvals.size()) != g.n())
    throw MathError("diagram: symbol counts do not match the algebra rank");

  auto desc = [](std::vector<Rat>& v) {
    std::sort(v.begin(), v.end(), [](const Rat& a, const Rat& b) { return b < a; });
  };
  desc(evals);
  desc(dvals);
  if (g.kind() == Kind::OspEven && f.sign == DiagSign::Minus && !evals.empty())
    evals.back() = -evals.back();
  if (g.kind() == Kind::GL) {
    // delta values sort descending as coordinates (their positions ascend)
  }
  return Weight(std::move(evals), std::move(dvals));
}

Weight module_weight_of(const Algebra& g, const WeightDiagram& f) {
  return shifted_weight_of(g, f) - g.rho();
}

std::string render(const WeightDiagram& f) {
  if (f.cells.empty()) return f.kind == Kind::GL ? "0" : "";
  std::string out;
  int lo, hi;
  if (f.kind == Kind::GL) {
    lo = f.cells.begin()->first;
    hi = f.cells.rbegin()->first;
    out += std::to_string(lo - 1);
  } else {
    lo = 0;
    hi = f.cells.rbegin()->first;
    if (f.sign == DiagSign::Plus) out += "(+)";
    if (f.sign == DiagSign::Minus) out += "(-)";
  }
  for (int p = lo; p <= hi; ++p) {
    const Cell* c = f.at(p);
    if (!c || !c->occupied()) {
      out += "o";
      continue;
    }
    std::string cell;
    if (c->gt) cell += ">";
    if (c->times == 1) cell += "x";
    if (c->times > 1) cell += "x^" + std::to_string(c->times);
    if (c->lt) cell += "<";
    bool compound = (c->gt + (c->times ? 1 : 0) + c->lt) > 1;
    out += compound ? "[" + cell + "]" : cell;
  }
  return out;
}

WeightDiagram parse_diagram(const Algebra& g, const std::string& text) {
  WeightDiagram f;
  f.kind = g.kind();
  f.m = g.m();
  f.n = g.n();
  size_t i = 0;
  auto fail = [&](const std::string& msg) {
    throw ParseError("diagram '" + text + "': " + msg);
  };

  int pos = g.kind() == Kind::GL ? 1 : 0;
  // optional sign
  if (text.compare(i, 3, "(+)") == 0) { f.sign = DiagSign::Plus; i += 3; }
  else if (text.compare(i, 3, "(-)") == 0) { f.sign = DiagSign::Minus; i += 3; }
  // optional leading coordinate (gl only)
  if (f.sign == DiagSign::None && i < text.size() &&
      (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '-')) {
    if (g.kind() != Kind::GL) fail("leading coordinate is a gl notation");
    size_t j = i + (text[i] == '-' ? 1 : 0);
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    pos = std::stoi(text.substr(i, j - i)) + 1;
    i = j;
  }

  auto parse_symbol = [&](Cell& c) {
    // consumes one symbol at text[i]; multi-byte forms: 'x^k', unicode
    if (text.compare(i, 3, "\xc3\x97") == 0) {}  // never: 2-byte handled below
    if (text.compare(i, 2, "\xc3\x97") == 0 || text[i] == 'x' || text[i] == 'X') {
      i += text[i] == 'x' || text[i] == 'X' ? 1 : 2;
      int k = 1;
      if (i < text.size() && text[i] == '^') {
        size_t j = ++i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) fail("missing exponent after ^");
        k = std::stoi(text.substr(i, j - i));
        i = j;
      }
      c.times += k;
    } else if (text.compare(i, 3, "\xe2\x88\x98") == 0) {  // unicode ring
      i += 3;
    } else if (text[i] == 'o' || text[i] == 'O') {
      ++i;
    } else if (text[i] == '>') {
      ++c.gt;
      ++i;
    } else if (text[i] == '<') {
      ++c.lt;
      ++i;
    } else {
      fail(std::string("unexpected character '") + text[i] + "'");
    }
  };

  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
    Cell c;
    if (text[i] == '[') {
      ++i;
      while (i < text.size() && text[i] != ']') parse_symbol(c);
      if (i == text.size()) fail("unterminated '['");
      ++i;
    } else {
      parse_symbol(c);
    }
    if (c.occupied()) f.cells[pos] = c;
    ++pos;
  }
  validate_cells(f);
  return f;
}

WeightDiagram core_of(const WeightDiagram& f) {
  WeightDiagram c;
  c.kind = f.kind;
  c.m = f.m;
  c.n = f.n;
  for (const auto& [p, cell] : f.cells) {
    if (cell.core()) {
      Cell cc;
      cc.gt = cell.gt;
      cc.lt = cell.lt;
      c.cells[p] = cc;
    }
  }
  return c;
}

namespace {

// tail and y0 of a gl diagram: the longest prefix of x's (with multiplicity)
// such that no empty cell separates consecutive occupied positions, and the
// position of the last x of that prefix.
std::pair<int, std::optional<int>> gl_tail_walk(const WeightDiagram& f) {
  std::vector<int> xs = f.cross_positions();
  if (xs.empty()) return {0, std::nullopt};
  int s = f.times_at(xs[0]);
  int y0 = xs[0];
  size_t idx = s;
  while (idx < xs.size()) {
    int q = xs[idx];
    bool gap = false;
    for (int p = y0 + 1; p < q; ++p)
      if (f.empty_at(p)) { gap = true; break; }
    if (gap) break;
    s += f.times_at(q);
    idx += f.times_at(q);
    y0 = q;
  }
  return {s, y0};
}

int osp_tail(const WeightDiagram& f) {
  int k = f.times_at(0);
  if (f.kind == Kind::OspOdd && f.sign == DiagSign::Plus) --k;
  return k;
}

}  // namespace

Howl howl(const Algebra& g, const Weight& lambda) {
  WeightDiagram f = diag(g, lambda);
  int k = f.atypicality();
  int t = t_value(g, lambda);

  Howl h;
  if (g.is_gl()) {
    h.algebra = k > 0 ? Algebra::make(Kind::GL, k, k) : Algebra::trivial(Kind::GL);
  } else if (g.kind() == Kind::OspEven) {
    int hm = k + (t == 2 ? 1 : 0);
    h.algebra = (hm + k) > 0 ? Algebra::make(Kind::OspEven, hm, k)
                             : Algebra::trivial(Kind::OspEven);
  } else {
    h.algebra = k > 0 ? Algebra::make(Kind::OspOdd, k, k) : Algebra::trivial(Kind::OspOdd);
  }

  WeightDiagram hd;
  hd.kind = h.algebra.kind();
  hd.m = h.algebra.m();
  hd.n = h.algebra.n();

  // Core symbols to delete; for osp(2m|2n) the zero '>' survives as part of
  // the equal-defect algebra's principal-block shape.  A deleted core shifts
  // every strictly larger position down by one; zero-position crosses of the
  // odd case stay put when their '<' or '>' neighbour is removed.
  std::vector<int> removed;
  for (const auto& [p, c] : f.cells) {
    if (!c.core()) continue;
    if (g.kind() == Kind::OspEven && p == 0) continue;
    if (c.times && !(g.kind() == Kind::OspOdd && p == 0))
      throw MathError("howl: core symbol stacked on x at position " + std::to_string(p));
    removed.push_back(p);
  }
  for (const auto& [p, c] : f.cells) {
    if (!c.times) continue;
    int shift = 0;
    for (int q : removed)
      if (q < p) ++shift;
    put(hd, p - shift, 0, 0, c.times);
  }
  if (g.kind() == Kind::OspEven && t == 2) put(hd, 0, 1, 0, 0);

  if (g.kind() == Kind::OspEven) {
    hd.sign = f.sign;  // zero stays empty or keeps its stack, see text refs
    if (!hd.empty_at(0)) hd.sign = DiagSign::None;
  } else if (g.kind() == Kind::OspOdd) {
    int k0 = hd.times_at(0);
    if (k0 > 0) {
      int tl = osp_tail(f);
      if (k0 - tl != 0 && k0 - tl != 1)
        throw MathError("howl: osp-odd tail bookkeeping failed");
      hd.sign = (k0 == tl) ? DiagSign::Minus : DiagSign::Plus;
    }
  }

  h.diagram = hd;
  h.weight = (h.algebra.m() + h.algebra.n()) > 0
                 ? module_weight_of(h.algebra, hd)
                 : Weight();
  return h;
}

int t_value(const Algebra& g, const Weight& lambda) {
  if (g.kind() == Kind::OspOdd) return 1;
  if (g.kind() == Kind::GL) return 0;
  WeightDiagram f = diag(g, lambda);
  const Cell* z = f.at(0);
  return (z && z->gt) ? 2 : 0;
}

Invariants invariants(const Algebra& g, const Weight& lambda) {
  WeightDiagram f = diag(g, lambda);
  Invariants inv;
  inv.atypicality = f.atypicality();
  inv.t = t_value(g, lambda);

  if (g.is_gl()) {
    auto [s, y0] = gl_tail_walk(f);
    inv.tail = s;
    inv.y0 = y0;
    bool seen_core = false;
    inv.stable = true;
    for (const auto& [p, c] : f.cells) {
      if (c.core()) seen_core = true;
      if (c.times && seen_core) inv.stable = false;
    }
  } else {
    inv.tail = osp_tail(f);
    inv.stable = true;
    if (inv.atypicality > 0) inv.y0 = 0;
  }

  Howl h = howl(g, lambda);
  std::vector<int> xs = h.diagram.cross_positions();
  long long sum = 0;
  for (int x : xs) sum += x;
  int k = inv.atypicality;
  inv.norm = (inv.t == 2) ? inv.tail - k + sum : sum;
  if (g.is_gl()) {
    long long gr = 0;
    for (int x : xs) gr += x - (xs.empty() ? 0 : xs.front());
    inv.norm_gr = gr - static_cast<long long>(k) * (k - 1) / 2;
  } else if (g.kind() == Kind::OspEven) {
    inv.norm_gr = sum;
  } else {
    inv.norm_gr = k - inv.tail + sum;
  }
  inv.kostant = inv.norm_gr == 0;
  return inv;
}

DaggerData dagger_of_diagram(const Algebra& g, const WeightDiagram& f) {
  if (!g.is_gl()) throw MathError("dagger_of_diagram: gl diagrams only");
  DaggerData d;
  auto [s, y0] = gl_tail_walk(f);
  d.tail = s;
  d.y0 = y0;
  d.j = factorial(s);
  if (s == 0) {
    d.dagger = shifted_weight_of(g, f);
    return d;
  }
  WeightDiagram fd = f;
  int moved = 0;
  for (auto& [p, c] : fd.cells) {
    if (p < *y0 && c.times) {
      moved += c.times;
      c.times = 0;
    }
  }
  fd.cells[*y0].times += moved;
  for (auto it = fd.cells.begin(); it != fd.cells.end();)
    it = it->second.occupied() ? std::next(it) : fd.cells.erase(it);
  d.dagger = shifted_weight_of(g, fd);

  // Iso-set from the coordinate runs at the stack value.
  Rat v(*y0);
  int p1 = 0, q = 0;
  for (int i = 0; i < d.dagger.m(); ++i)
    if (d.dagger.eps[i] == v) { p1 = i + 1; break; }
  for (int j = d.dagger.n(); j >= 1; --j)
    if (d.dagger.delta[j - 1] == -v) { q = j; break; }
  if (p1 == 0 || q < s)
    throw MathError("dagger: could not locate the vertical tail runs");
  for (int i = 0; i < s; ++i)
    d.iso.push_back(eps_vec(g.m(), g.n(), p1 + i) - delta_vec(g.m(), g.n(), q - s + 1 + i));
  for (const auto& beta : d.iso)
    if (!bilinear(d.dagger, beta).is_zero())
      throw MathError("dagger: iso-set not orthogonal to the straightened weight");
  return d;
}

DaggerData dagger(const Algebra& g, const Weight& lambda) {
  if (g.is_gl()) return dagger_of_diagram(g, diag(g, lambda));
  Invariants inv = invariants(g, lambda);
  DaggerData d;
  d.tail = inv.tail;
  d.y0 = inv.y0;
  d.dagger = lambda + g.rho();
  d.iso = g.iso_chain(inv.tail);
  int s = inv.tail;
  if (inv.t == 0) {
    d.j = s == 0 ? 1 : (1LL << (s - 1)) * factorial(s);
  } else {
    d.j = (1LL << s) * factorial(s);
  }
  return d;
}

WeightDiagram tau(const Algebra& g, const WeightDiagram& f) {
  if (g.kind() != Kind::OspEven || g.m() < 1)
    throw MathError("tau: expects an osp(2m+2|2n) diagram");
  const Cell* z = f.at(0);
  if (!z || z->gt != 1) throw MathError("tau: zero position must carry '>' (t = 2)");
  for (const auto& [p, c] : f.cells)
    if (c.core() && !(p == 0 && c.gt == 1 && !c.lt))
      throw MathError("tau: diagram is not core-free");

  WeightDiagram out;
  out.kind = Kind::OspOdd;
  out.m = g.m() - 1;
  out.n = g.n();
  int tail_in = z->times;
  for (const auto& [p, c] : f.cells) {
    if (p == 0) {
      if (c.times) put(out, 0, 0, 0, c.times);
    } else {
      put(out, p - 1, 0, 0, c.times);
    }
  }
  int k0 = out.times_at(0);
  if (k0 > 0) out.sign = (k0 == tail_in) ? DiagSign::Minus : DiagSign::Plus;
  return out;
}

WeightDiagram tau_inverse(const Algebra& g, const WeightDiagram& f) {
  if (g.kind() != Kind::OspOdd) throw MathError("tau_inverse: expects osp(2m+1|2n)");
  for (const auto& [p, c] : f.cells)
    if (c.core()) throw MathError("tau_inverse: diagram is not core-free");
  WeightDiagram out;
  out.kind = Kind::OspEven;
  out.m = g.m() + 1;
  out.n = g.n();
  int k0 = f.times_at(0);
  int tail_in = k0 - (f.sign == DiagSign::Plus ? 1 : 0);
  put(out, 0, 1, 0, tail_in);
  if (f.sign == DiagSign::Plus) put(out, 1, 0, 0, 1);
  for (const auto& [p, c] : f.cells)
    if (p > 0) put(out, p + 1, 0, 0, c.times);
  return out;
}

bool t_shift_valid(const Algebra& g, const Weight& lambda, int a) {
  WeightDiagram f = diag(g, lambda);
  if (g.kind() != Kind::GL && a < 0) return false;
  const Cell* ca = f.at(a);
  const Cell* cb = f.at(a + 1);
  bool core_a = ca && ca->core();
  bool core_b = cb && cb->core();
  return core_a != core_b;
}

Weight t_shift(const Algebra& g, const Weight& lambda, int a) {
  if (!t_shift_valid(g, lambda, a))
    throw MathError("t_shift: positions " + std::to_string(a) + "," +
                    std::to_string(a + 1) + " do not carry exactly one core symbol");
  WeightDiagram f = diag(g, lambda);
  Cell ca = f.at(a) ? *f.at(a) : Cell{};
  Cell cb = f.at(a + 1) ? *f.at(a + 1) : Cell{};
  f.cells.erase(a);
  f.cells.erase(a + 1);
  if (cb.occupied()) f.cells[a] = cb;
  if (ca.occupied()) f.cells[a + 1] = ca;
  return module_weight_of(g, f);
}

bool operator<(const CoreFingerprint& a, const CoreFingerprint& b) {
  if (a.sigma_flag != b.sigma_flag) return a.sigma_flag < b.sigma_flag;
  if (a.eps_vals != b.eps_vals) return a.eps_vals < b.eps_vals;
  return a.delta_vals < b.delta_vals;
}

std::string CoreFingerprint::str() const {
  std::string s = "{";
  for (const auto& [v, k] : eps_vals) s += "e" + v.str() + (k > 1 ? "*" + std::to_string(k) : "") + " ";
  for (const auto& [v, k] : delta_vals) s += "d" + v.str() + (k > 1 ? "*" + std::to_string(k) : "") + " ";
  if (sigma_flag) s += sigma_flag > 0 ? "+" : "-";
  return s + "}";
}

CoreFingerprint core_fingerprint(const Algebra& g, const Weight& mu) {
  std::map<Rat, int> e, d;
  if (g.kind() == Kind::GL) {
    for (const auto& a : mu.eps) ++e[a];
    for (const auto& b : mu.delta) ++d[-b];
  } else {
    for (const auto& a : mu.eps) ++e[a.abs()];
    for (const auto& b : mu.delta) ++d[b.abs()];
  }
  CoreFingerprint fp;
  if (g.kind() == Kind::OspEven) {
    int s = 1;
    for (const auto& a : mu.eps) s *= a.sign();
    fp.sigma_flag = s;
  }
  for (auto& [v, ke] : e) {
    auto it = d.find(v);
    if (it != d.end()) {
      int c = std::min(ke, it->second);
      ke -= c;
      it->second -= c;
    }
    if (ke) fp.eps_vals.emplace_back(v, ke);
  }
  for (const auto& [v, kd] : d)
    if (kd) fp.delta_vals.emplace_back(v, kd);
  return fp;
}

}  // namespace superchar
