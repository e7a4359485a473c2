#include "superchar/enumerate.hpp"

#include <algorithm>

namespace superchar {

namespace {

// Chooses positions for a multiset of symbols recursively.
void place_symbols(const Algebra& g, WeightDiagram& f, int gts, int lts, int crosses,
                   int next_pos, int hi, std::vector<Weight>& out) {
  if (gts == 0 && lts == 0 && crosses == 0) {
    // osp zero stacks need their sign variants
    if (g.kind() == Kind::OspEven && f.empty_at(0) && g.m() > 0) {
      for (DiagSign s : {DiagSign::Plus, DiagSign::Minus}) {
        WeightDiagram v = f;
        v.sign = s;
        out.push_back(module_weight_of(g, v));
      }
      return;
    }
    if (g.kind() == Kind::OspOdd) {
      const Cell* z = f.at(0);
      if (z && z->times > 0 && !z->core()) {
        for (DiagSign s : {DiagSign::Plus, DiagSign::Minus}) {
          WeightDiagram v = f;
          v.sign = s;
          out.push_back(module_weight_of(g, v));
        }
        return;
      }
    }
    out.push_back(module_weight_of(g, f));
    return;
  }
  if (next_pos > hi) return;

  // zero position of osp may stack crosses and carry one '>' (even) or one
  // of '>','<' (odd); everywhere else at most one symbol.
  bool at_zero = g.kind() != Kind::GL && next_pos == 0;
  std::vector<Cell> options;
  options.push_back({});  // leave empty
  if (at_zero) {
    for (int k = 0; k <= crosses; ++k) {
      if (k > 0) options.push_back({0, 0, k});
      if (gts > 0) options.push_back({1, 0, k});
      if (g.kind() == Kind::OspOdd && lts > 0) options.push_back({0, 1, k});
    }
  } else {
    if (crosses > 0) options.push_back({0, 0, 1});
    if (gts > 0) options.push_back({1, 0, 0});
    if (lts > 0) options.push_back({0, 1, 0});
  }
  for (const Cell& c : options) {
    WeightDiagram v = f;
    if (c.occupied()) v.cells[next_pos] = c;
    place_symbols(g, v, gts - c.gt, lts - c.lt, crosses - c.times, next_pos + 1, hi, out);
  }
}

}  // namespace

std::vector<Weight> dominant_weights_in_window(const Algebra& g, int lo, int hi) {
  std::vector<Weight> out;
  int dmax = g.defect();
  int start = g.kind() == Kind::GL ? lo : 0;
  for (int k = 0; k <= dmax; ++k) {
    WeightDiagram f;
    f.kind = g.kind();
    f.m = g.m();
    f.n = g.n();
    place_symbols(g, f, g.m() - k, g.n() - k, k, start, hi, out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace superchar
