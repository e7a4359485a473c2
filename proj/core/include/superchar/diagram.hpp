#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superchar/algebra.hpp"

namespace superchar {

enum class DiagSign { None, Plus, Minus };

/// One position of a weight diagram: gt counts '>', lt counts '<', times
/// counts 'x'.  Valid diagrams carry at most one of each core symbol per
/// position; only x may stack (at position zero for osp, anywhere for the
/// straightened gl shapes).
struct Cell {
  int gt = 0;
  int lt = 0;
  int times = 0;
  bool occupied() const { return gt || lt || times; }
  bool core() const { return gt || lt; }
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Labeling of the (half-)integer line by >, <, x, o encoding a rho-shifted
/// weight.  gl positions live on Z (the coordinate itself), osp positions on
/// N (|coordinate|, shifted by -1/2 for odd M).
struct WeightDiagram {
  Kind kind = Kind::GL;
  int m = 0, n = 0;
  std::map<int, Cell> cells;  // only occupied positions
  DiagSign sign = DiagSign::None;

  const Cell* at(int p) const {
    auto it = cells.find(p);
    return it == cells.end() ? nullptr : &it->second;
  }
  int times_at(int p) const {
    const Cell* c = at(p);
    return c ? c->times : 0;
  }
  bool empty_at(int p) const {
    const Cell* c = at(p);
    return !c || !c->occupied();
  }
  int atypicality() const;
  /// x positions in increasing order, with multiplicity.
  std::vector<int> cross_positions() const;
  friend bool operator==(const WeightDiagram& a, const WeightDiagram& b) {
    return a.kind == b.kind && a.m == b.m && a.n == b.n && a.sign == b.sign &&
           a.cells == b.cells;
  }
};

/// Diagram of a shifted weight mu (callers pass lambda + rho).
WeightDiagram diagram_of_shifted(const Algebra& g, const Weight& mu);
/// Diagram of lambda + rho for a module weight lambda.
WeightDiagram diag(const Algebra& g, const Weight& lambda);
/// Inverse of diagram_of_shifted.
Weight shifted_weight_of(const Algebra& g, const WeightDiagram& f);
/// Module weight: shifted_weight_of minus rho.
Weight module_weight_of(const Algebra& g, const WeightDiagram& f);

std::string render(const WeightDiagram& f);
WeightDiagram parse_diagram(const Algebra& g, const std::string& text);

/// Core diagram: all x removed, sign dropped.
WeightDiagram core_of(const WeightDiagram& f);

struct Howl {
  Algebra algebra = Algebra::trivial(Kind::GL);  // equal-defect core-free algebra
  Weight weight;                                  // module weight there
  WeightDiagram diagram;
};
/// Removes the core symbols (keeping the zero '>' in the t=2 case) and
/// compacts; the image generates the principal block of the smaller algebra.
Howl howl(const Algebra& g, const Weight& lambda);

/// 0 for gl and for osp(2m|2n) blocks with empty zero core position,
/// 2 when the zero position of the core carries '>', 1 for osp(2m+1|2n).
int t_value(const Algebra& g, const Weight& lambda);

struct Invariants {
  int atypicality = 0;
  int tail = 0;
  std::optional<int> y0;  // nullopt encodes +infinity
  bool stable = false;    // gl notion; true for osp
  bool kostant = false;
  long long norm = 0;     // defined on atypical weights
  long long norm_gr = 0;
  int t = 0;
};
Invariants invariants(const Algebra& g, const Weight& lambda);

struct DaggerData {
  Weight dagger;              // shifted weight with the vertical tail
  std::vector<Weight> iso;    // maximal iso-set orthogonal to it
  int tail = 0;
  std::optional<int> y0;
  long long j = 1;            // tail! for gl, j_s for osp
};
/// gl: straightens the tail of diag(lambda) onto y0.  osp: lambda + rho with
/// the zero-position stack as the vertical tail.
DaggerData dagger(const Algebra& g, const Weight& lambda);
/// Same, starting from an arbitrary diagram in the Lambda>= range.
DaggerData dagger_of_diagram(const Algebra& g, const WeightDiagram& f);

/// Tail-preserving bijection between core-free osp(2m+2|2n) diagrams with '>'
/// at zero and signed core-free osp(2m+1|2n) diagrams.
WeightDiagram tau(const Algebra& g, const WeightDiagram& f);
WeightDiagram tau_inverse(const Algebra& g, const WeightDiagram& f);

/// True iff exactly one of positions a, a+1 carries a core symbol.
bool t_shift_valid(const Algebra& g, const Weight& lambda, int a);
/// Translation move: swaps positions a, a+1 of diag(lambda).
Weight t_shift(const Algebra& g, const Weight& lambda, int a);

/// Canonical invariant of the central character chi_{mu - rho}: the multiset
/// pair of eps/delta values after cancelling atypical pairs (absolute values
/// for osp, plus the sign flag separating sigma-twisted characters).
struct CoreFingerprint {
  std::vector<std::pair<Rat, int>> eps_vals;    // value -> multiplicity, sorted
  std::vector<std::pair<Rat, int>> delta_vals;  // gl: negated; osp: absolute
  int sigma_flag = 0;                           // osp(2m|2n): sgn(prod a_i)
  friend bool operator==(const CoreFingerprint&, const CoreFingerprint&) = default;
  friend bool operator<(const CoreFingerprint& a, const CoreFingerprint& b);
  std::string str() const;
};
CoreFingerprint core_fingerprint(const Algebra& g, const Weight& mu_shifted);

}  // namespace superchar
