#pragma once

#include <map>
#include <string>
#include <vector>

#include "superchar/diagram.hpp"

namespace superchar {

struct Arc {
  int from = 0;  // position of x
  int to = 0;    // position of the matched empty cell
  friend bool operator==(const Arc& a, const Arc& b) {
    return a.from == b.from && a.to == b.to;
  }
};

/// Non-crossing matching of each x with the next free empty position to its
/// right, core symbols ignored.  gl only.
std::vector<Arc> arc_diagram(const Algebra& g, const Weight& nu);

struct Move {
  Weight source;
  Weight target;
  int weight = 0;  // arcs of the target strictly above the landing cell
  int b = 0;       // 1 + crosses left of the landing cell in the target
  int bp = 0;      // landing position
};

/// All single moves out of nu (tail moves included; the graph filters).
std::vector<Move> moves_from(const Algebra& g, const Weight& nu);
/// All single moves producing lambda.
std::vector<Move> moves_into(const Algebra& g, const Weight& lambda);

/// Edge source for the osp block graphs, whose generation rules live outside
/// this library.  The default build ships no implementation.
struct EdgeProvider {
  virtual ~EdgeProvider() = default;
  virtual std::vector<Move> moves_from(const Algebra& g, const Weight& nu) const = 0;
  virtual std::vector<Move> moves_into(const Algebra& g, const Weight& lambda) const = 0;
};

/// Finite truncation of a block graph: the predecessor closure of the seeds
/// plus forward moves bounded by max_norm_gr.  Z-graded by ||.||_gr; every
/// edge carries the marks b, b' and the sign kappa derived from the norm
/// difference of its endpoints.
class MarkedGraph {
 public:
  struct Edge {
    int src = 0;
    int dst = 0;
    int b = 0;
    int bp = 0;
    int kappa = 1;
  };

  const Algebra& algebra() const { return alg_; }
  const std::vector<Weight>& vertices() const { return verts_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<long long>& norms() const { return norm_; }
  const std::vector<long long>& norms_gr() const { return norm_gr_; }
  const std::vector<char>& kostant() const { return kostant_; }
  int index_of(const Weight& w) const;  // -1 when absent

  friend MarkedGraph build_block_graph(const Algebra& g, const std::vector<Weight>& seeds,
                                       long long max_norm_gr, const EdgeProvider* provider);

 private:
  Algebra alg_ = Algebra::trivial(Kind::GL);
  std::vector<Weight> verts_;
  std::map<Weight, int> index_;
  std::vector<Edge> edges_;
  std::vector<long long> norm_, norm_gr_;
  std::vector<char> kostant_;
};

MarkedGraph build_block_graph(const Algebra& g, const std::vector<Weight>& seeds,
                              long long max_norm_gr = 0,
                              const EdgeProvider* provider = nullptr);

struct PathCounts {
  long long incr = 0;         // strictly increasing b' marks
  long long decr_signed = 0;  // (-1)^{||.||-diff} sum over decreasing paths of (-1)^len
};
PathCounts count_paths(const MarkedGraph& graph, const Weight& mu, const Weight& lambda);

using Matrix = std::vector<std::vector<long long>>;
/// A^>(kappa): decreasing-path sums of kappa(P).
Matrix matrix_decreasing(const MarkedGraph& graph);
/// A^<(kappa): increasing-path sums of (-1)^len kappa(P).
Matrix matrix_increasing(const MarkedGraph& graph);

/// Verifies property (BB) for b' and A^> A^< = A^< A^> = Id on the truncation.
bool inversion_check(const MarkedGraph& graph, std::string* err = nullptr);

/// Number of increasing paths into lambda from the Kostant weights of its
/// block.  Native for gl; osp needs a provider.
long long m_lambda(const Algebra& g, const Weight& lambda,
                   const EdgeProvider* provider = nullptr);

std::string graph_dot(const MarkedGraph& graph);

}  // namespace superchar
