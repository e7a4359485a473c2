#include <doctest.h>

#include "superchar/diagram.hpp"
#include "superchar/enumerate.hpp"

using namespace superchar;

namespace {

Weight w(std::vector<long long> e, std::vector<long long> d) {
  Weight out;
  for (auto v : e) out.eps.push_back(Rat(v));
  for (auto v : d) out.delta.push_back(Rat(v));
  return out;
}

}  // namespace

TEST_CASE("principal diagrams of the zero weight") {
  // gl(3|3): three crosses in a row
  Algebra g33 = Algebra::make(Kind::GL, 3, 3);
  CHECK(render(diag(g33, Weight::zero(3, 3))) == "0xxx");

  // gl(4|3): crosses then '>'
  Algebra g43 = Algebra::make(Kind::GL, 4, 3);
  CHECK(render(diag(g43, Weight::zero(4, 3))) == "0xxx>");

  // osp(2n|2n): x^n at zero
  Algebra ge = Algebra::make(Kind::OspEven, 2, 2);
  CHECK(render(diag(ge, Weight::zero(2, 2))) == "x^2");

  // osp(2n+1|2n): (-) x^n at zero
  Algebra go = Algebra::make(Kind::OspOdd, 2, 2);
  CHECK(render(diag(go, Weight::zero(2, 2))) == "(-)x^2");
}

TEST_CASE("osp(3|2) trivial, standard and adjoint fixtures") {
  Algebra g = Algebra::make(Kind::OspOdd, 1, 1);
  CHECK(render(diag(g, Weight::zero(1, 1))) == "(-)x");
  CHECK(render(diag(g, w({1}, {0}))) == "(+)x");  // standard module
  Weight adj = w({0}, {2});                       // highest root 2 delta
  CHECK(render(diag(g, adj)) == ">o<");
  CHECK(module_weight_of(g, diag(g, adj)) == adj);
}

TEST_CASE("diagram round trips on enumerated windows") {
  for (auto [kind, m, n] : {std::tuple<Kind, int, int>{Kind::GL, 2, 2},
                            {Kind::GL, 3, 2},
                            {Kind::OspEven, 2, 2},
                            {Kind::OspEven, 3, 2},
                            {Kind::OspOdd, 2, 2},
                            {Kind::OspOdd, 2, 1}}) {
    Algebra g = Algebra::make(kind, m, n);
    auto weights = dominant_weights_in_window(g, 0, 4);
    CHECK(weights.size() > 10);
    for (const auto& lam : weights) {
      WeightDiagram f = diag(g, lam);
      CHECK(module_weight_of(g, f) == lam);
      WeightDiagram f2 = parse_diagram(g, render(f));
      CHECK(f2 == f);
    }
  }
}

TEST_CASE("tail examples") {
  // osp: tail(o x x) = 0, tail((+) x^3 x) = 2
  Algebra g = Algebra::make(Kind::OspEven, 2, 2);
  Weight a = module_weight_of(g, parse_diagram(g, "(+)oxx"));
  CHECK(invariants(g, a).tail == 0);

  Algebra go = Algebra::make(Kind::OspOdd, 4, 4);
  Weight b = module_weight_of(go, parse_diagram(go, "(+)x^3x"));
  CHECK(invariants(go, b).tail == 2);

  // gl stable: tail(o x x o x x x) = 2
  Algebra gl = Algebra::make(Kind::GL, 5, 5);
  Weight c = module_weight_of(gl, parse_diagram(gl, "0oxxoxxx"));
  auto inv = invariants(gl, c);
  CHECK(inv.tail == 2);
  CHECK(inv.stable);
}

TEST_CASE("gl(2|2) principal block weights (s;i)") {
  Algebra g = Algebra::make(Kind::GL, 2, 2);
  auto lam = [&](long long s, long long i) {
    Weight b1 = eps_vec(2, 2, 1) - delta_vec(2, 2, 2);
    Weight b2 = eps_vec(2, 2, 2) - delta_vec(2, 2, 1);
    Weight out = Weight::zero(2, 2);
    out += Rat(s) * (b1 + b2);
    out += Rat(i) * b1;
    return out;
  };
  for (long long s = -2; s <= 2; ++s)
    for (long long i = 0; i <= 4; ++i) {
      auto inv = invariants(g, lam(s, i));
      CHECK(inv.norm_gr == i);
      CHECK(inv.tail == (i == 0 ? 2 : 1));
      CHECK(inv.atypicality == 2);
      // crosses sit at consecutive-coordinate positions s+1 and s+i+2
      auto xs = diag(g, lam(s, i)).cross_positions();
      REQUIRE(xs.size() == 2);
      CHECK(xs[1] - xs[0] == i + 1);
    }
}

TEST_CASE("straightening fixtures with vertical tails") {
  Algebra g = Algebra::make(Kind::GL, 6, 5);
  WeightDiagram f1 = parse_diagram(g, "0>ox>xxox<");
  auto d1 = dagger_of_diagram(g, f1);
  CHECK(d1.tail == 3);
  CHECK(d1.y0 == 6);
  CHECK(render(diagram_of_shifted(g, d1.dagger)) == "0>oo>ox^3ox<");
  // S = {eps_2 - delta_1, eps_3 - delta_2, eps_4 - delta_3}
  REQUIRE(d1.iso.size() == 3);
  CHECK(d1.iso[0] == eps_vec(6, 5, 2) - delta_vec(6, 5, 1));
  CHECK(d1.iso[1] == eps_vec(6, 5, 3) - delta_vec(6, 5, 2));
  CHECK(d1.iso[2] == eps_vec(6, 5, 4) - delta_vec(6, 5, 3));

  Algebra g2 = Algebra::make(Kind::GL, 8, 8);
  WeightDiagram f2 = parse_diagram(g2, "0x^3>x^2<ox^2");
  auto d2 = dagger_of_diagram(g2, f2);
  CHECK(d2.tail == 5);
  CHECK(d2.y0 == 3);
  CHECK(diagram_of_shifted(g2, d2.dagger) == parse_diagram(g2, "0o>x^5<ox^2"));
}

TEST_CASE("dagger on weights: idempotence and orthogonality") {
  Algebra g = Algebra::make(Kind::GL, 3, 2);
  for (const auto& lam : dominant_weights_in_window(g, 0, 4)) {
    auto d = dagger(g, lam);
    for (const auto& beta : d.iso) CHECK(bilinear(d.dagger, beta) == Rat(0));
    auto again = dagger_of_diagram(g, diagram_of_shifted(g, d.dagger));
    CHECK(again.dagger == d.dagger);
    CHECK(again.tail == d.tail);
    if (invariants(g, lam).atypicality == 0) {
      CHECK(d.tail == 0);
      CHECK(d.iso.empty());
      CHECK(d.dagger == lam + g.rho());
    }
  }
}

TEST_CASE("howl removes cores and preserves the tail") {
  // the worked example: > x < x o < o x
  Algebra gl45 = Algebra::make(Kind::GL, 4, 5);
  WeightDiagram f = parse_diagram(gl45, "0>x<xo<ox");
  Weight lam = module_weight_of(gl45, f);
  Howl h = howl(gl45, lam);
  CHECK(h.algebra.key() == "gl:3,3");
  CHECK(render(h.diagram).substr(1) == "xxoox");  // window starts one right of lo-1

  Algebra osp8 = Algebra::make(Kind::OspEven, 4, 5);
  WeightDiagram fo = parse_diagram(osp8, ">x<xo<ox");
  Weight lam2 = module_weight_of(osp8, fo);
  Howl h2 = howl(osp8, lam2);
  CHECK(h2.algebra.key() == "ospE:4,3");
  CHECK(render(h2.diagram) == ">xxoox");

  Algebra osp9 = Algebra::make(Kind::OspOdd, 4, 5);
  WeightDiagram f3 = parse_diagram(osp9, ">x<xo<ox");
  Weight lam3 = module_weight_of(osp9, f3);
  Howl h3 = howl(osp9, lam3);
  CHECK(h3.algebra.key() == "ospO:3,3");
  CHECK(render(h3.diagram) == "(+)xxoox");
  CHECK(invariants(osp9, lam3).tail == invariants(h3.algebra, h3.weight).tail);
}

TEST_CASE("norms: gl gap count and osp position sums") {
  Algebra g33 = Algebra::make(Kind::GL, 3, 3);
  Weight lam = module_weight_of(g33, parse_diagram(g33, "0xxox"));
  CHECK(invariants(g33, lam).norm_gr == 1);
  CHECK(invariants(g33, lam).kostant == false);
  Weight triv = Weight::zero(3, 3);
  CHECK(invariants(g33, triv).norm_gr == 0);
  CHECK(invariants(g33, triv).kostant);
}

TEST_CASE("parity of the howl matches the norm for osp away from t=2") {
  for (auto [kind, m, n] : {std::tuple<Kind, int, int>{Kind::OspEven, 2, 2},
                            {Kind::OspOdd, 2, 2}}) {
    Algebra g = Algebra::make(kind, m, n);
    for (const auto& lam : dominant_weights_in_window(g, 0, 4)) {
      auto inv = invariants(g, lam);
      if (inv.t == 2 || inv.atypicality == 0) continue;
      Howl h = howl(g, lam);
      CHECK(h.weight.parity() == ((inv.norm % 2) + 2) % 2);
    }
  }
}

TEST_CASE("tau is a tail-preserving bijection on the listed fixtures") {
  Algebra ge = Algebra::make(Kind::OspEven, 2, 1);  // osp(4|2)
  Algebra go = Algebra::make(Kind::OspOdd, 1, 1);   // osp(3|2)

  CHECK(render(tau(ge, parse_diagram(ge, ">x"))) == "(+)x");
  CHECK(render(tau(ge, parse_diagram(ge, ">ox"))) == "ox");
  CHECK(render(tau(ge, parse_diagram(ge, "[>x]"))) == "(-)x");

  for (const char* text : {">x", ">ox", "[>x]", "[>x]ox", ">xo x"}) {
    WeightDiagram f = parse_diagram(ge, text);
    WeightDiagram t = tau(ge, f);
    CHECK(tau_inverse(go, t) == f);
  }
}

TEST_CASE("tau preserves the norms") {
  Algebra ge = Algebra::make(Kind::OspEven, 3, 2);  // osp(6|4), t=2 shapes
  Algebra go = Algebra::make(Kind::OspOdd, 2, 2);
  for (const char* text : {"[>x^2]", "[>x]x", ">xx", ">oxx", "[>x]ox"}) {
    WeightDiagram f = parse_diagram(ge, text);
    Weight lam = module_weight_of(ge, f);
    WeightDiagram t = tau(ge, f);
    Weight mu = module_weight_of(go, t);
    auto a = invariants(ge, lam);
    auto b = invariants(go, mu);
    CHECK(a.tail == b.tail);
    CHECK(a.norm == b.norm);
    CHECK(a.norm_gr == b.norm_gr);
  }
}

TEST_CASE("sigma flips the diagram sign and fixes the rest") {
  Algebra g2 = Algebra::make(Kind::OspEven, 2, 2);
  CHECK(g2.sigma(g2.rho()) == g2.rho());
  Weight unsigned_lam = module_weight_of(g2, parse_diagram(g2, "x^2"));
  CHECK(g2.sigma(unsigned_lam) == unsigned_lam);
  Algebra g = Algebra::make(Kind::OspEven, 1, 1);
  Weight lam = module_weight_of(g, parse_diagram(g, "(+)ox"));
  Weight tw = g.sigma(lam);
  CHECK(render(diag(g, tw)) == "(-)ox");
  Algebra gl = Algebra::make(Kind::GL, 1, 1);
  CHECK_THROWS_AS(gl.sigma(Weight::zero(1, 1)), MathError);
}

TEST_CASE("t_shift swaps a core symbol with its neighbour") {
  Algebra g = Algebra::make(Kind::GL, 2, 2);
  Weight lam = module_weight_of(g, parse_diagram(g, "0x>o<"));
  REQUIRE(t_shift_valid(g, lam, 2));
  Weight moved = t_shift(g, lam, 2);
  CHECK(render(diag(g, moved)) == "0xo><");
  // inverse move restores
  CHECK(t_shift(g, moved, 2) == lam);
  CHECK_FALSE(t_shift_valid(g, lam, 10));
  CHECK_THROWS_AS(t_shift(g, lam, 10), MathError);
}

TEST_CASE("core fingerprints separate central characters") {
  Algebra g = Algebra::make(Kind::GL, 2, 2);
  Weight a = module_weight_of(g, parse_diagram(g, "0xx"));
  Weight b = module_weight_of(g, parse_diagram(g, "0xox"));
  Weight c = module_weight_of(g, parse_diagram(g, "0x>o<"));
  CHECK(core_fingerprint(g, a + g.rho()) == core_fingerprint(g, b + g.rho()));
  CHECK_FALSE(core_fingerprint(g, a + g.rho()) == core_fingerprint(g, c + g.rho()));
  // Weyl invariance
  for (const auto& elt : g.weyl_elements()) {
    CHECK(core_fingerprint(g, g.apply(elt, a + g.rho())) ==
          core_fingerprint(g, a + g.rho()));
  }
  // shifting along an orthogonal iso-root keeps the fingerprint
  Weight shifted = a + g.rho();
  Weight beta = eps_vec(2, 2, 2) - delta_vec(2, 2, 1);
  REQUIRE(bilinear(shifted, beta) == Rat(0));
  CHECK(core_fingerprint(g, shifted + beta) == core_fingerprint(g, shifted));
}

TEST_CASE("osp fingerprints carry the sigma flag") {
  Algebra g = Algebra::make(Kind::OspEven, 1, 1);
  Weight plus = module_weight_of(g, parse_diagram(g, "(+)ox"));
  Weight minus = module_weight_of(g, parse_diagram(g, "(-)ox"));
  CHECK_FALSE(core_fingerprint(g, plus + g.rho()) == core_fingerprint(g, minus + g.rho()));
}
