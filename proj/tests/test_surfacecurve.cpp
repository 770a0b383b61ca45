#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "azulink/parse.hpp"
#include "azulink/surfacecurve.hpp"

using namespace azulink;

namespace {

std::complex<double> cval(const Rational& q) { return {q.get_d(), 0.0}; }

}  // namespace

TEST_CASE("surface decomposition remainders") {
  CHECK(decomposition_identity(LinkTag::W512) == parse_tripoly("2*z - x*y"));
  CHECK(decomposition_identity(LinkTag::L632) == parse_tripoly("3*z - x*y"));
  CHECK(decomposition_identity(LinkTag::L622) ==
        parse_tripoly("z^2 - x*y*z + 1"));
}

TEST_CASE("four-line curve of the first case") {
  CurveDescriptor cd = curve_of_reducibles(LinkTag::W512);
  REQUIRE(cd.kind == CurveKind::lines);
  REQUIRE(cd.lines.size() == 4);
  REQUIRE(cd.z_rule.has_value());
  CHECK(*cd.z_rule == parse_tripoly("1/2*x*y"));

  auto line = [&](const std::string& label) -> const LinePiece& {
    for (const LinePiece& lp : cd.lines)
      if (lp.label == label) return lp;
    REQUIRE(false);
    return cd.lines[0];
  };
  const LinePiece& l1 = line("L1");
  CHECK(l1.base == std::array<Rational, 3>{2, 0, 0});
  CHECK(l1.direction == std::array<Rational, 3>{0, 1, 1});
  const LinePiece& l2 = line("L2");
  CHECK(l2.base == std::array<Rational, 3>{-2, 0, 0});
  CHECK(l2.direction == std::array<Rational, 3>{0, 1, -1});
  const LinePiece& l3 = line("L3");
  CHECK(l3.base == std::array<Rational, 3>{0, 2, 0});
  CHECK(l3.direction == std::array<Rational, 3>{1, 0, 1});
  const LinePiece& l4 = line("L4");
  CHECK(l4.base == std::array<Rational, 3>{0, -2, 0});
  CHECK(l4.direction == std::array<Rational, 3>{1, 0, -1});

  // exactly one selected line, and it is L3
  int selected = 0;
  for (const LinePiece& lp : cd.lines)
    if (lp.selected) {
      ++selected;
      CHECK(lp.label == "L3");
    }
  CHECK(selected == 1);

  // every line lies on both surfaces
  CanonicalSurface s = canonical_surface(LinkTag::W512);
  for (const LinePiece& lp : cd.lines) {
    CHECK(restrict_to_line(s.f, lp.base, lp.direction).is_zero());
    CHECK(restrict_to_line(s.beta, lp.base, lp.direction).is_zero());
  }
  // alpha restricted to the selected line is t^2 - 4
  CHECK(restrict_to_line(s.alpha, l3.base, l3.direction) ==
        parse_unipoly("x^2 - 4"));
}

TEST_CASE("plane-model curves of the other two cases") {
  CurveDescriptor c632 = curve_of_reducibles(LinkTag::L632);
  CHECK(c632.kind == CurveKind::elliptic_proj);
  REQUIRE(c632.z_rule.has_value());
  CHECK(*c632.z_rule == parse_tripoly("1/3*x*y"));
  REQUIRE(c632.relations.size() == 1);
  CHECK(c632.relations[0] ==
        parse_tripoly("9*x^2 + 9*y^2 - 2*x^2*y^2 - 36"));
  CHECK(c632.witness == std::array<Rational, 3>{0, 2, 0});

  CurveDescriptor c622 = curve_of_reducibles(LinkTag::L622);
  CHECK(c622.kind == CurveKind::hyperelliptic_fiber);
  CHECK(!c622.z_rule.has_value());
  REQUIRE(c622.relations.size() == 2);
  CHECK(c622.relations[0] == parse_tripoly("x^2 + y^2 - 5"));
  CHECK(c622.relations[1] == parse_tripoly("z^2 - x*y*z + 1"));
  CHECK(c622.witness == std::array<Rational, 3>{1, 2, 1});
}

TEST_CASE("restriction to a line") {
  std::array<Rational, 3> base{0, 2, 0}, dir{1, 0, 1};
  CHECK(restrict_to_line(parse_tripoly("x^2 - 4"), base, dir) ==
        parse_unipoly("x^2 - 4"));
  CHECK(restrict_to_line(parse_tripoly("y"), base, dir) ==
        parse_unipoly("2"));
  CHECK(restrict_to_line(parse_tripoly("x - z"), base, dir).is_zero());
  CHECK(restrict_to_line(parse_tripoly("x*y*z"), base, dir) ==
        parse_unipoly("2*x^2"));
}

TEST_CASE("vanishing orders along the curve") {
  for (LinkTag tag : all_tags()) {
    CanonicalSurface s = canonical_surface(tag);
    CHECK(transversal_order(tag, s.alpha) == 0);
    CHECK(transversal_order(tag, s.beta) == 1);
    // constants have order zero
    CHECK(transversal_order(tag, TriPoly::constant(Rational(7))) == 0);
  }
}

TEST_CASE("certified vanishing covers the defining relations") {
  // the plane model itself and the fiber relations are order-1 cuts
  CHECK(transversal_order(LinkTag::L632,
                          parse_tripoly("9*x^2 + 9*y^2 - 2*x^2*y^2 - 36")) == 1);
  CHECK(transversal_order(LinkTag::L622, parse_tripoly("x^2 + y^2 - 5")) == 1);
  CHECK(transversal_order(LinkTag::L622, parse_tripoly("z^2 - x*y*z + 1")) == 1);
}

TEST_CASE("orders outside the certified patterns are refused") {
  // x vanishes at the witness (0,2,0) but not along the component
  CHECK_THROWS_WITH_AS(
      transversal_order(LinkTag::W512, TriPoly::variable(0)),
      "indeterminate order: the function vanishes at the witness but not "
      "certifiably along the component",
      std::runtime_error);
  // (z - xy/2)^2 dies on the component but with an identically zero gradient
  TriPoly half = parse_tripoly("z - 1/2*x*y");
  CHECK_THROWS_WITH_AS(
      transversal_order(LinkTag::W512, half * half),
      "indeterminate order: all Jacobian minors vanish at the witness",
      std::runtime_error);
}

TEST_CASE("tame symbol of the pair") {
  for (LinkTag tag : all_tags()) {
    TameSymbolReport rep = tame_symbol(tag);
    CHECK(rep.ord_alpha == 0);
    CHECK(rep.ord_beta == 1);
    CHECK(rep.symbol_rep == parse_tripoly("x^2 - 4"));
    CHECK(!rep.trivial);
  }
}

TEST_CASE("per-line symbols of the four-line curve") {
  std::vector<LineSymbol> ls = whitehead_line_symbols();
  REQUIRE(ls.size() == 4);
  for (const LineSymbol& s : ls) {
    CHECK(s.ord_beta == 1);
    // on L1/L2 alpha = x^2 - 4 dies along the line; on L3/L4 it does not
    bool alpha_line = s.line.label == "L1" || s.line.label == "L2";
    CHECK(s.ord_alpha == (alpha_line ? 1 : 0));
    // all four residues land in the same nontrivial square class
    CHECK(s.symbol == parse_unipoly("x^2 - 4"));
    CHECK(s.nontrivial);
  }
}

TEST_CASE("gradients match finite differences") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> num(-8, 8);
  CanonicalSurface s = canonical_surface(LinkTag::L622);
  const double h = 1e-6;
  for (int trial = 0; trial < 10; ++trial) {
    std::array<Rational, 3> p{Rational(num(rng), 3), Rational(num(rng), 3),
                              Rational(num(rng), 3)};
    for (auto& q : p) q.canonicalize();
    std::complex<double> pc[3] = {cval(p[0]), cval(p[1]), cval(p[2])};
    for (int axis = 0; axis < 3; ++axis) {
      Rational exact = s.f.partial(axis).eval(p[0], p[1], p[2]);
      std::complex<double> lo[3] = {pc[0], pc[1], pc[2]};
      std::complex<double> hi[3] = {pc[0], pc[1], pc[2]};
      lo[axis] -= h;
      hi[axis] += h;
      std::complex<double> fd =
          (s.f.eval_complex(hi[0], hi[1], hi[2]) -
           s.f.eval_complex(lo[0], lo[1], lo[2])) /
          (2 * h);
      double scale = std::max(1.0, std::abs(fd));
      CHECK(std::abs(fd - cval(exact)) / scale < 1e-5);
    }
  }
}
