#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "azulink/parse.hpp"
#include "azulink/tripoly.hpp"
#include "azulink/unipoly.hpp"

using namespace azulink;

namespace {

using RPoly = UniPoly<Rational>;

RPoly random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  int d = deg(rng);
  std::vector<Rational> c(d + 1);
  for (auto& q : c) {
    q = Rational(num(rng), den(rng));
    q.canonicalize();
  }
  if (c.back() == 0) c.back() = 1;
  return RPoly::from_coeffs(c);
}

// plain Gaussian-elimination determinant over the rationals
Rational det(std::vector<std::vector<Rational>> m) {
  const long n = static_cast<long>(m.size());
  Rational sign(1), result(1);
  for (long col = 0; col < n; ++col) {
    long piv = -1;
    for (long r = col; r < n; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      sign = -sign;
    }
    result *= m[col][col];
    for (long r = col + 1; r < n; ++r) {
      Rational f = m[r][col] / m[col][col];
      for (long c2 = col; c2 < n; ++c2) m[r][c2] -= f * m[col][c2];
    }
  }
  return sign * result;
}

// Sylvester determinant of two univariate rational polynomials, rows of the
// first polynomial on top — the same convention the library resultant uses.
Rational sylvester(const RPoly& f, const RPoly& g) {
  const long m = *f.degree(), n = *g.degree();
  std::vector<std::vector<Rational>> s(
      m + n, std::vector<Rational>(m + n, Rational(0)));
  for (long r = 0; r < n; ++r)
    for (long k = 0; k <= m; ++k) s[r][r + k] = f.coeff(m - k);
  for (long r = 0; r < m; ++r)
    for (long k = 0; k <= n; ++k) s[n + r][r + k] = g.coeff(n - k);
  return det(std::move(s));
}

}  // namespace

TEST_CASE("division with remainder and exact division") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    RPoly a = random_poly(rng, 6);
    RPoly b = random_poly(rng, 4);
    auto [q, r] = a.divmod(b);
    CHECK(q * b + r == a);
    if (!r.is_zero()) CHECK(*r.degree() < *b.degree());
    CHECK((a * b).div_exact(b) == a);
  }
  RPoly x = RPoly::variable();
  CHECK_THROWS_AS((x * x).div_exact(x + RPoly::one()), std::domain_error);
  CHECK_THROWS_AS(x.divmod(RPoly()), std::domain_error);
}

TEST_CASE("gcd and extended gcd") {
  RPoly p = parse_unipoly("x^3 - x^2 + x - 1");  // (x-1)(x^2+1)
  RPoly q = parse_unipoly("x^2 + 2*x - 3");      // (x-1)(x+3)
  CHECK(gcd_monic(p, q) == parse_unipoly("x - 1"));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    RPoly a = random_poly(rng, 5);
    RPoly b = random_poly(rng, 5);
    if (b.is_zero()) continue;
    Xgcd<Rational> e = xgcd(a, b);
    CHECK(e.s * a + e.t * b == e.g);
    CHECK(a.mod(e.g).is_zero());
    CHECK(b.mod(e.g).is_zero());
  }
}

TEST_CASE("three-argument extended gcd") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    RPoly a = random_poly(rng, 4);
    RPoly b = random_poly(rng, 4);
    RPoly c = random_poly(rng, 4);
    Xgcd3<Rational> e = xgcd3(a, b, c);
    CHECK(e.c1 * a + e.c2 * b + e.c3 * c == e.w);
    CHECK(a.mod(e.w).is_zero());
    CHECK(b.mod(e.w).is_zero());
    CHECK(c.mod(e.w).is_zero());
  }
}

TEST_CASE("squarefree part strips multiplicity") {
  RPoly p = parse_unipoly("x^2 + 1");
  RPoly q = parse_unipoly("x - 3");
  CHECK(squarefree_part(p * p * q) == p * q);
  CHECK(squarefree_part(q * q * q) == q);
  CHECK(squarefree_part(p) == p);
  CHECK(squarefree_part(p.scaled(Rational(7, 3))) == p);  // result is monic
  CHECK_THROWS_AS(squarefree_part(RPoly()), std::domain_error);
}

TEST_CASE("polynomials over a quadratic field") {
  Quad r5 = Quad::sqrt_of(5);
  UniPoly<Quad> x = UniPoly<Quad>::variable();
  UniPoly<Quad> a = (x - UniPoly<Quad>(r5)) * (x - UniPoly<Quad>(Quad(Rational(1))));
  UniPoly<Quad> b = (x - UniPoly<Quad>(r5)) * (x + UniPoly<Quad>(Quad(Rational(2))));
  CHECK(gcd_monic(a, b) == x - UniPoly<Quad>(r5));
  RPoly p = parse_unipoly("x^2 - 5");
  CHECK(eval_quad(p, r5).is_zero());
  CHECK(eval_quad(p, Quad(Rational(3))) == Quad(Rational(4)));
  CHECK(to_quad_poly(p) == x * x - UniPoly<Quad>(Quad(Rational(5))));
}

TEST_CASE("expansion from quadratic roots with rational outcome") {
  Quad a(Rational(5, 2), Rational(1, 2), 5);  // (5 + sqrt5)/2
  UniPoly<Quad> w = expand_from_roots({a, a.conj(), -a, -a.conj()});
  CHECK(to_rational_poly(w) == parse_unipoly("x^4 - 15*x^2 + 25"));
  UniPoly<Quad> two = expand_from_roots({Quad(Rational(2)), Quad(Rational(-2))});
  CHECK(to_rational_poly(two) == parse_unipoly("x^2 - 4"));
  // irrational coefficients refuse the rational cast
  CHECK_THROWS(to_rational_poly(expand_from_roots({a})));
}

TEST_CASE("trivariate arithmetic and calculus") {
  TriPoly f = parse_tripoly("z^3 - x*y*z^2 + x^2*z + y^2*z - 2*z - x*y");
  CHECK(f.degree_in(2) == 3);
  CHECK(f.total_degree() == 4);
  CHECK(f.partial(2) == parse_tripoly("3*z^2 - 2*x*y*z + x^2 + y^2 - 2"));
  CHECK(f.partial(0) == parse_tripoly("-y*z^2 + 2*x*z - y"));
  CHECK(f.eval(Rational(0), Rational(2), Rational(0)) == 0);
  CHECK(f.eval(Rational(2), Rational(2), Rational(2)) == 0);
  CHECK(f.eval(Rational(1), Rational(1), Rational(1)) == -1);
  // substitute z = xy/2: the surface cuts out -(x^2-4)(y^2-4)/4 there
  TriPoly beta = parse_tripoly("x^2 + y^2 + z^2 - x*y*z - 4");
  TriPoly sub = beta.substitute(2, parse_tripoly("1/2*x*y"));
  CHECK(sub == parse_tripoly("-1/4*x^2*y^2 + x^2 + y^2 - 4"));
}

TEST_CASE("parser grammar") {
  TriPoly p = parse_tripoly("3*x^2*y - 7/2*z + 52.5");
  CHECK(p.coeff(2, 1, 0) == 3);
  CHECK(p.coeff(0, 0, 1) == Rational(-7, 2));
  CHECK(p.coeff(0, 0, 0) == Rational(105, 2));
  CHECK(parse_tripoly("3x^2y") == parse_tripoly("3*x^2*y"));
  CHECK_THROWS_AS(parse_tripoly("w + 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tripoly("x^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tripoly("(x + 1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tripoly(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_unipoly("x + y"), std::invalid_argument);
  ParsedTriple t = parse_triple("x^2 - 5*x + 5; 0; 1");
  CHECK(t.u == parse_unipoly("x^2 - 5*x + 5"));
  CHECK(t.v.is_zero());
  CHECK(t.n == 1);
  CHECK_THROWS_AS(parse_triple("x;1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_triple("x;0;1/2"), std::invalid_argument);
}

TEST_CASE("homogenization round trip") {
  TriPoly h = parse_tripoly("9*x^2 + 9*y^2 - 2*x^2*y^2 - 36");
  TriPoly H = h.homogenized(2, 4);
  CHECK(H.coeff(2, 0, 2) == 9);
  CHECK(H.coeff(0, 2, 2) == 9);
  CHECK(H.coeff(2, 2, 0) == -2);
  CHECK(H.coeff(0, 0, 4) == -36);
  CHECK(H.substitute(2, TriPoly::constant(Rational(1))) == h);
}

TEST_CASE("bivariate resultant against the Sylvester determinant") {
  TriPoly conic = parse_tripoly("x^2 + y^2 - 5");
  TriPoly cross_m = parse_tripoly("x*y - 2");
  TriPoly cross_p = parse_tripoly("x*y + 2");
  CHECK(resultant_bivariate(conic, cross_m, 1, 0) ==
        parse_unipoly("x^4 - 5*x^2 + 4"));
  CHECK(resultant_bivariate(conic, cross_p, 1, 0) ==
        parse_unipoly("x^4 - 5*x^2 + 4"));

  // random pairs monic in y: specialize x and compare against a directly
  // assembled Sylvester determinant
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> small(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    TriPoly f = TriPoly::monomial(Rational(1), 0, 2, 0);
    TriPoly g = TriPoly::monomial(Rational(1), 0, 3, 0);
    const int shapes[3][2] = {{0, 0}, {0, 1}, {1, 0}};
    for (const auto& s : shapes) {
      f = f + TriPoly::monomial(Rational(small(rng)), s[0], s[1], 0);
      g = g + TriPoly::monomial(Rational(small(rng)), s[0], s[1], 0);
    }
    RPoly r = resultant_bivariate(f, g, 1, 0);
    for (long x0 = -2; x0 <= 2; ++x0) {
      std::vector<Rational> fc, gc;
      for (const TriPoly& c : f.coeffs_in(1))
        fc.push_back(c.eval(Rational(x0), Rational(0), Rational(0)));
      for (const TriPoly& c : g.coeffs_in(1))
        gc.push_back(c.eval(Rational(x0), Rational(0), Rational(0)));
      Rational want = sylvester(RPoly::from_coeffs(fc), RPoly::from_coeffs(gc));
      CHECK(r.eval(Rational(x0)) == want);
    }
  }
}
