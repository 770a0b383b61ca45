#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "azulink/linkgroup.hpp"
#include "azulink/parse.hpp"

using namespace azulink;

namespace {

// random non-parabolic trace with modulus in [0.5, 3]
Cplx random_trace(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mod(0.5, 3.0);
  std::uniform_real_distribution<double> arg(0.0, 6.283185307179586);
  for (;;) {
    double m = mod(rng);
    if (std::abs(m - 2.0) < 0.1) continue;
    double t = arg(rng);
    return Cplx(m * std::cos(t), m * std::sin(t));
  }
}

bool word_is_palindrome(const Word& w) {
  const auto& L = w.letters;
  for (size_t i = 0, j = L.size(); i < j; ++i, --j)
    if (L[i].gen != L[j - 1].gen || L[i].exp != L[j - 1].exp) return false;
  return true;
}

}  // namespace

TEST_CASE("normal-form words of the three cases") {
  CHECK(case_data(LinkTag::W512).word.str() == "baBABab");
  CHECK(case_data(LinkTag::L622).word.str() == "babABAbab");
  CHECK(case_data(LinkTag::L632).word.str() == "baBAbabABab");
  CHECK(schubert_word(8, 3).str() == "baBABab");
  CHECK(schubert_word(10, 3).str() == "babABAbab");
  CHECK(schubert_word(12, 5).str() == "baBAbabABab");
}

TEST_CASE("word structure") {
  for (LinkTag tag : all_tags()) {
    const LinkCase& lc = case_data(tag);
    CHECK(static_cast<long>(lc.word.letters.size()) == lc.alpha - 1);
    CHECK(word_is_palindrome(lc.word));
    // letters alternate b, a, b, a, ...
    for (size_t i = 0; i < lc.word.letters.size(); ++i)
      CHECK(lc.word.letters[i].gen == (i % 2 == 0 ? 'b' : 'a'));
    // recompute the exponent signs from the defining fraction
    for (size_t i = 0; i < lc.word.letters.size(); ++i) {
      long k = static_cast<long>(i + 1) * lc.beta / lc.alpha;
      CHECK(lc.word.letters[i].exp == (k % 2 == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("normal-form parameter validation") {
  CHECK_THROWS_AS(schubert_word(8, 4), std::invalid_argument);   // even beta
  CHECK_THROWS_AS(schubert_word(8, 9), std::invalid_argument);   // beta >= alpha
  CHECK_THROWS_AS(schubert_word(8, -1), std::invalid_argument);  // beta < 1
  CHECK_THROWS_AS(schubert_word(1, 1), std::invalid_argument);   // alpha < 2
}

TEST_CASE("canonical surface polynomials") {
  CHECK(case_data(LinkTag::W512).canonical_poly ==
        parse_tripoly("z^3 - x*y*z^2 + x^2*z + y^2*z - 2*z - x*y"));
  CHECK(case_data(LinkTag::L622).canonical_poly ==
        parse_tripoly("z^4 - x*y*z^3 + x^2*z^2 + y^2*z^2 - 3*z^2 - x*y*z + 1"));
  CHECK(case_data(LinkTag::L632).canonical_poly ==
        parse_tripoly("z^3 - x*y*z^2 + x^2*z + y^2*z - z - x*y"));
}

TEST_CASE("symbol entries shared by every case") {
  for (LinkTag tag : all_tags()) {
    SymbolPair sp = hilbert_symbol_pair(tag);
    CHECK(sp.alpha == parse_tripoly("x^2 - 4"));
    CHECK(sp.beta == parse_tripoly("x^2 + y^2 + z^2 - x*y*z - 4"));
  }
}

TEST_CASE("commutator trace is exact in exact arithmetic") {
  Rational two(2);
  CHECK(commutator_trace(two, two, two) == Rational(2));
  CHECK(commutator_trace(Rational(0), Rational(0), Rational(0)) == Rational(-2));
}

TEST_CASE("trace identities on random unimodular pairs") {
  std::mt19937_64 rng(20240817);
  const double tol = 1e-9;
  for (int i = 0; i < 1000; ++i) {
    Cplx x = random_trace(rng), y = random_trace(rng), z = random_trace(rng);
    auto [A, B] = lift_character(x, y, z);
    CHECK(std::abs(A.det() - Cplx(1)) < tol);
    CHECK(std::abs(B.det() - Cplx(1)) < tol);
    CHECK(std::abs(A.trace() - x) < tol);
    CHECK(std::abs(B.trace() - y) < tol);
    CHECK(std::abs((A * B).trace() - z) < tol);
    // tr[A,B] = x^2 + y^2 + z^2 - xyz - 2
    CMat comm = A * B * A.adjugate() * B.adjugate();
    Cplx want = x * x + y * y + z * z - x * y * z - Cplx(2);
    CHECK(std::abs(comm.trace() - want) < tol);
    // Cayley-Hamilton: tr(AB) + tr(A B^-1) = tr(A) tr(B)
    CHECK(std::abs((A * B).trace() + (A * B.adjugate()).trace() - x * y) < tol);
  }
}

TEST_CASE("word matrices respect inverses and determinants") {
  std::mt19937_64 rng(5);
  auto [A, B] = lift_character(random_trace(rng), random_trace(rng),
                               random_trace(rng));
  Word w = schubert_word(8, 3);
  CMat W = word_matrix(w, A, B);
  CHECK(std::abs(W.det() - Cplx(1)) < 1e-9);
  // reversing every exponent gives the inverse word
  Word winv;
  for (size_t i = w.letters.size(); i-- > 0;)
    winv.letters.push_back({w.letters[i].gen, -w.letters[i].exp});
  CMat V = word_matrix(winv, A, B);
  CHECK(max_abs(W * V - CMat::identity()) < 1e-9);
  // non-unimodular input is rejected
  CMat bad = A;
  bad.a = bad.a * 2.0;
  CHECK_THROWS_AS(word_matrix(w, bad, B), std::invalid_argument);
}

TEST_CASE("parabolic traces are rejected") {
  CHECK_THROWS_AS(lift_character(Cplx(2.0, 0.0), Cplx(1), Cplx(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(lift_character(Cplx(1), Cplx(-2.0, 0.0), Cplx(1)),
                  std::invalid_argument);
}

TEST_CASE("polynomial root finder") {
  std::mt19937_64 rng(99);
  // (x - 1)(x - 2)(x - 3) = x^3 - 6x^2 + 11x - 6
  RootSearch rs = all_roots({Cplx(-6), Cplx(11), Cplx(-6), Cplx(1)}, rng);
  REQUIRE(rs.converged);
  REQUIRE(rs.roots.size() == 3);
  std::vector<double> re;
  for (Cplx r : rs.roots) {
    CHECK(std::abs(r.imag()) < 1e-9);
    re.push_back(r.real());
  }
  std::sort(re.begin(), re.end());
  CHECK(std::abs(re[0] - 1.0) < 1e-9);
  CHECK(std::abs(re[1] - 2.0) < 1e-9);
  CHECK(std::abs(re[2] - 3.0) < 1e-9);

  RootSearch ri = all_roots({Cplx(1), Cplx(0), Cplx(1)}, rng);  // x^2 + 1
  REQUIRE(ri.converged);
  REQUIRE(ri.roots.size() == 2);
  for (Cplx r : ri.roots) {
    CHECK(std::abs(r.real()) < 1e-9);
    CHECK(std::abs(std::abs(r.imag()) - 1.0) < 1e-9);
  }
}

TEST_CASE("sampled relator validation across the three cases") {
  for (LinkTag tag : all_tags()) {
    ValidationReport rep = sample_validate(case_data(tag), 100, 1e-8, 1);
    CHECK(rep.ok);
    CHECK(rep.samples == 100);
    CHECK(rep.failures.empty());
    CHECK(rep.max_residual < 1e-8);
    // deterministic under a fixed seed
    ValidationReport again = sample_validate(case_data(tag), 100, 1e-8, 1);
    CHECK(again.max_residual == rep.max_residual);
  }
}

TEST_CASE("tag names round-trip") {
  for (LinkTag tag : all_tags()) {
    CHECK(tag_from_name(tag_name(tag)) == tag);
  }
  CHECK(tag_from_name("w512") == LinkTag::W512);
  CHECK(tag_from_name("l622") == LinkTag::L622);
  CHECK(!tag_from_name("nope").has_value());
}
