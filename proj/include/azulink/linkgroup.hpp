#pragma once

#include <complex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "azulink/tripoly.hpp"

namespace azulink {

enum class LinkTag { W512, L622, L632 };

const std::vector<LinkTag>& all_tags();
std::string tag_name(LinkTag tag);
std::optional<LinkTag> tag_from_name(const std::string& name);

// Word in the meridional generators; exponents are +1 or -1.
struct Letter {
  char gen;  // 'a' or 'b'
  int exp;
};
struct Word {
  std::vector<Letter> letters;
  std::string str() const;  // a/b lowercase, inverses uppercase
};

// Word of length alpha - 1 attached to the two-bridge normal form
// (alpha / beta): letters alternate b, a, b, ..., the i-th exponent is
// (-1)^floor(i * beta / alpha).
Word schubert_word(long alpha, long beta);

struct LinkCase {
  LinkTag tag;
  long alpha, beta;
  TriPoly canonical_poly;  // defining polynomial of the canonical surface
  Word word;
};
const LinkCase& case_data(LinkTag tag);

// Entries of the Hilbert symbol of the canonical quaternion algebra in the
// trace coordinates x, y, z; the same pair for every case.
struct SymbolPair {
  TriPoly alpha;  // x^2 - 4
  TriPoly beta;   // x^2 + y^2 + z^2 - xyz - 4
};
SymbolPair hilbert_symbol_pair(LinkTag tag);

// tr[X, Y] in terms of x = tr X, y = tr Y, z = tr XY.
template <class K>
K commutator_trace(const K& x, const K& y, const K& z) {
  return x * x + y * y + z * z - x * y * z - K(2);
}

template <class K>
struct Mat2 {
  K a{}, b{}, c{}, d{};
  static Mat2 identity() { return {K(1), K(0), K(0), K(1)}; }
  Mat2 operator*(const Mat2& r) const {
    return {a * r.a + b * r.c, a * r.b + b * r.d, c * r.a + d * r.c,
            c * r.b + d * r.d};
  }
  Mat2 operator-(const Mat2& r) const {
    return {a - r.a, b - r.b, c - r.c, d - r.d};
  }
  K trace() const { return a + d; }
  K det() const { return a * d - b * c; }
  // Inverse of a determinant-1 matrix.
  Mat2 adjugate() const { return {d, -b, -c, a}; }
};

using Cplx = std::complex<double>;
using CMat = Mat2<Cplx>;

double max_abs(const CMat& m);

// Product of the letter matrices; inverses as adjugates, so inputs must be
// unimodular (checked within 1e-10).
CMat word_matrix(const Word& w, const CMat& A, const CMat& B);

// Commutation defect max-entry |AW - WA| for W the image of the case word;
// zero exactly when the pair satisfies the group relator a w a^-1 w^-1.
double relator_residual(const LinkCase& lc, const CMat& A, const CMat& B);

// Matrices A (upper triangular), B (lower triangular) with trace triple
// (x, y, z); rejects parabolic traces (modulus within 1e-12 of 2).
std::pair<CMat, CMat> lift_character(Cplx x, Cplx y, Cplx z);

// Simultaneous-iteration root finder for all complex roots, tolerance 1e-12,
// at most 200 sweeps, random perturbation restart on stagnation.
struct RootSearch {
  bool converged;
  std::vector<Cplx> roots;
  long iterations;
};
RootSearch all_roots(std::vector<Cplx> coeffs_low_to_high, std::mt19937_64& rng);

// Draws n random (x, y) with moduli in [0.5, 3] off the parabolic bands
// (half-width 0.05 around 2), solves the canonical polynomial for z, lifts
// each root, and reports the worst relator residual.
struct ValidationReport {
  double max_residual;
  std::vector<std::string> failures;  // non-convergent samples etc.
  long samples;
  bool ok;  // no failures and max_residual < tol
};
ValidationReport sample_validate(const LinkCase& lc, long n, double tol,
                                 unsigned long seed);

}  // namespace azulink
