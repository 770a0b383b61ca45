#pragma once

#include <array>
#include <map>

#include "azulink/unipoly.hpp"

namespace azulink {

// Sparse trivariate polynomial over Q.  Keys are exponent triples for the
// axes (0, 1, 2) = (x, y, z); stored coefficients are never zero.  The third
// slot doubles as the homogenization variable t in projective work, so
// printing takes the variable names as a parameter.
class TriPoly {
 public:
  using Expo = std::array<int, 3>;

  TriPoly() = default;
  static TriPoly constant(const Rational& c);
  static TriPoly variable(int axis);
  static TriPoly monomial(const Rational& c, int ex, int ey, int ez);

  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int ex, int ey, int ez) const;
  const std::map<Expo, Rational>& terms() const { return terms_; }

  bool operator==(const TriPoly& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const TriPoly& rhs) const { return !(*this == rhs); }

  TriPoly operator-() const;
  TriPoly operator+(const TriPoly& rhs) const;
  TriPoly operator-(const TriPoly& rhs) const;
  TriPoly operator*(const TriPoly& rhs) const;
  TriPoly scaled(const Rational& s) const;
  TriPoly pow(unsigned e) const;

  // Degrees use -1 for the zero polynomial (nothing downstream branches on the
  // zero case; callers reject zero inputs first).
  long degree_in(int axis) const;
  long total_degree() const;
  bool uses(int axis) const { return degree_in(axis) >= 1; }

  TriPoly partial(int axis) const;
  TriPoly substitute(int axis, const TriPoly& replacement) const;

  template <class K>
  K eval(const K& x, const K& y, const K& z) const {
    K acc{};
    for (const auto& [e, c] : terms_) {
      K term = K(c);
      for (int i = 0; i < e[0]; ++i) term = term * x;
      for (int i = 0; i < e[1]; ++i) term = term * y;
      for (int i = 0; i < e[2]; ++i) term = term * z;
      acc = acc + term;
    }
    return acc;
  }

  std::complex<double> eval_complex(std::complex<double> x,
                                    std::complex<double> y,
                                    std::complex<double> z) const;

  // Requires the other two axes unused.
  UniPoly<Rational> to_unipoly(int axis) const;

  // Coefficients as polynomials in the other axes, indexed by exponent.
  std::vector<TriPoly> coeffs_in(int axis) const;

  // Scales each term by axis^(degree - term degree); axis must be unused.
  TriPoly homogenized(int axis, long degree) const;

  std::string str(const std::array<std::string, 3>& names = {"x", "y", "z"}) const;

 private:
  std::map<Expo, Rational> terms_;
  void add_term(const Expo& e, const Rational& c);
};

// Sylvester-matrix resultant eliminating elim_axis from two polynomials that
// involve only elim_axis and kept_axis; f's coefficient rows come first.
// Computed by exact evaluation-interpolation of the determinant.
UniPoly<Rational> resultant_bivariate(const TriPoly& f, const TriPoly& g,
                                      int elim_axis, int kept_axis);

}  // namespace azulink
