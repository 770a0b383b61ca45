#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace azulink {

// Exact rational scalar. mpq_class keeps the canonical reduced form
// (gcd(num, den) = 1, den > 0, zero stored as 0/1) through arithmetic.
using Rational = mpq_class;

// Parses "p", "p/q" or an exact decimal like "52.5" (-> 105/2).
// Throws std::invalid_argument on anything else.
Rational rational_from_string(const std::string& text);

std::string rational_to_string(const Rational& q);

// True iff q is the square of a rational; fills *witness with the
// nonnegative square root when asked.
bool is_square(const Rational& q, Rational* witness = nullptr);

bool is_squarefree_int(long d);

// Element a + b*sqrt(d) of Q(sqrt(d)).  d is a per-value field tag;
// elements with b = 0 are plain rationals and compose with any tag.
class QuadraticElement {
 public:
  QuadraticElement() : a_(0), b_(0), d_(0) {}
  QuadraticElement(Rational a, Rational b, long d);
  explicit QuadraticElement(Rational a) : a_(std::move(a)), b_(0), d_(0) {}
  static QuadraticElement sqrt_of(long d) { return {Rational(0), Rational(1), d}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  // Errors unless b = 0.
  Rational to_rational() const;

  QuadraticElement conj() const { return {a_, -b_, d_}; }
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

  QuadraticElement operator-() const { return {-a_, -b_, d_}; }
  QuadraticElement operator+(const QuadraticElement& rhs) const;
  QuadraticElement operator-(const QuadraticElement& rhs) const;
  QuadraticElement operator*(const QuadraticElement& rhs) const;
  QuadraticElement operator/(const QuadraticElement& rhs) const;
  QuadraticElement inverse() const;

  bool operator==(const QuadraticElement& rhs) const;
  bool operator!=(const QuadraticElement& rhs) const { return !(*this == rhs); }

  // Strict weak order usable as a map key; rationals compare equal across tags.
  bool operator<(const QuadraticElement& rhs) const;

  std::string str() const;

 private:
  Rational a_, b_;
  long d_;
};

using Quad = QuadraticElement;

// Square root of x inside Q(sqrt(d)), if one exists there.  x must be
// composable with d.
std::optional<Quad> sqrt_in(const Quad& x, long d);

// Writes q as s^2 * d with d squarefree (q != 0); returns {d, s} with s > 0.
std::pair<long, Rational> squarefree_decompose(const Rational& q);

}  // namespace azulink
