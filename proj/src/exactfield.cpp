#include "azulink/exactfield.hpp"

#include <cctype>
#include <utility>

namespace azulink {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  size_t lo = text.find_first_not_of(" \t");
  size_t hi = text.find_last_not_of(" \t");
  if (lo == std::string::npos)
    throw std::invalid_argument("empty rational literal");
  std::string s = text.substr(lo, hi - lo + 1);

  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = (s[0] == '-');
    s.erase(0, 1);
  }

  size_t slash = s.find('/');
  size_t dot = s.find('.');
  Rational value;
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("bad rational literal: " + text);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    value = Rational(n, d);
  } else if (dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (!all_digits(ip) || !all_digits(fp))
      throw std::invalid_argument("bad decimal literal: " + text);
    mpz_class scaled(ip + fp, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    value = Rational(scaled, den);
  } else {
    if (!all_digits(s)) throw std::invalid_argument("bad integer literal: " + text);
    value = Rational(mpz_class(s, 10));
  }
  value.canonicalize();
  return neg ? Rational(-value) : value;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

bool is_square(const Rational& q_in, Rational* witness) {
  Rational q = q_in;
  q.canonicalize();
  if (q < 0) return false;
  mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  if (witness) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    *witness = Rational(rn, rd);
  }
  return true;
}

bool is_squarefree_int(long d) {
  if (d == 0) return false;
  unsigned long n = d < 0 ? -static_cast<unsigned long>(d) : d;
  for (unsigned long p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

std::pair<long, Rational> squarefree_decompose(const Rational& q) {
  if (q == 0) throw std::domain_error("squarefree decomposition of zero");
  mpz_class z = q.get_num() * q.get_den();
  bool neg = z < 0;
  mpz_class n = abs(z), root(1), core(1);
  for (unsigned long p = 2; mpz_class(p) * p <= n; ++p) {
    if (p > (1ul << 20))
      throw std::domain_error("squarefree decomposition out of range");
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) root *= p;
    if (e % 2) core *= p;
  }
  core *= n;  // leftover has no factor <= its sqrt, hence prime or 1
  if (neg) core = -core;
  if (!core.fits_slong_p())
    throw std::domain_error("squarefree core exceeds tag range");
  Rational scale(root, q.get_den());
  scale.canonicalize();
  return {core.get_si(), scale};
}

QuadraticElement::QuadraticElement(Rational a, Rational b, long d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ == 0) {
    if (b_ != 0)
      throw std::invalid_argument("irrational part requires a field tag");
  } else if (d_ == 1 || !is_squarefree_int(d_)) {
    throw std::invalid_argument("field tag must be squarefree and != 0, 1");
  }
}

Rational QuadraticElement::to_rational() const {
  if (b_ != 0)
    throw std::domain_error("not a rational: " + str());
  return a_;
}

namespace {

// Result tag for a mixed operation; rationals (b = 0) adopt the other side.
long joint_tag(const Quad& x, const Quad& y) {
  if (!x.is_rational() && !y.is_rational()) {
    if (x.d() != y.d())
      throw std::domain_error("field tag mismatch: sqrt(" +
                              std::to_string(x.d()) + ") vs sqrt(" +
                              std::to_string(y.d()) + ")");
    return x.d();
  }
  if (!x.is_rational()) return x.d();
  if (!y.is_rational()) return y.d();
  return x.d() != 0 ? x.d() : y.d();
}

}  // namespace

QuadraticElement QuadraticElement::operator+(const QuadraticElement& rhs) const {
  return {a_ + rhs.a_, b_ + rhs.b_, joint_tag(*this, rhs)};
}

QuadraticElement QuadraticElement::operator-(const QuadraticElement& rhs) const {
  return {a_ - rhs.a_, b_ - rhs.b_, joint_tag(*this, rhs)};
}

QuadraticElement QuadraticElement::operator*(const QuadraticElement& rhs) const {
  long d = joint_tag(*this, rhs);
  return {a_ * rhs.a_ + Rational(d) * b_ * rhs.b_, a_ * rhs.b_ + b_ * rhs.a_, d};
}

QuadraticElement QuadraticElement::inverse() const {
  Rational n = norm();
  if (n == 0) throw std::domain_error("inverse of zero");
  return {a_ / n, -b_ / n, d_};
}

QuadraticElement QuadraticElement::operator/(const QuadraticElement& rhs) const {
  long d = joint_tag(*this, rhs);
  Rational n = rhs.norm();
  if (n == 0) throw std::domain_error("division by zero");
  // multiply by the conjugate over the norm
  return {(a_ * rhs.a_ - Rational(d) * b_ * rhs.b_) / n,
          (b_ * rhs.a_ - a_ * rhs.b_) / n, d};
}

bool QuadraticElement::operator==(const QuadraticElement& rhs) const {
  if (b_ == 0 && rhs.b_ == 0) return a_ == rhs.a_;
  return b_ == rhs.b_ && a_ == rhs.a_ && d_ == rhs.d_;
}

bool QuadraticElement::operator<(const QuadraticElement& rhs) const {
  int c = cmp(a_, rhs.a_);
  if (c != 0) return c < 0;
  c = cmp(b_, rhs.b_);
  if (c != 0) return c < 0;
  long lt = b_ == 0 ? 0 : d_, rt = rhs.b_ == 0 ? 0 : rhs.d_;
  return lt < rt;
}

std::string QuadraticElement::str() const {
  if (b_ == 0) return rational_to_string(a_);
  std::string root = "sqrt(" + std::to_string(d_) + ")";
  std::string irr;
  if (b_ == 1)
    irr = root;
  else if (b_ == -1)
    irr = "-" + root;
  else
    irr = rational_to_string(b_) + "*" + root;
  if (a_ == 0) return irr;
  if (b_ > 0) return rational_to_string(a_) + " + " + irr;
  return rational_to_string(a_) + " - " + (b_ == -1 ? root : rational_to_string(-b_) + "*" + root);
}

std::optional<Quad> sqrt_in(const Quad& x, long d) {
  if (!x.is_rational() && x.d() != d)
    throw std::domain_error("sqrt_in: field tag mismatch");
  if (x.is_zero()) return Quad(Rational(0), Rational(0), d);
  if (x.is_rational()) {
    Rational w;
    if (is_square(x.a(), &w)) return Quad(w, Rational(0), d);
    if (is_square(x.a() / d, &w)) return Quad(Rational(0), w, d);
    return std::nullopt;
  }
  // (u + v sqrt d)^2 = x: u^2 and d v^2 are the roots of T^2 - aT + d b^2 / 4.
  Rational disc = x.norm();
  Rational sd;
  if (!is_square(disc, &sd)) return std::nullopt;
  for (int sign : {1, -1}) {
    Rational t = (x.a() + Rational(sign) * sd) / 2;
    Rational u;
    if (t != 0 && is_square(t, &u) && u != 0) {
      Rational v = x.b() / (2 * u);
      Quad y(u, v, d);
      if (y * y == x) return y;
    }
  }
  return std::nullopt;
}

}  // namespace azulink
