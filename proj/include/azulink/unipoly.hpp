#pragma once

#include <complex>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "azulink/exactfield.hpp"

namespace azulink {

inline bool scalar_negative(const Rational& q) { return q < 0; }
inline bool scalar_negative(const Quad& q) {
  return q.b() == 0 ? q.a() < 0 : (q.a() == 0 && q.b() < 0);
}
inline std::string scalar_str(const Rational& q) { return rational_to_string(q); }
inline std::string scalar_str(const Quad& q) { return q.str(); }

// Dense univariate polynomial over an exact field K (Rational or Quad).
// Coefficients run low to high with no stored trailing zeros.  The zero
// polynomial's degree is nullopt, which under std::optional ordering acts as
// the minus-infinity sentinel the reduction loops rely on.
template <class K>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(const K& c) : c_{c} { trim(); }
  UniPoly(std::initializer_list<K> low_to_high) : c_(low_to_high) { trim(); }

  static UniPoly from_coeffs(std::vector<K> low_to_high) {
    UniPoly p;
    p.c_ = std::move(low_to_high);
    p.trim();
    return p;
  }
  static UniPoly monomial(const K& coeff, size_t deg) {
    UniPoly p;
    p.c_.assign(deg + 1, K{});
    p.c_[deg] = coeff;
    p.trim();
    return p;
  }
  static UniPoly one() { return UniPoly(K(Rational(1))); }
  static UniPoly variable() { return monomial(K(Rational(1)), 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == K(Rational(1)); }
  std::optional<long> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<long>(c_.size()) - 1;
  }
  K coeff(size_t i) const { return i < c_.size() ? c_[i] : K{}; }
  const K& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }
  const std::vector<K>& coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == K(Rational(1)); }

  bool operator==(const UniPoly& rhs) const { return c_ == rhs.c_; }
  bool operator!=(const UniPoly& rhs) const { return !(*this == rhs); }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (K& c : r.c_) c = -c;
    return r;
  }

  UniPoly operator+(const UniPoly& rhs) const {
    UniPoly r;
    r.c_.resize(std::max(c_.size(), rhs.c_.size()), K{});
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + rhs.coeff(i);
    r.trim();
    return r;
  }
  UniPoly operator-(const UniPoly& rhs) const { return *this + (-rhs); }

  UniPoly operator*(const UniPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    UniPoly r;
    r.c_.assign(c_.size() + rhs.c_.size() - 1, K{});
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < rhs.c_.size(); ++j)
        r.c_[i + j] = r.c_[i + j] + c_[i] * rhs.c_[j];
    r.trim();
    return r;
  }

  UniPoly scaled(const K& s) const {
    UniPoly r = *this;
    for (K& c : r.c_) c = c * s;
    r.trim();
    return r;
  }

  // Euclidean division by a nonzero polynomial; exact over a field.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& den) const {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    UniPoly q, r = *this;
    const long dd = *den.degree();
    while (!r.is_zero() && *r.degree() >= dd) {
      const long k = *r.degree() - dd;
      K f = r.c_.back() / den.c_.back();
      if (q.c_.size() < static_cast<size_t>(k) + 1) q.c_.resize(k + 1, K{});
      q.c_[k] = q.c_[k] + f;
      for (long i = 0; i <= dd; ++i)
        r.c_[k + i] = r.c_[k + i] - f * den.c_[i];
      r.trim();
    }
    q.trim();
    return {q, r};
  }
  UniPoly div_exact(const UniPoly& den) const {
    auto [q, r] = divmod(den);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
  }
  UniPoly mod(const UniPoly& den) const { return divmod(den).second; }

  UniPoly make_monic() const {
    if (is_zero()) throw std::domain_error("cannot normalize zero polynomial");
    return scaled(K(Rational(1)) / c_.back());
  }

  UniPoly derivative() const {
    UniPoly r;
    if (c_.size() < 2) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
      r.c_[i - 1] = c_[i] * K(Rational(static_cast<long>(i)));
    r.trim();
    return r;
  }

  K eval(const K& x) const {
    K acc{};
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  std::string str(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
      K c = c_[i];
      if (c == K{}) continue;
      bool neg = scalar_negative(c);
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (neg) c = -c;
      std::string cs = scalar_str(c);
      if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
      if (i == 0) {
        out += cs;
      } else {
        std::string xs = var + (i == 1 ? "" : "^" + std::to_string(i));
        out += (c == K(Rational(1))) ? xs : cs + "*" + xs;
      }
    }
    return out;
  }

 private:
  std::vector<K> c_;
  void trim() {
    while (!c_.empty() && c_.back() == K{}) c_.pop_back();
  }
};

template <class K>
UniPoly<K> gcd_monic(UniPoly<K> a, UniPoly<K> b) {
  while (!b.is_zero()) {
    UniPoly<K> r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.make_monic();
}

template <class K>
struct Xgcd {
  UniPoly<K> g, s, t;  // s*a + t*b = g, g monic unless both inputs are zero
};

template <class K>
Xgcd<K> xgcd(const UniPoly<K>& a, const UniPoly<K>& b) {
  UniPoly<K> r0 = a, r1 = b;
  UniPoly<K> s0 = UniPoly<K>::one(), s1, t0, t1 = UniPoly<K>::one();
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, UniPoly<K>{}, UniPoly<K>{}};
  K inv = K(Rational(1)) / r0.leading();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

template <class K>
struct Xgcd3 {
  UniPoly<K> w, c1, c2, c3;  // c1*u1 + c2*u2 + c3*h = w, w monic
};

// Three-argument extended gcd used by divisor composition.
template <class K>
Xgcd3<K> xgcd3(const UniPoly<K>& u1, const UniPoly<K>& u2, const UniPoly<K>& h) {
  Xgcd<K> inner = xgcd(u1, u2);
  Xgcd<K> outer = xgcd(inner.g, h);
  return {outer.g, outer.s * inner.s, outer.s * inner.t, outer.t};
}

// f / gcd(f, f'), monic: each irreducible factor of f exactly once.
template <class K>
UniPoly<K> squarefree_part(const UniPoly<K>& f) {
  if (f.is_zero()) throw std::domain_error("squarefree part of zero polynomial");
  UniPoly<K> g = gcd_monic(f, f.derivative());
  return f.div_exact(g).make_monic();
}

// Product of (x - r) over the given roots, in the field the roots live in.
UniPoly<Quad> expand_from_roots(const std::vector<Quad>& roots);

// Requires every coefficient rational (roots closed under conjugation).
UniPoly<Rational> to_rational_poly(const UniPoly<Quad>& p);

inline Quad eval_quad(const UniPoly<Rational>& p, const Quad& x) {
  Quad acc;
  for (size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + Quad(p.coeffs()[i]);
  return acc;
}

inline UniPoly<Quad> to_quad_poly(const UniPoly<Rational>& p) {
  std::vector<Quad> c;
  c.reserve(p.coeffs().size());
  for (const Rational& q : p.coeffs()) c.emplace_back(q);
  return UniPoly<Quad>::from_coeffs(std::move(c));
}

inline std::complex<double> eval_complex(const UniPoly<Rational>& p,
                                         std::complex<double> x) {
  std::complex<double> acc = 0;
  const auto& c = p.coeffs();
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i].get_d();
  return acc;
}

}  // namespace azulink
