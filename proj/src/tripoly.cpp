#include "azulink/tripoly.hpp"

#include <algorithm>

namespace azulink {

UniPoly<Quad> expand_from_roots(const std::vector<Quad>& roots) {
  UniPoly<Quad> acc = UniPoly<Quad>::one();
  for (const Quad& r : roots) {
    UniPoly<Quad> lin{-r, Quad(Rational(1))};
    acc = acc * lin;
  }
  return acc;
}

UniPoly<Rational> to_rational_poly(const UniPoly<Quad>& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const Quad& q : p.coeffs()) {
    if (!q.is_rational())
      throw std::domain_error("nonrational coefficient " + q.str() +
                              ": roots not closed under conjugation");
    c.push_back(q.a());
  }
  return UniPoly<Rational>::from_coeffs(std::move(c));
}

void TriPoly::add_term(const Expo& e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TriPoly TriPoly::constant(const Rational& c) {
  TriPoly p;
  p.add_term({0, 0, 0}, c);
  return p;
}

TriPoly TriPoly::variable(int axis) {
  if (axis < 0 || axis > 2) throw std::invalid_argument("axis out of range");
  return monomial(1, axis == 0, axis == 1, axis == 2);
}

TriPoly TriPoly::monomial(const Rational& c, int ex, int ey, int ez) {
  if (ex < 0 || ey < 0 || ez < 0)
    throw std::invalid_argument("negative exponent");
  TriPoly p;
  p.add_term({ex, ey, ez}, c);
  return p;
}

Rational TriPoly::coeff(int ex, int ey, int ez) const {
  auto it = terms_.find({ex, ey, ez});
  return it == terms_.end() ? Rational(0) : it->second;
}

TriPoly TriPoly::operator-() const {
  TriPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

TriPoly TriPoly::operator+(const TriPoly& rhs) const {
  TriPoly p = *this;
  for (const auto& [e, c] : rhs.terms_) p.add_term(e, c);
  return p;
}

TriPoly TriPoly::operator-(const TriPoly& rhs) const {
  TriPoly p = *this;
  for (const auto& [e, c] : rhs.terms_) p.add_term(e, -c);
  return p;
}

TriPoly TriPoly::operator*(const TriPoly& rhs) const {
  TriPoly p;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_)
      p.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
  return p;
}

TriPoly TriPoly::scaled(const Rational& s) const {
  TriPoly p;
  if (s == 0) return p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, c * s);
  return p;
}

TriPoly TriPoly::pow(unsigned e) const {
  TriPoly acc = constant(1);
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

long TriPoly::degree_in(int axis) const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[axis]));
  return d;
}

long TriPoly::total_degree() const {
  long d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, static_cast<long>(e[0] + e[1] + e[2]));
  return d;
}

TriPoly TriPoly::partial(int axis) const {
  TriPoly p;
  for (const auto& [e, c] : terms_) {
    if (e[axis] == 0) continue;
    Expo f = e;
    --f[axis];
    p.add_term(f, c * e[axis]);
  }
  return p;
}

TriPoly TriPoly::substitute(int axis, const TriPoly& replacement) const {
  long top = degree_in(axis);
  std::vector<TriPoly> powers(std::max<long>(top + 1, 1));
  powers[0] = constant(1);
  for (long i = 1; i <= top; ++i) powers[i] = powers[i - 1] * replacement;
  TriPoly out;
  for (const auto& [e, c] : terms_) {
    Expo f = e;
    f[axis] = 0;
    TriPoly term;
    term.add_term(f, c);
    out = out + term * powers[e[axis]];
  }
  return out;
}

std::complex<double> TriPoly::eval_complex(std::complex<double> x,
                                           std::complex<double> y,
                                           std::complex<double> z) const {
  std::complex<double> acc = 0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> term = c.get_d();
    for (int i = 0; i < e[0]; ++i) term *= x;
    for (int i = 0; i < e[1]; ++i) term *= y;
    for (int i = 0; i < e[2]; ++i) term *= z;
    acc += term;
  }
  return acc;
}

UniPoly<Rational> TriPoly::to_unipoly(int axis) const {
  std::vector<Rational> c(degree_in(axis) + 1, Rational(0));
  for (const auto& [e, coef] : terms_) {
    for (int a = 0; a < 3; ++a)
      if (a != axis && e[a] != 0)
        throw std::domain_error("polynomial is not univariate in the requested axis");
    c[e[axis]] = coef;
  }
  return UniPoly<Rational>::from_coeffs(std::move(c));
}

std::vector<TriPoly> TriPoly::coeffs_in(int axis) const {
  long top = degree_in(axis);
  if (top < 0) return {};
  std::vector<TriPoly> out(top + 1);
  for (const auto& [e, c] : terms_) {
    Expo f = e;
    f[axis] = 0;
    out[e[axis]].add_term(f, c);
  }
  return out;
}

TriPoly TriPoly::homogenized(int axis, long degree) const {
  if (uses(axis))
    throw std::invalid_argument("homogenization variable already in use");
  TriPoly p;
  for (const auto& [e, c] : terms_) {
    long d = e[0] + e[1] + e[2];
    if (d > degree)
      throw std::invalid_argument("degree below the total degree of the input");
    Expo f = e;
    f[axis] += static_cast<int>(degree - d);
    p.add_term(f, c);
  }
  return p;
}

std::string TriPoly::str(const std::array<std::string, 3>& names) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Expo, Rational>> order(terms_.begin(), terms_.end());
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    long da = a.first[0] + a.first[1] + a.first[2];
    long db = b.first[0] + b.first[1] + b.first[2];
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [e, c0] : order) {
    Rational c = c0;
    bool neg = c < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (neg) c = -c;
    std::string mono;
    for (int a = 0; a < 3; ++a) {
      if (e[a] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[a];
      if (e[a] > 1) mono += "^" + std::to_string(e[a]);
    }
    if (mono.empty())
      out += rational_to_string(c);
    else if (c == 1)
      out += mono;
    else
      out += rational_to_string(c) + "*" + mono;
  }
  return out;
}

namespace {

Rational det_exact(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  Rational det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational f = m[row][col] / m[col][col];
      for (size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return det;
}

UniPoly<Rational> lagrange_interpolate(const std::vector<Rational>& xs,
                                       const std::vector<Rational>& ys) {
  UniPoly<Rational> acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    UniPoly<Rational> basis = UniPoly<Rational>::one();
    Rational denom(1);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * UniPoly<Rational>{-xs[j], Rational(1)};
      denom *= xs[i] - xs[j];
    }
    acc = acc + basis.scaled(ys[i] / denom);
  }
  return acc;
}

}  // namespace

UniPoly<Rational> resultant_bivariate(const TriPoly& f, const TriPoly& g,
                                      int elim_axis, int kept_axis) {
  if (elim_axis == kept_axis || elim_axis < 0 || elim_axis > 2 || kept_axis < 0 ||
      kept_axis > 2)
    throw std::invalid_argument("resultant axes must be two distinct axes");
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("resultant of the zero polynomial");
  const int other = 3 - elim_axis - kept_axis;
  if (f.uses(other) || g.uses(other))
    throw std::invalid_argument("resultant inputs must involve only the chosen axes");

  auto lift = [&](const TriPoly& p) {
    std::vector<UniPoly<Rational>> rows;
    for (const TriPoly& c : p.coeffs_in(elim_axis))
      rows.push_back(c.to_unipoly(kept_axis));
    return rows;
  };
  std::vector<UniPoly<Rational>> F = lift(f), G = lift(g);
  const long m = static_cast<long>(F.size()) - 1;
  const long n = static_cast<long>(G.size()) - 1;
  if (m == 0 && n == 0) return UniPoly<Rational>::one();

  auto max_deg = [](const std::vector<UniPoly<Rational>>& v) {
    long d = 0;
    for (const auto& p : v) d = std::max(d, p.degree().value_or(0));
    return d;
  };
  const long bound = n * max_deg(F) + m * max_deg(G);
  const size_t N = m + n;

  std::vector<Rational> xs, ys;
  for (long pt = 0; pt <= bound; ++pt) {
    Rational x(pt);
    std::vector<std::vector<Rational>> mat(N, std::vector<Rational>(N, Rational(0)));
    for (long r = 0; r < n; ++r)
      for (long j = 0; j <= m; ++j) mat[r][r + j] = F[m - j].eval(x);
    for (long r = 0; r < m; ++r)
      for (long j = 0; j <= n; ++j) mat[n + r][r + j] = G[n - j].eval(x);
    xs.push_back(x);
    ys.push_back(det_exact(std::move(mat)));
  }
  return lagrange_interpolate(xs, ys);
}

}  // namespace azulink
