#include "azulink/curvediv.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace azulink {

namespace {

// Horner evaluation of a bivariate polynomial (axes 0, 1) at x = x0,
// leaving a univariate polynomial in y over the field of x0.
UniPoly<Quad> eval_x(const TriPoly& p, const Quad& x0) {
  std::vector<Quad> acc;
  for (const auto& [e, c] : p.terms()) {
    if (e[2] != 0) throw std::invalid_argument("eval_x: polynomial uses axis 2");
    Quad term(c);
    for (int i = 0; i < e[0]; ++i) term = term * x0;
    if (static_cast<size_t>(e[1]) >= acc.size()) acc.resize(e[1] + 1);
    acc[e[1]] = acc[e[1]] + term;
  }
  return UniPoly<Quad>::from_coeffs(std::move(acc));
}

// Exact division of every term by axis^k.
TriPoly divide_monomial(const TriPoly& p, int axis, int k) {
  TriPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e[axis] < k) throw std::logic_error("divide_monomial: inexact");
    std::array<int, 3> f = e;
    f[axis] -= k;
    out = out + TriPoly::monomial(c, f[0], f[1], f[2]);
  }
  return out;
}

// Positive divisors of |n|, by trial division.  Guarded against huge inputs.
std::vector<mpz_class> divisors_of(const mpz_class& n_in) {
  mpz_class n = abs(n_in);
  if (n == 0) throw std::invalid_argument("divisors_of: zero");
  std::vector<std::pair<mpz_class, long>> fact;
  mpz_class m = n;
  for (mpz_class p = 2; p * p <= m; ++p) {
    if (p > (1 << 20))
      throw UnresolvedCoordinates("root search: constant term too composite to factor");
    long e = 0;
    while (m % p == 0) { m /= p; ++e; }
    if (e > 0) fact.emplace_back(p, e);
  }
  if (m > 1) fact.emplace_back(m, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : fact) {
    size_t base = divs.size();
    mpz_class pk = 1;
    for (long i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
    if (divs.size() > 100000)
      throw UnresolvedCoordinates("root search: divisor set too large");
  }
  return divs;
}

// Rational roots of a nonzero rational polynomial (no multiplicities).
std::vector<Rational> rational_roots(const UniPoly<Rational>& p) {
  std::vector<Rational> out;
  UniPoly<Rational> sf = squarefree_part(p);
  if (!sf.degree() || *sf.degree() == 0) return out;
  // Clear denominators to integer coefficients.
  mpz_class lcm = 1;
  for (const Rational& c : sf.coeffs()) {
    mpz_class den = c.get_den();
    lcm = lcm / gcd(lcm, den) * den;
  }
  std::vector<mpz_class> ic;
  for (const Rational& c : sf.coeffs()) {
    Rational scaled = c * Rational(lcm);
    ic.push_back(scaled.get_num());
  }
  // Strip a root at zero.
  size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  if (low > 0) out.push_back(Rational(0));
  if (low + 1 >= ic.size()) return out;
  const mpz_class& a0 = ic[low];
  const mpz_class& an = ic.back();
  for (const mpz_class& num : divisors_of(a0))
    for (const mpz_class& den : divisors_of(an))
      for (int sign : {1, -1}) {
        Rational cand(sign * num, den);
        cand.canonicalize();
        if (sf.eval(cand) == 0 &&
            std::find(out.begin(), out.end(), cand) == out.end())
          out.push_back(cand);
      }
  return out;
}

long strip_root(UniPoly<Rational>& work, const Rational& r) {
  UniPoly<Rational> lin = UniPoly<Rational>::from_coeffs({-r, Rational(1)});
  long mult = 0;
  for (;;) {
    auto [q, rem] = work.divmod(lin);
    if (!rem.is_zero()) break;
    work = q;
    ++mult;
  }
  return mult;
}

long strip_factor(UniPoly<Rational>& work, const UniPoly<Rational>& f) {
  long mult = 0;
  for (;;) {
    auto [q, rem] = work.divmod(f);
    if (rem.is_zero()) { work = q; ++mult; continue; }
    break;
  }
  return mult;
}

// Quadratic roots over the coefficient field; nullopt when they would live
// in a degree-4 extension.
std::optional<std::pair<Quad, Quad>> quadratic_roots(const Quad& a, const Quad& b,
                                                     const Quad& c) {
  Quad disc = b * b - Quad(Rational(4)) * a * c;
  Quad two_a = Quad(Rational(2)) * a;
  long ctag = 0;
  for (const Quad* q : {&a, &b, &c})
    if (!q->is_rational()) ctag = q->d();
  if (disc.is_rational()) {
    Rational dr = disc.to_rational();
    if (dr == 0) {
      Quad r = -b / two_a;
      return std::make_pair(r, r);
    }
    auto [d, s] = squarefree_decompose(dr);
    if (d != 1 && ctag != 0 && ctag != d)
      return std::nullopt;  // roots would mix two quadratic fields
    Quad root = (d == 1) ? Quad(s) : Quad(Rational(0), s, d);
    return std::make_pair((-b + root) / two_a, (-b - root) / two_a);
  }
  auto root = sqrt_in(disc, disc.d());
  if (!root) return std::nullopt;
  return std::make_pair((-b + *root) / two_a, (-b - *root) / two_a);
}

// Roots of a polynomial with Quad coefficients, degrees 0..2 only.
std::optional<std::vector<std::pair<Quad, long>>> small_roots(
    const UniPoly<Quad>& g) {
  std::vector<std::pair<Quad, long>> out;
  if (g.is_zero()) throw std::invalid_argument("small_roots: zero polynomial");
  long d = *g.degree();
  if (d == 0) return out;
  if (d == 1) {
    out.emplace_back((Quad() - g.coeff(0)) / g.coeff(1), 1);
    return out;
  }
  if (d == 2) {
    Quad disc = g.coeff(1) * g.coeff(1) -
                Quad(Rational(4)) * g.coeff(2) * g.coeff(0);
    if (disc == Quad()) {
      out.emplace_back((Quad() - g.coeff(1)) / (Quad(Rational(2)) * g.coeff(2)), 2);
      return out;
    }
    auto pr = quadratic_roots(g.coeff(2), g.coeff(1), g.coeff(0));
    if (!pr) return std::nullopt;
    out.emplace_back(pr->first, 1);
    out.emplace_back(pr->second, 1);
    return out;
  }
  return std::nullopt;
}

ProjPoint normalize_proj(Quad x, Quad y, Quad t) {
  Quad zero;
  if (!(x == zero)) {
    Quad inv = x.inverse();
    return {Quad(Rational(1)), y * inv, t * inv};
  }
  if (!(y == zero)) {
    Quad inv = y.inverse();
    return {Quad(Rational(0)), Quad(Rational(1)), t * inv};
  }
  if (!(t == zero)) return {Quad(Rational(0)), Quad(Rational(0)), Quad(Rational(1))};
  throw std::invalid_argument("projective point (0 : 0 : 0)");
}

Rational quad_rational(const Quad& q, const char* what) {
  if (!q.is_rational())
    throw UnresolvedCoordinates(std::string(what) + ": coordinate is irrational");
  return q.to_rational();
}

// Local equation in chart variables (axes 0, 1) with the point at the origin.
TriPoly localize(const PlaneProjCurve& curve, const ProjPoint& p) {
  const TriPoly& F = curve.F();
  TriPoly u = TriPoly::variable(0), v = TriPoly::variable(1);
  TriPoly local;
  Quad one(Rational(1));
  if (p.t == one) {
    TriPoly cx = TriPoly::constant(quad_rational(p.x, "chart t=1"));
    TriPoly cy = TriPoly::constant(quad_rational(p.y, "chart t=1"));
    local = F.substitute(0, cx + u).substitute(1, cy + v)
             .substitute(2, TriPoly::constant(Rational(1)));
  } else if (p.x == one) {
    TriPoly cy = TriPoly::constant(quad_rational(p.y, "chart x=1"));
    TriPoly ct = TriPoly::constant(quad_rational(p.t, "chart x=1"));
    local = F.substitute(0, TriPoly::constant(Rational(1)))
             .substitute(1, cy + u);
    local = local.substitute(2, ct + v);
  } else {
    // p = (0 : 1 : t0); for curves meeting t = 0 this is (0 : 1 : 0).
    TriPoly ct = TriPoly::constant(quad_rational(p.t, "chart y=1"));
    local = F.substitute(1, TriPoly::constant(Rational(1)))
             .substitute(0, u);
    local = local.substitute(2, ct + v);
  }
  if (!(local.coeff(0, 0, 0) == Rational(0)))
    throw std::invalid_argument("point does not lie on the curve");
  return local;
}

long lowest_degree(const TriPoly& p) {
  long best = -1;
  for (const auto& [e, c] : p.terms()) {
    long d = e[0] + e[1] + e[2];
    if (best < 0 || d < best) best = d;
  }
  return best;  // -1 for the zero polynomial
}

TriPoly degree_part(const TriPoly& p, long d) {
  TriPoly out;
  for (const auto& [e, c] : p.terms())
    if (e[0] + e[1] + e[2] == d) out = out + TriPoly::monomial(c, e[0], e[1], e[2]);
  return out;
}

bool smooth_at_local(const TriPoly& local, const Quad& u0, const Quad& v0) {
  Quad du = local.partial(0).eval<Quad>(u0, v0, Quad());
  Quad dv = local.partial(1).eval<Quad>(u0, v0, Quad());
  return !(du == Quad()) || !(dv == Quad());
}

}  // namespace

bool CurvePoint::operator==(const CurvePoint& o) const {
  if (infinite() != o.infinite()) return false;
  if (infinite()) return place == o.place;
  return x == o.x && y == o.y;
}

bool CurvePoint::operator<(const CurvePoint& o) const {
  if (infinite() != o.infinite()) return infinite() < o.infinite();
  if (infinite()) return place < o.place;
  if (!(x == o.x)) return x < o.x;
  return y < o.y;
}

std::string CurvePoint::str() const {
  if (infinite()) return place;
  return "(" + x.str() + ", " + y.str() + ")";
}

Divisor::Divisor(std::initializer_list<std::pair<CurvePoint, long>> parts) {
  for (const auto& [p, m] : parts) add(p, m);
}

void Divisor::add(const CurvePoint& p, long mult) {
  if (mult == 0) return;
  auto it = parts_.find(p);
  if (it == parts_.end()) {
    parts_.emplace(p, mult);
    return;
  }
  it->second += mult;
  if (it->second == 0) parts_.erase(it);
}

long Divisor::coeff(const CurvePoint& p) const {
  auto it = parts_.find(p);
  return it == parts_.end() ? 0 : it->second;
}

long Divisor::degree() const {
  long d = 0;
  for (const auto& [p, m] : parts_) d += m;
  return d;
}

long Divisor::l1() const {
  long d = 0;
  for (const auto& [p, m] : parts_) d += std::abs(m);
  return d;
}

Divisor Divisor::operator+(const Divisor& rhs) const {
  Divisor out = *this;
  for (const auto& [p, m] : rhs.parts_) out.add(p, m);
  return out;
}

Divisor Divisor::operator-(const Divisor& rhs) const {
  Divisor out = *this;
  for (const auto& [p, m] : rhs.parts_) out.add(p, -m);
  return out;
}

Divisor Divisor::scaled(long k) const {
  Divisor out;
  if (k == 0) return out;
  for (const auto& [p, m] : parts_) out.add(p, k * m);
  return out;
}

std::string Divisor::str() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, m] : parts_) {
    if (m > 0 && !first) os << " + ";
    if (m < 0) os << (first ? "-" : " - ");
    long a = std::abs(m);
    if (a != 1) os << a << "*";
    os << p.str();
    first = false;
  }
  return os.str();
}

std::optional<std::vector<std::pair<Quad, long>>> roots_in_quadratic_fields(
    const UniPoly<Rational>& p) {
  if (p.is_zero())
    throw std::invalid_argument("roots_in_quadratic_fields: zero polynomial");
  std::vector<std::pair<Quad, long>> out;
  UniPoly<Rational> work = p;
  UniPoly<Rational> residual = squarefree_part(p);
  for (const Rational& r : rational_roots(p)) {
    long m = strip_root(work, r);
    out.emplace_back(Quad(r), m);
    strip_root(residual, r);
  }
  if (!residual.degree())
    throw std::logic_error("root stripping emptied the polynomial");
  long rd = *residual.degree();
  if (rd == 0) return out;
  if (rd != 2) return std::nullopt;
  UniPoly<Rational> monic = residual.make_monic();
  auto pr = quadratic_roots(Quad(residual.coeff(2)), Quad(residual.coeff(1)),
                            Quad(residual.coeff(0)));
  if (!pr) return std::nullopt;  // unreachable: rational discriminant
  long m = strip_factor(work, monic);
  out.emplace_back(pr->first, m);
  out.emplace_back(pr->second, m);
  return out;
}

PlaneProjCurve::PlaneProjCurve(TriPoly F) : F_(std::move(F)) {
  degree_ = F_.total_degree();
  if (degree_ < 1) throw std::invalid_argument("curve: polynomial is constant");
  bool off_line = false;
  for (const auto& [e, c] : F_.terms()) {
    if (e[0] + e[1] + e[2] != degree_)
      throw std::invalid_argument("curve: polynomial is not homogeneous");
    if (e[2] == 0) off_line = true;
  }
  if (!off_line)
    throw std::invalid_argument("curve: contains the line at infinity");
}

PlaneProjCurve PlaneProjCurve::from_affine(const TriPoly& bivariate) {
  if (bivariate.uses(2))
    throw std::invalid_argument("from_affine: expected axes 0 and 1 only");
  return PlaneProjCurve(bivariate.homogenized(2, bivariate.total_degree()));
}

std::string ProjPoint::str() const {
  return "(" + x.str() + " : " + y.str() + " : " + t.str() + ")";
}

std::vector<InfinitePoint> points_at_infinity(const PlaneProjCurve& curve) {
  const TriPoly& F = curve.F();
  TriPoly G = F.substitute(2, TriPoly());
  TriPoly Fx = F.partial(0), Fy = F.partial(1), Ft = F.partial(2);
  auto classify = [&](ProjPoint pt, long mult) {
    bool smooth = !(Fx.eval<Quad>(pt.x, pt.y, pt.t) == Quad()) ||
                  !(Fy.eval<Quad>(pt.x, pt.y, pt.t) == Quad()) ||
                  !(Ft.eval<Quad>(pt.x, pt.y, pt.t) == Quad());
    return InfinitePoint{std::move(pt), mult, smooth};
  };
  std::vector<InfinitePoint> out;
  // Slopes s with G(1, s) = 0, then the vertical direction (0 : 1 : 0).
  TriPoly g2 = G.substitute(0, TriPoly::constant(Rational(1)));
  long slope_deg = 0;
  if (!g2.is_zero() && g2.uses(1)) {
    UniPoly<Rational> g = g2.to_unipoly(1);
    slope_deg = *g.degree();
    auto roots = roots_in_quadratic_fields(g);
    if (!roots)
      throw UnresolvedCoordinates("point at infinity outside quadratic fields");
    for (const auto& [s, m] : *roots)
      out.push_back(classify({Quad(Rational(1)), s, Quad()}, m));
  } else if (!g2.is_zero()) {
    slope_deg = 0;  // G has no y part beyond x^n
  } else {
    throw std::logic_error("points_at_infinity: G(1, s) vanished");
  }
  long vert = curve.degree() - slope_deg;
  if (vert > 0)
    out.push_back(classify({Quad(), Quad(Rational(1)), Quad()}, vert));
  return out;
}

long multiplicity_at(const PlaneProjCurve& curve, const ProjPoint& p) {
  TriPoly local = localize(curve, p);
  long m = lowest_degree(local);
  if (m <= 0) throw std::logic_error("multiplicity_at: local equation degenerate");
  return m;
}

BlowupReport blowup_node(const PlaneProjCurve& curve, const ProjPoint& p) {
  TriPoly local = localize(curve, p);
  long m = lowest_degree(local);
  if (m != 2)
    throw UnsupportedSingularity("blow-up certifies multiplicity-2 points only");
  BlowupReport rep;
  rep.tangent_cone = degree_part(local, 2);
  rep.d_sequence = {2};
  Rational A = rep.tangent_cone.coeff(2, 0, 0);
  Rational B = rep.tangent_cone.coeff(1, 1, 0);
  Rational C = rep.tangent_cone.coeff(0, 2, 0);
  Rational disc = B * B - 4 * A * C;
  if (disc == 0)
    throw UnsupportedSingularity("tangent cone is a double line");
  // Roots of C s^2 + B s + A: directions v = s u.
  rep.cone_root_at_infinity = (C == 0);
  if (C == 0) {
    rep.cone_slopes = {Quad(-A / B)};
  } else {
    auto pr = quadratic_roots(Quad(C), Quad(B), Quad(A));
    if (!pr) throw std::logic_error("rational discriminant failed to split");
    rep.cone_slopes = {pr->first, pr->second};
  }
  rep.resolved = true;
  // First chart: v = u * s, strict transform local(u, u s) / u^2.
  TriPoly chart1 = local.substitute(1, TriPoly::variable(0) * TriPoly::variable(1));
  chart1 = divide_monomial(chart1, 0, 2);
  for (const Quad& s : rep.cone_slopes)
    if (!smooth_at_local(chart1, Quad(), s)) rep.resolved = false;
  if (rep.cone_root_at_infinity) {
    // Second chart: u = v * w, strict transform local(v w, v) / v^2.
    TriPoly chart2 = local.substitute(0, TriPoly::variable(0) * TriPoly::variable(1));
    chart2 = divide_monomial(chart2, 1, 2);
    if (!smooth_at_local(chart2, Quad(), Quad())) rep.resolved = false;
  }
  return rep;
}

std::vector<ProjPoint> singular_points(const PlaneProjCurve& curve) {
  std::vector<ProjPoint> out;
  auto push_unique = [&out](const ProjPoint& p) {
    for (const ProjPoint& q : out)
      if (q.x == p.x && q.y == p.y && q.t == p.t) return;
    out.push_back(p);
  };
  for (const InfinitePoint& ip : points_at_infinity(curve))
    if (!ip.smooth) push_unique(ip.point);

  TriPoly p = curve.F().substitute(2, TriPoly::constant(Rational(1)));
  TriPoly px = p.partial(0), py = p.partial(1);
  if (px.is_zero() && py.is_zero())
    throw std::logic_error("affine part of the curve is constant");
  UniPoly<Rational> xcand;
  if (px.is_zero() || py.is_zero()) {
    // p depends on one variable only; a common root of p and its derivative
    // would force a multiple component.
    const TriPoly& nz = px.is_zero() ? py : px;
    int axis = px.is_zero() ? 1 : 0;
    UniPoly<Rational> q = p.to_unipoly(axis);
    UniPoly<Rational> g = gcd_monic(q, nz.to_unipoly(axis));
    if (*g.degree() > 0)
      throw UnsupportedSingularity("curve has a multiple component");
    return out;
  }
  if (!px.uses(1)) {
    xcand = px.to_unipoly(0);
  } else if (!py.uses(1)) {
    xcand = py.to_unipoly(0);
  } else {
    xcand = resultant_bivariate(px, py, 1, 0);
    if (xcand.is_zero())
      throw UnsupportedSingularity("partials share a curve component");
  }
  if (!xcand.degree() || *xcand.degree() == 0) return out;
  auto roots = roots_in_quadratic_fields(xcand);
  if (!roots)
    throw UnresolvedCoordinates("singular locus outside quadratic fields");
  for (const auto& [x0, mult] : *roots) {
    UniPoly<Quad> P = eval_x(p, x0);
    UniPoly<Quad> Px = eval_x(px, x0);
    UniPoly<Quad> Py = eval_x(py, x0);
    UniPoly<Quad> g = UniPoly<Quad>();
    for (const UniPoly<Quad>* part : {&P, &Px, &Py}) {
      if (part->is_zero()) continue;
      g = g.is_zero() ? part->make_monic() : gcd_monic(g, *part);
    }
    if (g.is_zero())
      throw UnsupportedSingularity("curve has a multiple component");
    if (*g.degree() == 0) continue;
    auto ys = small_roots(g);
    if (!ys)
      throw UnresolvedCoordinates("singular fiber outside quadratic fields");
    for (const auto& [y0, ym] : *ys)
      push_unique(normalize_proj(x0, y0, Quad(Rational(1))));
  }
  return out;
}

long plane_genus(const PlaneProjCurve& curve) {
  long n = curve.degree();
  long drop = 0;
  for (const ProjPoint& sp : singular_points(curve)) {
    long m = multiplicity_at(curve, sp);
    if (m != 2)
      throw UnsupportedSingularity("point of multiplicity " + std::to_string(m) +
                                   " is not a certified node");
    BlowupReport rep = blowup_node(curve, sp);
    if (!rep.resolved)
      throw UnsupportedSingularity("blow-up left a singular strict transform");
    drop += 1;
  }
  long g = (n - 1) * (n - 2) / 2 - drop;
  if (g < 0) throw std::domain_error("computed genus is negative");
  return g;
}

long hurwitz_genus(long cover_degree, long base_genus,
                   const std::vector<long>& ramification_indices) {
  if (cover_degree < 1) throw std::invalid_argument("cover degree must be >= 1");
  if (base_genus < 0) throw std::invalid_argument("base genus must be >= 0");
  long rhs = cover_degree * (2 * base_genus - 2);
  for (long e : ramification_indices) {
    if (e < 1) throw std::invalid_argument("ramification index must be >= 1");
    rhs += e - 1;
  }
  if (rhs % 2 != 0)
    throw std::domain_error("Riemann-Hurwitz parity violated");
  long g = rhs / 2 + 1;
  if (g < 0) throw std::domain_error("computed genus is negative");
  return g;
}

Divisor section_divisor(const TriPoly& curve, const Quad& c) {
  if (curve.uses(2))
    throw std::invalid_argument("section_divisor: expected an affine curve");
  long dy = curve.degree_in(1);
  UniPoly<Quad> fiber = eval_x(curve, c);
  if (fiber.is_zero())
    throw std::invalid_argument("section_divisor: the line lies on the curve");
  if (!fiber.degree() || *fiber.degree() < dy)
    throw std::domain_error(
        "section_divisor: fiber degenerates at infinity (leading coefficient vanishes)");
  Divisor out;
  if (dy == 0) return out;
  std::optional<std::vector<std::pair<Quad, long>>> roots;
  if (*fiber.degree() <= 2) {
    roots = small_roots(fiber);
  } else {
    bool rational = true;
    for (const Quad& q : fiber.coeffs())
      if (!q.is_rational()) rational = false;
    if (rational) {
      std::vector<Rational> rc;
      for (const Quad& q : fiber.coeffs()) rc.push_back(q.to_rational());
      roots = roots_in_quadratic_fields(UniPoly<Rational>::from_coeffs(rc));
    }
  }
  if (!roots)
    throw UnresolvedCoordinates("section roots outside quadratic fields");
  long total = 0;
  for (const auto& [y0, m] : *roots) {
    out.add(CurvePoint::finite(c, y0), m);
    total += m;
  }
  if (total != dy)
    throw UnresolvedCoordinates("section roots outside quadratic fields");
  return out;
}

StereoImage stereo_image(const Quad& x, const Quad& y) {
  if (!(x * x + y * y == Quad(Rational(5))))
    throw std::invalid_argument("stereo_image: point is not on x^2 + y^2 = 5");
  Quad root5(Rational(0), Rational(1), 5);
  if (y == root5) return {true, Quad()};
  return {false, root5 * x / (root5 - y)};
}

void DoubleCoverData::declare(const CurvePoint& base, FiberData fiber) {
  if (fiber.ram_index == 2) {
    if (fiber.preimages.size() != 1)
      throw std::invalid_argument("ramified fiber must have one preimage");
  } else if (fiber.ram_index == 1) {
    if (fiber.preimages.size() != 2 ||
        fiber.preimages[0] == fiber.preimages[1])
      throw std::invalid_argument("split fiber must have two distinct preimages");
  } else {
    throw std::invalid_argument("ramification index must be 1 or 2");
  }
  fibers_[base] = std::move(fiber);
}

const FiberData& DoubleCoverData::fiber(const CurvePoint& base) const {
  auto it = fibers_.find(base);
  if (it == fibers_.end())
    throw std::invalid_argument("no fiber declared over " + base.str());
  return it->second;
}

Divisor DoubleCoverData::pullback(const Divisor& base) const {
  Divisor out;
  for (const auto& [p, m] : base.parts()) {
    const FiberData& fd = fiber(p);
    for (const CurvePoint& pre : fd.preimages) out.add(pre, m * fd.ram_index);
  }
  return out;
}

Deduction genus1_not_principal(
    const Divisor& D,
    const std::vector<std::pair<std::string, Divisor>>& relations) {
  for (const auto& [name, R] : relations) {
    if (R.degree() != 0)
      throw std::invalid_argument("relation " + name + " has nonzero degree");
    if (R.is_zero())
      throw std::invalid_argument("relation " + name + " is zero");
  }
  Deduction out;
  out.trace.push_back("start: " + D.str());
  Divisor cur = D;
  if (cur.degree() != 0) {
    out.principal = false;
    out.final = cur;
    out.trace.push_back("degree " + std::to_string(cur.degree()) +
                        " is nonzero: not principal");
    return out;
  }
  for (int step = 0; step < 200; ++step) {
    if (cur.is_zero()) {
      out.principal = true;
      out.final = cur;
      out.trace.push_back("reduced to 0: principal");
      return out;
    }
    bool improved = false;
    for (const auto& [name, R] : relations) {
      Divisor minus = cur - R;
      if (minus.l1() < cur.l1()) {
        cur = minus;
        out.trace.push_back("subtract " + name + ": " + cur.str());
        improved = true;
        break;
      }
      Divisor plus = cur + R;
      if (plus.l1() < cur.l1()) {
        cur = plus;
        out.trace.push_back("add " + name + ": " + cur.str());
        improved = true;
        break;
      }
    }
    if (!improved) {
      if (cur.l1() == 2 && cur.degree() == 0) {
        // Exactly P - Q with P != Q; such a divisor is principal only on a
        // rational curve, never in genus 1.
        out.principal = false;
        out.final = cur;
        out.trace.push_back("terminal shape " + cur.str() +
                            " is a difference of distinct points: not principal "
                            "on a curve of genus 1");
        return out;
      }
      throw std::runtime_error("deduction incomplete");
    }
  }
  throw std::runtime_error("deduction incomplete");
}

}  // namespace azulink
