#include "azulink/hyperjac.hpp"

#include <sstream>
#include <stdexcept>

namespace azulink {

namespace {

long deg_or_zero(const UniPoly<Rational>& p) {
  auto d = p.degree();
  return d ? *d : 0;
}

void require_valid(const HyperCurve& curve, const MumfordTriple& t,
                   const char* what) {
  TripleCheck chk = validate_mumford(curve, t);
  if (chk.ok) return;
  std::string msg(what);
  msg += ": invalid triple " + t.str();
  for (const std::string& f : chk.failures) msg += "; " + f;
  throw std::invalid_argument(msg);
}

}  // namespace

UniPoly<Rational> polynomial_sqrt_part(const UniPoly<Rational>& f) {
  if (f.is_zero() || !f.is_monic())
    throw std::invalid_argument("square root part needs a monic polynomial");
  long deg = *f.degree();
  if (deg % 2 != 0 || deg < 2)
    throw std::invalid_argument("square root part needs even degree >= 2");
  long m = deg / 2;
  std::vector<Rational> v(m + 1);
  v[m] = 1;
  for (long i = m - 1; i >= 0; --i) {
    Rational s = 0;
    for (long j = i + 1; j <= m - 1; ++j) {
      long k = m + i - j;
      if (k > i && k < m) s += v[j] * v[k];
    }
    v[i] = (f.coeff(m + i) - s) / 2;
  }
  return UniPoly<Rational>::from_coeffs(std::move(v));
}

HyperCurve::HyperCurve(UniPoly<Rational> f) : f_(std::move(f)) {
  if (f_.is_zero() || !f_.is_monic())
    throw std::invalid_argument("curve polynomial must be monic");
  long deg = *f_.degree();
  if (deg < 4 || deg % 2 != 0)
    throw std::invalid_argument(
        "curve polynomial must have even degree >= 4 (two points at infinity, "
        "genus >= 1)");
  UniPoly<Rational> g = gcd_monic(f_, f_.derivative());
  if (*g.degree() > 0)
    throw std::invalid_argument("curve polynomial must be separable");
  genus_ = deg / 2 - 1;
  V_ = polynomial_sqrt_part(f_);
}

std::string MumfordTriple::str() const {
  std::ostringstream os;
  os << "[" << u.str("x") << ", " << v.str("x") << ", " << n << "]";
  if (starred) os << "*";
  return os.str();
}

TripleCheck validate_mumford(const HyperCurve& curve, const MumfordTriple& t) {
  TripleCheck chk{true, {}};
  auto fail = [&chk](std::string m) {
    chk.ok = false;
    chk.failures.push_back(std::move(m));
  };
  if (t.u.is_zero() || !t.u.is_monic()) {
    fail("u is not monic");
    return chk;  // nothing else is meaningful
  }
  long du = *t.u.degree();
  if (!t.v.is_zero() && *t.v.degree() >= du)
    fail("deg v is not below deg u");
  UniPoly<Rational> rem = (curve.f() - t.v * t.v).mod(t.u);
  if (!rem.is_zero()) fail("u does not divide f - v^2");
  long hi = (t.starred ? 2 * curve.genus() : curve.genus()) - du;
  if (t.n < 0 || t.n > hi)
    fail("n = " + std::to_string(t.n) + " outside [0, " + std::to_string(hi) +
         "]");
  return chk;
}

MumfordTriple identity_triple(long genus) {
  if (genus < 1) throw std::invalid_argument("identity_triple: genus must be >= 1");
  return {UniPoly<Rational>::one(), UniPoly<Rational>(), (genus + 1) / 2, false};
}

MumfordTriple identity_triple(const HyperCurve& curve) {
  return identity_triple(curve.genus());
}

MumfordTriple compose(const HyperCurve& curve, const MumfordTriple& a,
                      const MumfordTriple& b) {
  if (a.starred || b.starred)
    throw std::invalid_argument("compose expects unstarred triples");
  require_valid(curve, a, "compose");
  require_valid(curve, b, "compose");
  Xgcd3<Rational> e = xgcd3(a.u, b.u, a.v + b.v);
  const UniPoly<Rational>& w = e.w;
  UniPoly<Rational> u3 = (a.u * b.u).div_exact(w * w);
  UniPoly<Rational> num =
      e.c1 * a.u * b.v + e.c2 * b.u * a.v + e.c3 * (a.v * b.v + curve.f());
  UniPoly<Rational> v3 = num.div_exact(w).mod(u3);
  long n3 = a.n + b.n + deg_or_zero(w);
  MumfordTriple out{u3, v3, n3, true};
  TripleCheck chk = validate_mumford(curve, out);
  if (!chk.ok)
    throw std::logic_error("compose produced an invalid triple " + out.str());
  return out;
}

MumfordTriple adjust(const HyperCurve& curve, const MumfordTriple& t,
                     AdjustTrace* trace) {
  if (!t.starred)
    throw std::invalid_argument("adjust expects a starred triple");
  require_valid(curve, t, "adjust");
  long g = curve.genus();
  if (deg_or_zero(t.u) > g + 1)
    throw std::domain_error("adjust: deg u exceeds g + 1, outside the reduction scope");
  const long half = (g + 1) / 2;        // ceil(g/2)
  const long three_half = (3 * g + 1) / 2;  // ceil(3g/2)
  MumfordTriple cur = t;
  for (long step = 0; step <= 4 * g + 4; ++step) {
    long du = deg_or_zero(cur.u);
    if (cur.n >= half && cur.n <= three_half - du) {
      MumfordTriple out{cur.u, cur.v, cur.n - half, false};
      if (trace) trace->steps.push_back("step 1: " + out.str());
      TripleCheck chk = validate_mumford(curve, out);
      if (!chk.ok)
        throw std::logic_error("adjust produced an invalid triple " + out.str());
      return out;
    }
    bool low = cur.n < half;
    UniPoly<Rational> vmodu = curve.V().mod(cur.u);
    UniPoly<Rational> vhat =
        low ? cur.v - curve.V() + vmodu : cur.v + curve.V() - vmodu;
    UniPoly<Rational> u2 = (curve.f() - vhat * vhat).div_exact(cur.u);
    if (u2.is_zero())
      throw std::logic_error("adjust: vanishing reduced divisor");
    u2 = u2.make_monic();
    UniPoly<Rational> v2 = (-vhat).mod(u2);
    long n2 = low ? cur.n + g + 1 - deg_or_zero(u2) : cur.n + du - (g + 1);
    cur = MumfordTriple{u2, v2, n2, true};
    if (trace)
      trace->steps.push_back(std::string("step ") + (low ? "2" : "3") +
                             ": vhat = " + vhat.str("x") + " -> " + cur.str());
    TripleCheck chk = validate_mumford(curve, cur);
    if (!chk.ok)
      throw std::logic_error("adjust reached an invalid triple " + cur.str());
  }
  throw std::runtime_error("adjust did not terminate within the step bound");
}

MumfordTriple jac_add(const HyperCurve& curve, const MumfordTriple& a,
                      const MumfordTriple& b, AdjustTrace* trace) {
  MumfordTriple c = compose(curve, a, b);
  if (trace) trace->steps.push_back("compose: " + c.str());
  return adjust(curve, c, trace);
}

MumfordTriple class_from_branch_points(const HyperCurve& curve, const Quad& a1,
                                       const Quad& a2, long n) {
  if (a1 == a2)
    throw std::invalid_argument("branch abscissas must be distinct");
  Quad s = a1 + a2, p = a1 * a2;
  if (!s.is_rational() || !p.is_rational())
    throw std::invalid_argument(
        "branch abscissas must be rational or conjugate over Q");
  for (const Quad* a : {&a1, &a2})
    if (!(eval_quad(curve.f(), *a) == Quad()))
      throw std::invalid_argument("abscissa " + a->str() +
                                  " is not a root of f");
  MumfordTriple out{
      UniPoly<Rational>::from_coeffs({p.to_rational(), -s.to_rational(),
                                      Rational(1)}),
      UniPoly<Rational>(), n, false};
  require_valid(curve, out, "branch class");
  return out;
}

VerticalFiber vertical_fiber_data(const HyperCurve& curve, const Quad& c) {
  VerticalFiber out;
  out.c = c;
  out.f_of_c = eval_quad(curve.f(), c);
  if (out.f_of_c.is_zero())
    throw std::invalid_argument(
        "vertical fiber over a branch point: x - c pulls back to a doubled "
        "point, use class_from_branch_points");
  if (out.f_of_c.is_rational()) {
    Rational fc = out.f_of_c.to_rational();
    Rational root;
    if (is_square(fc, &root)) {
      out.y = Quad(root);
    } else if (c.is_rational()) {
      auto [d, s] = squarefree_decompose(fc);
      out.y = Quad(Rational(0), s, d);
    } else if (auto r = sqrt_in(out.f_of_c, c.d())) {
      out.y = *r;
    } else {
      out.symbolic = true;
    }
  } else if (auto r = sqrt_in(out.f_of_c, out.f_of_c.d())) {
    out.y = *r;
  } else {
    out.symbolic = true;
  }
  std::string ord = out.symbolic
                        ? "y with y^2 = " + out.f_of_c.str()
                        : out.y.str();
  out.principal_note = "div(x - (" + c.str() + ")) = (" + c.str() + ", " + ord +
                       ") + (" + c.str() + ", -(" + ord +
                       ")) - Pinf - Pbarinf: principal";
  return out;
}

BranchClassDifference branch_class_difference() {
  BranchClassDifference out;
  // The base conic x^2 + y^2 = 5 and the locus where the fiber quadratic
  // z^2 - xyz + 1 degenerates: xy = 2 or xy = -2.
  TriPoly conic = TriPoly::monomial(Rational(1), 2, 0, 0) +
                  TriPoly::monomial(Rational(1), 0, 2, 0) +
                  TriPoly::constant(Rational(-5));
  for (int sign : {1, -1}) {
    TriPoly cross = TriPoly::monomial(Rational(1), 1, 1, 0) +
                    TriPoly::constant(Rational(-2 * sign));
    UniPoly<Rational> res = resultant_bivariate(conic, cross, 1, 0);
    auto xs = roots_in_quadratic_fields(res);
    if (!xs) throw std::logic_error("branch abscissas failed to resolve");
    for (const auto& [x0, mult] : *xs) {
      (void)mult;
      Quad y0 = Quad(Rational(2 * sign)) / x0;
      if (!(x0 * x0 + y0 * y0 == Quad(Rational(5))))
        throw std::logic_error("branch point left the conic");
      StereoImage im = stereo_image(x0, y0);
      if (im.infinite) throw std::logic_error("branch point hit the center");
      out.branch_images.push_back(im.value);
    }
  }
  if (out.branch_images.size() != 8)
    throw std::logic_error("expected eight branch points");
  out.weierstrass = to_rational_poly(expand_from_roots(out.branch_images));
  out.genus = hurwitz_genus(2, 0, std::vector<long>(8, 2));
  HyperCurve curve(out.weierstrass);
  if (curve.genus() != out.genus)
    throw std::logic_error("genus mismatch between the cover and the model");
  out.V = curve.V();
  // Branch pairs over the two sections x = 2 and x = -2 of the conic: the
  // zeros and poles of x^2 - 4 restricted there.
  auto pair_class = [&](const Rational& c) {
    Divisor sec = section_divisor(conic, Quad(c));
    std::vector<Quad> images;
    for (const auto& [pt, m] : sec.parts()) {
      if (m != 1) throw std::logic_error("section tangent to the conic");
      StereoImage im = stereo_image(pt.x, pt.y);
      if (im.infinite) throw std::logic_error("section hit the center");
      images.push_back(im.value);
    }
    if (images.size() != 2) throw std::logic_error("expected a point pair");
    return class_from_branch_points(curve, images[0], images[1], 1);
  };
  out.d1 = pair_class(Rational(2));
  out.d2 = pair_class(Rational(-2));
  out.composed = compose(curve, out.d1, out.d2);
  out.trace.push_back("compose: " + out.composed.str());
  AdjustTrace tr;
  out.final_triple = adjust(curve, out.composed, &tr);
  for (std::string& s : tr.steps) out.trace.push_back(std::move(s));
  out.identity = identity_triple(curve);
  out.principal = (out.final_triple == out.identity);
  return out;
}

}  // namespace azulink
