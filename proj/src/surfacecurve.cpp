#include "azulink/surfacecurve.hpp"

#include <stdexcept>

namespace azulink {

namespace {

Rational eval_at(const TriPoly& g, const std::array<Rational, 3>& p) {
  return g.eval(p[0], p[1], p[2]);
}

std::array<TriPoly, 3> gradient(const TriPoly& g) {
  return {g.partial(0), g.partial(1), g.partial(2)};
}

std::array<Rational, 3> gradient_at(const TriPoly& g,
                                    const std::array<Rational, 3>& p) {
  return {eval_at(g.partial(0), p), eval_at(g.partial(1), p),
          eval_at(g.partial(2), p)};
}

bool some_minor_nonzero(const std::array<Rational, 3>& a,
                        const std::array<Rational, 3>& b) {
  return a[0] * b[1] - a[1] * b[0] != 0 || a[0] * b[2] - a[2] * b[0] != 0 ||
         a[1] * b[2] - a[2] * b[1] != 0;
}

// g == c * h for a rational constant c.  Sufficient as an ideal-membership
// test here: the functions tested never exceed the relation's degree.
bool rational_multiple_of(const TriPoly& g, const TriPoly& h) {
  if (g.is_zero()) return true;
  const auto& [e, hc] = *h.terms().begin();
  Rational c = g.coeff(e[0], e[1], e[2]) / hc;
  if (c == 0) return false;
  return g == h.scaled(c);
}

// Rewrites axis^2 -> sub until the degree in axis drops below 2: the normal
// form modulo a relation axis^2 - sub with sub of degree <= 1 in axis.
TriPoly reduce_power(TriPoly p, int axis, const TriPoly& sub) {
  while (p.degree_in(axis) >= 2) {
    TriPoly low, high;
    for (const auto& [e, c] : p.terms()) {
      TriPoly::Expo d = e;
      if (d[axis] >= 2) {
        d[axis] -= 2;
        high = high + TriPoly::monomial(c, d[0], d[1], d[2]);
      } else {
        low = low + TriPoly::monomial(c, d[0], d[1], d[2]);
      }
    }
    p = low + high * sub;
  }
  return p;
}

// Monic product of the odd-multiplicity irreducible factors of g: the
// canonical representative of g modulo squares in the function field of a
// complex curve, where every constant is a square.
UniPoly<Rational> squareclass_rep(const UniPoly<Rational>& g) {
  if (g.is_zero())
    throw std::invalid_argument("square class of the zero function");
  UniPoly<Rational> m = g.make_monic();
  if (*m.degree() == 0) return UniPoly<Rational>::one();
  UniPoly<Rational> w = squarefree_part(m);
  UniPoly<Rational> h = m.div_exact(w);
  if (h.is_one()) return w;
  return w.div_exact(squareclass_rep(h));
}

const LinePiece* selected_line(const CurveDescriptor& d) {
  for (const LinePiece& l : d.lines)
    if (l.selected) return &l;
  return nullptr;
}

}  // namespace

CanonicalSurface canonical_surface(LinkTag tag) {
  CanonicalSurface s;
  s.data = case_data(tag);
  s.f = s.data.canonical_poly;
  SymbolPair pair = hilbert_symbol_pair(tag);
  s.alpha = pair.alpha;
  s.beta = pair.beta;
  return s;
}

TriPoly decomposition_identity(LinkTag tag) {
  CanonicalSurface s = canonical_surface(tag);
  TriPoly x = TriPoly::variable(0);
  TriPoly y = TriPoly::variable(1);
  TriPoly z = TriPoly::variable(2);
  unsigned k = tag == LinkTag::L622 ? 2 : 1;
  TriPoly rem = s.f - s.beta * z.pow(k);
  TriPoly expected;
  switch (tag) {
    case LinkTag::W512:
      expected = z.scaled(Rational(2)) - x * y;
      break;
    case LinkTag::L632:
      expected = z.scaled(Rational(3)) - x * y;
      break;
    case LinkTag::L622:
      expected = z * z - x * y * z + TriPoly::constant(Rational(1));
      break;
  }
  if (rem != expected)
    throw std::logic_error("surface decomposition identity failed for " +
                           tag_name(tag));
  return rem;
}

UniPoly<Rational> restrict_to_line(const TriPoly& g,
                                   const std::array<Rational, 3>& base,
                                   const std::array<Rational, 3>& direction) {
  TriPoly t = TriPoly::variable(0);
  TriPoly cur = g;
  for (int axis = 0; axis < 3; ++axis)
    cur = cur.substitute(
        axis, TriPoly::constant(base[axis]) + t.scaled(direction[axis]));
  if (cur.uses(1) || cur.uses(2))
    throw std::logic_error("line restriction left residual variables");
  return cur.to_unipoly(0);
}

CurveDescriptor curve_of_reducibles(LinkTag tag) {
  CanonicalSurface s = canonical_surface(tag);
  TriPoly rem = decomposition_identity(tag);
  TriPoly x = TriPoly::variable(0);
  TriPoly y = TriPoly::variable(1);
  CurveDescriptor d;
  switch (tag) {
    case LinkTag::W512: {
      d.kind = CurveKind::lines;
      d.z_rule = (x * y).scaled(Rational(1, 2));
      // On beta = 0 the decomposition forces z = xy/2, and there beta
      // factors through four planes: beta(x, y, xy/2) = -(x^2-4)(y^2-4)/4.
      TriPoly factored =
          ((x * x - TriPoly::constant(Rational(4))) *
           (y * y - TriPoly::constant(Rational(4))))
              .scaled(Rational(-1, 4));
      if (s.beta.substitute(2, *d.z_rule) != factored)
        throw std::logic_error("reducible-curve factorization failed");
      d.lines = {
          {"L1", {Rational(2), Rational(0), Rational(0)},
           {Rational(0), Rational(1), Rational(1)}, false},
          {"L2", {Rational(-2), Rational(0), Rational(0)},
           {Rational(0), Rational(1), Rational(-1)}, false},
          {"L3", {Rational(0), Rational(2), Rational(0)},
           {Rational(1), Rational(0), Rational(1)}, true},
          {"L4", {Rational(0), Rational(-2), Rational(0)},
           {Rational(1), Rational(0), Rational(-1)}, false},
      };
      for (const LinePiece& l : d.lines)
        if (!restrict_to_line(s.f, l.base, l.direction).is_zero() ||
            !restrict_to_line(s.beta, l.base, l.direction).is_zero())
          throw std::logic_error("line " + l.label +
                                 " fails the curve equations");
      d.witness = {Rational(0), Rational(2), Rational(0)};
      break;
    }
    case LinkTag::L632: {
      d.kind = CurveKind::elliptic_proj;
      d.z_rule = (x * y).scaled(Rational(1, 3));
      TriPoly h = s.beta.substitute(2, *d.z_rule).scaled(Rational(9));
      TriPoly expected = TriPoly::monomial(Rational(9), 2, 0, 0) +
                         TriPoly::monomial(Rational(9), 0, 2, 0) +
                         TriPoly::monomial(Rational(-2), 2, 2, 0) +
                         TriPoly::constant(Rational(-36));
      if (h != expected)
        throw std::logic_error("plane model of the reducible curve failed");
      d.relations = {h};
      d.witness = {Rational(0), Rational(2), Rational(0)};
      break;
    }
    case LinkTag::L622: {
      d.kind = CurveKind::hyperelliptic_fiber;
      TriPoly g1 = x * x + y * y - TriPoly::constant(Rational(5));
      if (s.beta != g1 + rem)
        throw std::logic_error("implicit pair does not recover beta");
      d.relations = {g1, rem};
      d.witness = {Rational(1), Rational(2), Rational(1)};
      break;
    }
  }
  if (eval_at(s.f, d.witness) != 0 || eval_at(s.beta, d.witness) != 0)
    throw std::logic_error("witness does not lie on the curve for " +
                           tag_name(tag));
  if (eval_at(s.alpha, d.witness) == 0)
    throw std::logic_error("witness annihilates alpha for " + tag_name(tag));
  if (d.z_rule && eval_at(*d.z_rule, d.witness) != d.witness[2])
    throw std::logic_error("witness violates the z substitution for " +
                           tag_name(tag));
  for (const TriPoly& r : d.relations)
    if (eval_at(r, d.witness) != 0)
      throw std::logic_error("witness violates a curve relation for " +
                             tag_name(tag));
  return d;
}

long transversal_order(LinkTag tag, const TriPoly& function) {
  CanonicalSurface s = canonical_surface(tag);
  CurveDescriptor d = curve_of_reducibles(tag);
  if (eval_at(function, d.witness) != 0) return 0;
  bool vanishes = false;
  switch (d.kind) {
    case CurveKind::lines: {
      const LinePiece* sel = selected_line(d);
      vanishes = sel &&
                 restrict_to_line(function, sel->base, sel->direction).is_zero();
      break;
    }
    case CurveKind::elliptic_proj:
      vanishes =
          rational_multiple_of(function.substitute(2, *d.z_rule), d.relations[0]);
      break;
    case CurveKind::hyperelliptic_fiber: {
      // Normal form modulo z^2 = xyz - 1, then y^2 = 5 - x^2.
      TriPoly zsub = TriPoly::variable(0) * TriPoly::variable(1) *
                         TriPoly::variable(2) -
                     TriPoly::constant(Rational(1));
      TriPoly ysub = TriPoly::constant(Rational(5)) -
                     TriPoly::variable(0) * TriPoly::variable(0);
      vanishes = reduce_power(reduce_power(function, 2, zsub), 1, ysub).is_zero();
      break;
    }
  }
  if (!vanishes)
    throw std::runtime_error(
        "indeterminate order: the function vanishes at the witness but not "
        "certifiably along the component");
  if (some_minor_nonzero(gradient_at(s.f, d.witness),
                         gradient_at(function, d.witness)))
    return 1;
  throw std::runtime_error(
      "indeterminate order: all Jacobian minors vanish at the witness");
}

TameSymbolReport tame_symbol(LinkTag tag) {
  CanonicalSurface s = canonical_surface(tag);
  TameSymbolReport rep;
  rep.restriction = curve_of_reducibles(tag);
  rep.ord_alpha = transversal_order(tag, s.alpha);
  rep.ord_beta = transversal_order(tag, s.beta);
  if (rep.ord_alpha == 0 && rep.ord_beta == 0) {
    rep.symbol_rep = TriPoly::constant(Rational(1));
    rep.trivial = true;
  } else if (rep.ord_alpha == 0 && rep.ord_beta == 1) {
    // (-1)^0 * beta^0 / alpha = 1/alpha, same class as alpha.
    rep.symbol_rep = s.alpha;
  } else {
    throw std::domain_error("tame symbol: order pattern (" +
                            std::to_string(rep.ord_alpha) + ", " +
                            std::to_string(rep.ord_beta) +
                            ") not supported on the selected component");
  }
  return rep;
}

std::vector<LineSymbol> whitehead_line_symbols() {
  CanonicalSurface s = canonical_surface(LinkTag::W512);
  CurveDescriptor d = curve_of_reducibles(LinkTag::W512);
  std::array<TriPoly, 3> gf = gradient(s.f);
  std::array<TriPoly, 3> ga = gradient(s.alpha);
  std::array<TriPoly, 3> gb = gradient(s.beta);
  std::vector<LineSymbol> out;
  for (const LinePiece& l : d.lines) {
    LineSymbol ls;
    ls.line = l;
    if (!restrict_to_line(s.beta, l.base, l.direction).is_zero())
      throw std::logic_error("beta does not vanish along " + l.label);
    auto gfb = gradient_at(s.f, l.base);
    if (!some_minor_nonzero(gfb, gradient_at(s.beta, l.base)))
      throw std::runtime_error(
          "indeterminate order: beta minors vanish at the base of " + l.label);
    ls.ord_beta = 1;
    UniPoly<Rational> ra = restrict_to_line(s.alpha, l.base, l.direction);
    if (!ra.is_zero()) {
      ls.ord_alpha = 0;
      ls.symbol = squareclass_rep(ra);
    } else {
      if (!some_minor_nonzero(gfb, gradient_at(s.alpha, l.base)))
        throw std::runtime_error(
            "indeterminate order: alpha minors vanish at the base of " +
            l.label);
      ls.ord_alpha = 1;
      // Slice direction v = grad f x direction: tangent to the surface and
      // transverse to the line.  Both alpha and beta vanish to first order,
      // so -beta/alpha restricts to minus the ratio of the directional
      // derivatives along v; modulo squares the quotient is the product.
      std::array<UniPoly<Rational>, 3> gfl, v;
      for (int i = 0; i < 3; ++i)
        gfl[i] = restrict_to_line(gf[i], l.base, l.direction);
      const auto& dir = l.direction;
      v[0] = gfl[1].scaled(dir[2]) - gfl[2].scaled(dir[1]);
      v[1] = gfl[2].scaled(dir[0]) - gfl[0].scaled(dir[2]);
      v[2] = gfl[0].scaled(dir[1]) - gfl[1].scaled(dir[0]);
      UniPoly<Rational> num, den;
      for (int i = 0; i < 3; ++i) {
        num = num + restrict_to_line(gb[i], l.base, l.direction) * v[i];
        den = den + restrict_to_line(ga[i], l.base, l.direction) * v[i];
      }
      if (num.is_zero() || den.is_zero())
        throw std::runtime_error(
            "indeterminate order: degenerate slice along " + l.label);
      ls.symbol = squareclass_rep(num * den);
    }
    ls.nontrivial = *ls.symbol.degree() >= 1;
    out.push_back(ls);
  }
  return out;
}

}  // namespace azulink
