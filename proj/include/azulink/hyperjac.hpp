#pragma once

#include <optional>
#include <string>
#include <vector>

#include "azulink/curvediv.hpp"
#include "azulink/unipoly.hpp"

namespace azulink {

// Polynomial part of the square root of a monic polynomial of even degree
// 2m: the unique monic V of degree m with deg(V^2 - f) < m + 1, coefficients
// filled top-down, unknowns treated as zero.
UniPoly<Rational> polynomial_sqrt_part(const UniPoly<Rational>& f);

// Real hyperelliptic curve y^2 = f(x) with two rational points at infinity:
// f monic and separable of degree 2g + 2.
class HyperCurve {
 public:
  explicit HyperCurve(UniPoly<Rational> f);
  const UniPoly<Rational>& f() const { return f_; }
  long genus() const { return genus_; }
  // Balancing polynomial from the square root expansion of f.
  const UniPoly<Rational>& V() const { return V_; }

 private:
  UniPoly<Rational> f_;
  long genus_;
  UniPoly<Rational> V_;
};

// Divisor class representation [u, v, n]: the affine part carried by the
// monic u and v (v^2 = f mod u, deg v < deg u), plus n extra copies of the
// first infinite point.  Unstarred triples balance to degree 0 with
// g - deg u - n copies of the second infinite point; starred triples are the
// wider composition outputs with 2g - deg u - n such copies.
struct MumfordTriple {
  UniPoly<Rational> u, v;
  long n = 0;
  bool starred = false;
  bool operator==(const MumfordTriple& rhs) const {
    return u == rhs.u && v == rhs.v && n == rhs.n && starred == rhs.starred;
  }
  bool operator!=(const MumfordTriple& rhs) const { return !(*this == rhs); }
  std::string str() const;
};

// Invariant checks in order: u monic, deg v < deg u, u | f - v^2, n within
// the (starred or unstarred) range.
struct TripleCheck {
  bool ok;
  std::vector<std::string> failures;
};
TripleCheck validate_mumford(const HyperCurve& curve, const MumfordTriple& t);

// [1, 0, ceil(g/2)], the class of 0.
MumfordTriple identity_triple(long genus);
MumfordTriple identity_triple(const HyperCurve& curve);

// Cantor composition of two unstarred triples; the output is starred and
// not yet balanced.  Throws std::invalid_argument on invalid inputs.
MumfordTriple compose(const HyperCurve& curve, const MumfordTriple& a,
                      const MumfordTriple& b);

struct AdjustTrace {
  std::vector<std::string> steps;
};

// Balancing reduction of a starred triple (deg u <= g + 1) to the unstarred
// normal form; each step is recorded.  Throws std::domain_error when the
// input is outside the reduction scope.
MumfordTriple adjust(const HyperCurve& curve, const MumfordTriple& t,
                     AdjustTrace* trace = nullptr);

// compose then adjust.
MumfordTriple jac_add(const HyperCurve& curve, const MumfordTriple& a,
                      const MumfordTriple& b, AdjustTrace* trace = nullptr);

// Class [(a1, 0) + (a2, 0)] with balancing index n; the abscissas must be
// distinct roots of f, both rational or a conjugate quadratic pair.
MumfordTriple class_from_branch_points(const HyperCurve& curve, const Quad& a1,
                                       const Quad& a2, long n);

// Fiber of x = c over a non-branch abscissa: the two points (c, y), (c, -y)
// with y^2 = f(c).  div(x - c) = (c, y) + (c, -y) - Pinf - Pbarinf is
// principal, so such fibers never obstruct a class computation.  When y does
// not lie in the quadratic field generated by c and f(c) the ordinate is
// flagged symbolic; the principality statement stands either way.
struct VerticalFiber {
  Quad c;
  Quad f_of_c;
  bool symbolic = false;
  Quad y;  // meaningful only when !symbolic
  std::string principal_note;
};
VerticalFiber vertical_fiber_data(const HyperCurve& curve, const Quad& c);

// Pinned end-to-end Jacobian computation for the genus-3 double cover
// obtained from the eight ramification values on the conic x^2 + y^2 = 5.
struct BranchClassDifference {
  std::vector<Quad> branch_images;   // stereographic images, 8 values
  UniPoly<Rational> weierstrass;     // product of (T - image)
  long genus;                        // from the ramified double cover count
  UniPoly<Rational> V;
  MumfordTriple d1, d2;              // the two branch-pair classes
  MumfordTriple composed;            // starred composition
  MumfordTriple final_triple;        // balanced normal form
  MumfordTriple identity;
  bool principal;                    // final == identity
  std::vector<std::string> trace;
};
BranchClassDifference branch_class_difference();

}  // namespace azulink
