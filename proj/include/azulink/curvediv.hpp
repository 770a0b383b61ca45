#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "azulink/tripoly.hpp"

namespace azulink {

// Coordinates outside the supported quadratic fields.
struct UnresolvedCoordinates : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Singularity the nodal blow-up machinery cannot certify.
struct UnsupportedSingularity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Point of a plane curve: affine coordinates in a quadratic field, or a
// labeled place (infinite points declared by case data).
struct CurvePoint {
  Quad x, y;
  std::string place;  // empty for finite points
  static CurvePoint finite(Quad px, Quad py) { return {std::move(px), std::move(py), ""}; }
  static CurvePoint at(std::string label) { return {Quad(), Quad(), std::move(label)}; }
  bool infinite() const { return !place.empty(); }
  bool operator==(const CurvePoint& o) const;
  bool operator<(const CurvePoint& o) const;
  std::string str() const;
};

// Formal Z-linear combination of points; zero coefficients are never stored.
class Divisor {
 public:
  Divisor() = default;
  Divisor(std::initializer_list<std::pair<CurvePoint, long>> parts);
  void add(const CurvePoint& p, long mult);
  long coeff(const CurvePoint& p) const;
  const std::map<CurvePoint, long>& parts() const { return parts_; }
  long degree() const;
  long l1() const;  // sum of |coefficients|
  bool is_zero() const { return parts_.empty(); }
  Divisor operator+(const Divisor& rhs) const;
  Divisor operator-(const Divisor& rhs) const;
  Divisor scaled(long k) const;
  bool operator==(const Divisor& rhs) const { return parts_ == rhs.parts_; }
  std::string str() const;

 private:
  std::map<CurvePoint, long> parts_;
};

// Roots of a rational univariate polynomial that lie in Q or a quadratic
// field, with multiplicities.  Returns nullopt if some factor cannot be
// resolved there (degree > 2 irreducible patterns).
std::optional<std::vector<std::pair<Quad, long>>> roots_in_quadratic_fields(
    const UniPoly<Rational>& p);

// Projective plane curve F(x, y, t) = 0, axes (0, 1, 2) = (x, y, t).
class PlaneProjCurve {
 public:
  explicit PlaneProjCurve(TriPoly F);
  static PlaneProjCurve from_affine(const TriPoly& bivariate);
  const TriPoly& F() const { return F_; }
  long degree() const { return degree_; }

 private:
  TriPoly F_;
  long degree_;
};

struct ProjPoint {
  Quad x, y, t;  // normalized: first nonzero coordinate is 1
  std::string str() const;
};

struct InfinitePoint {
  ProjPoint point;
  long multiplicity;  // as a root of F(x, y, 0)
  bool smooth;        // some partial derivative nonzero there
};

// The finitely many points with t = 0, smooth/singular classified exactly.
std::vector<InfinitePoint> points_at_infinity(const PlaneProjCurve& curve);

// Multiplicity of the curve at a projective point with rational chart
// coordinates (lowest degree of the translated local equation).
long multiplicity_at(const PlaneProjCurve& curve, const ProjPoint& p);

struct BlowupReport {
  TriPoly tangent_cone;          // in local chart variables (axes 0, 1)
  std::vector<Quad> cone_slopes; // roots of the cone in the first chart
  bool cone_root_at_infinity;    // direction (0 : 1) on the cone
  bool resolved;                 // distinct directions, smooth strict transform
  std::vector<long> d_sequence;  // (2) for a node
};

// Certifies an ordinary double point by one blow-up; throws
// UnsupportedSingularity when the tangent cone is degenerate.
BlowupReport blowup_node(const PlaneProjCurve& curve, const ProjPoint& p);

// All singular points (exact search via elimination); rational-chart only.
std::vector<ProjPoint> singular_points(const PlaneProjCurve& curve);

// (n-1)(n-2)/2 minus one per certified node; throws on any other singularity
// shape or on a negative result.
long plane_genus(const PlaneProjCurve& curve);

// Genus from Riemann-Hurwitz: 2g - 2 = deg (2 g_base - 2) + sum (e - 1).
long hurwitz_genus(long cover_degree, long base_genus,
                   const std::vector<long>& ramification_indices);

// Affine zeros of x = c on a bivariate curve (axes x, y), with
// multiplicities; their count must reach deg_y(curve).
Divisor section_divisor(const TriPoly& curve, const Quad& c);

// Stereographic coordinate on x^2 + y^2 = 5 from the center (0, sqrt 5):
// (x, y) -> sqrt5 * x / (sqrt5 - y).  The center itself maps to infinity.
struct StereoImage {
  bool infinite;
  Quad value;  // valid when finite
};
StereoImage stereo_image(const Quad& x, const Quad& y);

// Degree-2 cover fiber data, declared per base point.
struct FiberData {
  std::vector<CurvePoint> preimages;  // one (ramified) or two
  long ram_index;                     // 2 or 1
};

class DoubleCoverData {
 public:
  void declare(const CurvePoint& base, FiberData fiber);
  const FiberData& fiber(const CurvePoint& base) const;  // throws if undeclared
  Divisor pullback(const Divisor& base) const;

 private:
  std::map<CurvePoint, FiberData> fibers_;
};

// Greedy principality deduction on a genus-1 curve: shrink D by declared
// principal divisors; decide from the terminal shape.  Throws
// std::runtime_error("deduction incomplete") when stuck undecided.
struct Deduction {
  bool principal;
  Divisor final;
  std::vector<std::string> trace;
};
Deduction genus1_not_principal(
    const Divisor& D,
    const std::vector<std::pair<std::string, Divisor>>& relations);

}  // namespace azulink
