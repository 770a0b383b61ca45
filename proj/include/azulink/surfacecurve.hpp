#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "azulink/linkgroup.hpp"
#include "azulink/tripoly.hpp"
#include "azulink/unipoly.hpp"

namespace azulink {

// Trace-coordinate surface f = 0 for one case, with the symbol pair whose
// tame symbols are computed along the reducible-character curve.
struct CanonicalSurface {
  LinkCase data;
  TriPoly f;
  TriPoly alpha;
  TriPoly beta;
};
CanonicalSurface canonical_surface(LinkTag tag);

// Verifies the exact identity f = beta * z^k + remainder against the
// per-case table (k = 2 for L622, else 1) and returns the remainder.
// A mismatch is a fatal internal-consistency error.
TriPoly decomposition_identity(LinkTag tag);

enum class CurveKind { lines, elliptic_proj, hyperelliptic_fiber };

struct LinePiece {
  std::string label;
  std::array<Rational, 3> base;
  std::array<Rational, 3> direction;
  bool selected = false;
};

// The curve C = {f = beta = 0} in the shape the verdict computation
// consumes: four parametrized lines, a plane model under a z substitution,
// or an implicit pair carrying a fiberwise double cover.  Every piece is
// re-verified symbolically on construction.
struct CurveDescriptor {
  CurveKind kind;
  std::vector<LinePiece> lines;    // kind == lines
  std::optional<TriPoly> z_rule;   // z = z_rule(x, y) when the remainder is linear in z
  std::vector<TriPoly> relations;  // implicit equations cutting out C
  std::array<Rational, 3> witness;
};
CurveDescriptor curve_of_reducibles(LinkTag tag);

// Restriction of g to the affine line base + t * direction, as a univariate
// polynomial in the parameter t.
UniPoly<Rational> restrict_to_line(const TriPoly& g,
                                   const std::array<Rational, 3>& base,
                                   const std::array<Rational, 3>& direction);

// Vanishing order of the function along the selected component of C:
// 0 when the function is nonzero at the witness, 1 when it vanishes
// identically on the component and the surfaces f = 0 and function = 0 meet
// transversely at the witness (some 2x2 Jacobian minor nonzero there).
// Any other situation throws "indeterminate order": out of scope.
long transversal_order(LinkTag tag, const TriPoly& function);

// Tame symbol of (alpha, beta) along C with its restriction data.  With
// orders (0, 1) the symbol is 1/alpha, recorded as the class of alpha (an
// element and its inverse agree modulo squares).
struct TameSymbolReport {
  long ord_alpha = 0;
  long ord_beta = 0;
  TriPoly symbol_rep;
  CurveDescriptor restriction;
  bool trivial = false;  // verdict slot, filled by the downstream modules
};
TameSymbolReport tame_symbol(LinkTag tag);

// Per-line symbol data for the four-line case.  On the two lines where
// alpha vanishes identically the symbol is the residue of -beta/alpha read
// off a transverse slice inside the surface; on the other two it is the
// restriction of alpha.  Either way the representative is reduced to the
// monic product of its odd-multiplicity factors, which is trivial exactly
// when it is constant.
struct LineSymbol {
  LinePiece line;
  long ord_alpha = 0;
  long ord_beta = 0;
  UniPoly<Rational> symbol;
  bool nontrivial = false;
};
std::vector<LineSymbol> whitehead_line_symbols();

}  // namespace azulink
