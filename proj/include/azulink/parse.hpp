#pragma once

#include <string>

#include "azulink/tripoly.hpp"

namespace azulink {

// Grammar: signed sums of terms; a term is an optional scalar times variable
// powers ("3*x^2*y - 7/2*z + 52.5", the "*" between factors is optional).
// Scalars are integers, p/q fractions, or exact decimals.  Variables are
// x, y, z only.  Throws std::invalid_argument on anything else.
TriPoly parse_tripoly(const std::string& text);

// Same grammar restricted to the single variable x.
UniPoly<Rational> parse_unipoly(const std::string& text);

struct ParsedTriple {
  UniPoly<Rational> u, v;
  long n;
};

// "u;v;n", the serialized divisor-triple form.
ParsedTriple parse_triple(const std::string& text);

}  // namespace azulink
