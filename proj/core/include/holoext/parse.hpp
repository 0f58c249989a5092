#pragma once

#include <holoext/slicing.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace holoext {

/// Syntax or semantic error in the textual polynomial grammar, carrying the
/// byte offset of the offending token.
struct ParseError : std::runtime_error {
    std::size_t position;

    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

/// Grammar: terms joined by + and -; factors joined by *; coefficient
/// literals are rationals "p/q" or Gaussian literals "(p/q+r/si)"; variables
/// z1..zn, conjugates ~z1..~zn; exponentiation with ^. No floating literals.
BPolyN parse_polyn(std::string_view text, unsigned dim);
BPoly2 parse_poly2(std::string_view text);

/// Gaussian literal on its own ("1", "-3/4", "0+1i", "1/2-2/3i").
GaussRational parse_gaussian(std::string_view text);

/// Canonical printers; parse-then-print-then-parse is the identity, and
/// printing is idempotent on normal-form term order (terms sorted by
/// weighted degree, then exponents).
std::string to_string(const BPoly2& f);
std::string to_string(const BPolyN& f);
std::string to_string(const ParamPoly& q);  // variables "a" and "~a"

}  // namespace holoext
