// parse.hpp: text input for polynomials and germ files.
//
// Polynomial syntax: variables are identifiers, `^` for powers, `*` optional
// between a coefficient and a variable, rationals written `a/b`.
// Germ files:
//   source_vars = [x, y, z]
//   target_dim = 3
//   branch = ( x^3 + z^2*x, z, ... )     # one line per branch
// with `#` comments.

#pragma once

#include <string>

#include "germ.hpp"
#include "poly.hpp"

namespace germcalc {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int col)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(col) + ")"),
        line(line),
        col(col) {}
  int line;
  int col;
};

Poly parse_poly(const std::string& text, const RingPtr& ring);

MultiGerm parse_germ_string(const std::string& text);
MultiGerm parse_germ_file(const std::string& path);

// Canonical germ-file form; parse(print(g)) == g.
std::string germ_to_string(const MultiGerm& g);

}  // namespace germcalc
