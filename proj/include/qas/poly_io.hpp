#pragma once

#include <stdexcept>
#include <string>

#include "qas/parampoly.hpp"

namespace qas {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)),
        position(pos) {}
  size_t position;
};

// Grammar (whitespace tolerated):
//   expression := ["-"] term {("+"|"-") term}
//   term       := coeff ["*" factor {"*" factor}] | factor {"*" factor}
//   coeff      := integer | "(" integer "/" positive-integer ")"
//   factor     := ("pi" | varname) ["^" integer]
ParamPoly parse_poly(const std::string& text);

// Canonical text form: graded-lex term order, descending pi powers within a
// coefficient, unit coefficients elided.  parse_poly(emit_poly(p)) == p.
std::string emit_poly(const ParamPoly& p);

}  // namespace qas
