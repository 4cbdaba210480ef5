#pragma once

// Polynomial expressions on the command line.
//
//   poly   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := (NAT | VAR | '(' poly ')') ('^' NAT)?
//
// Literals act through the natural-number action; '-' needs a semiring with
// negatives. Output of render() parses back to the same polynomial.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "symtan/monomial.hpp"
#include "symtan/sym.hpp"

namespace symtan {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  /// 1-based column of the offending character (0 when not tied to a position).
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Splits "x,y,z" into names; rejects empty, malformed or repeated identifiers.
std::vector<std::string> parse_variables(const std::string& csv);

/// Variable i of `vars` becomes Gen{i}.
Polynomial<Gen> parse_polynomial(const std::string& text, const std::vector<std::string>& vars, const Semiring& sr);

/// Comma-separated scalars, e.g. a point "1,2".
std::vector<Scalar> parse_scalars(const std::string& csv, const Semiring& sr);

/// d(p) grouped by the linear variable in declaration order: "2*x*y (x) + x^2 (y)".
std::string format_derivative(const std::vector<std::string>& vars, const DerivativeElement<Gen>& d);

}  // namespace symtan
