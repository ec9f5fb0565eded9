#ifndef RESINV_POLY_TEXT_HPP
#define RESINV_POLY_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "resinv/polynomial.hpp"

namespace resinv {

// Variable names of a ring plus which variables may carry rational exponents.
struct VariableTable {
  std::vector<std::string> names;
  std::vector<bool> fractional_ok;

  int size() const { return static_cast<int>(names.size()); }
  int index_of(std::string_view name) const;  // -1 when undeclared
};

// Grammar: sums of signed products of rationals, variables with optional
// `^k` or `^(p/q)` exponents, and parenthesised subexpressions raised to
// integer powers. Whitespace is ignored.
Polynomial parse_polynomial(std::string_view text, const VariableTable& vars);

// Highest grlex term first, e.g. "-x^3 + y^2" or "3/2*x^2*y^(1/2)".
std::string format_polynomial(const Polynomial& f, const std::vector<std::string>& names);

}  // namespace resinv

#endif
