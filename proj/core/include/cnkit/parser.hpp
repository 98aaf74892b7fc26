#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cnkit/polynomial.hpp"

namespace cnkit {

/// A polynomial expression together with its variable list and field.
struct ExprSource {
  std::string text;
  std::vector<std::string> variables;
  FieldSpec spec = FieldSpec::rationals();
};

/// Parses the expression grammar
///
///   expr     := '-'? term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := NUMBER | RATIONAL | VAR ('^' NAT)? | '(' expr ')'
///   RATIONAL := NAT '/' NAT
///
/// Whitespace is insignificant. Products of sums are expanded at parse
/// time, so the result is always in canonical form. Variable names must
/// match [a-zA-Z][a-zA-Z0-9_]* and be distinct. Syntax errors raise
/// ParseError with the character offset; so do unknown variables,
/// negative or non-natural exponents, and "n/d" literals whose
/// denominator vanishes in the field.
Polynomial parse_polynomial(const ExprSource& src);
Polynomial parse_polynomial(std::string_view text,
                            const std::vector<std::string>& variables,
                            const FieldSpec& spec);

/// Canonical rendering: graded-lexicographic descending term order,
/// "n/d" rationals, no "1*" coefficient prefixes, "0" for the zero
/// polynomial. parse_polynomial(format_polynomial(f)) == f.
std::string format_polynomial(const Polynomial& f);

/// Coefficient-free rendering of one monomial ("x^2*y"); "1" when constant.
std::string format_monomial(const Monomial& m,
                            const std::vector<std::string>& variables);

}  // namespace cnkit
