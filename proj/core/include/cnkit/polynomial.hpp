#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cnkit/field.hpp"
#include "cnkit/monomial.hpp"

namespace cnkit {

/// A sparse multivariate polynomial: a map from monomials to nonzero
/// coefficients, with fixed arity and variable names. The zero polynomial
/// has an empty term map. Term iteration is graded-lexicographic.
///
/// Polynomials are immutable values; all operations are pure and safe to
/// share across threads.
class Polynomial {
public:
  using TermMap = std::map<Monomial, FieldValue, GradedLexLess>;

  /// The zero polynomial.
  Polynomial(FieldSpec spec, std::vector<std::string> variables);

  static Polynomial zero(FieldSpec spec, std::vector<std::string> variables) {
    return Polynomial(std::move(spec), std::move(variables));
  }
  static Polynomial constant(FieldSpec spec, std::vector<std::string> variables,
                             const FieldValue& value);
  /// The monomial x_index^power with coefficient 1.
  static Polynomial variable(FieldSpec spec, std::vector<std::string> variables,
                             std::size_t index, std::uint32_t power = 1);
  /// Builds a polynomial from (monomial, coefficient) pairs, summing
  /// duplicates and dropping zero coefficients.
  static Polynomial from_terms(
      FieldSpec spec, std::vector<std::string> variables,
      const std::vector<std::pair<Monomial, FieldValue>>& terms);

  std::size_t arity() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const FieldSpec& spec() const { return spec_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Total degree; 0 for the zero polynomial.
  std::uint64_t total_degree() const;
  /// Degree in variable i; 0 for the zero polynomial.
  std::uint32_t degree_in(std::size_t i) const;

  /// The stored coefficient of a monomial, or zero. This is the
  /// direct-expansion oracle for coefficient queries.
  FieldValue coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  /// Multiplication by a scalar.
  Polynomial scale(const FieldValue& c) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Exact value at a point (length must equal the arity).
  FieldValue eval(const std::vector<FieldValue>& point) const;

  /// Substitutes x_i = a; the result keeps the arity with exponent 0 on i.
  Polynomial partial_eval(std::size_t i, const FieldValue& a) const;

  struct LinearDivision;

  /// Division by the monic linear factor (x_i - a):
  ///   *this == quotient * (x_i - a) + remainder, exactly,
  /// with deg_{x_i}(remainder) = 0. Every quotient monomial arises from a
  /// term monomial by lowering the i-th exponent.
  LinearDivision divide_by_linear(std::size_t i, const FieldValue& a) const;

  /// The monomials with nonzero coefficient, in canonical order.
  std::vector<Monomial> support() const;

  /// Support elements not strictly dominated by another support element;
  /// an antichain in the coordinatewise order. Pairwise filtering,
  /// quadratic in the term count.
  std::vector<Monomial> maximal_support_elements() const;

  /// Direct check that m has nonzero coefficient and no support element
  /// strictly dominates it; one pass over the terms.
  bool is_maximal_support_element(const Monomial& m) const;

  /// The downward closure of the support under the coordinatewise order.
  /// Refuses with a cone-cap error when the closure would exceed `cap`
  /// elements; the closure is diagnostic, not needed on the hot path.
  std::vector<Monomial> cone(std::size_t cap = 1000000) const;

private:
  void require_compatible(const Polynomial& rhs) const;
  void insert_term(const Monomial& m, const FieldValue& c);

  FieldSpec spec_;
  std::vector<std::string> variables_;
  TermMap terms_;
};

struct Polynomial::LinearDivision {
  Polynomial quotient;
  Polynomial remainder;  // degree 0 in the divided variable
};

}  // namespace cnkit
