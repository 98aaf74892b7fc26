#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace cnkit {

/// An exponent vector in N^n. dominates() is the coordinatewise partial
/// order; containers use the graded lexicographic total order, which is
/// the single canonical ordering throughout the library.
class Monomial {
public:
  explicit Monomial(std::vector<std::uint32_t> exponents)
      : e_(std::move(exponents)) {}

  static Monomial constant(std::size_t arity) {
    return Monomial(std::vector<std::uint32_t>(arity, 0));
  }

  std::size_t arity() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (std::uint32_t e : e_) d += e;
    return d;
  }

  bool is_constant() const { return total_degree() == 0; }

  /// Coordinatewise >=.
  bool dominates(const Monomial& other) const {
    if (e_.size() != other.e_.size()) return false;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] < other.e_[i]) return false;
    }
    return true;
  }

  /// Monomial product (exponent sum).
  Monomial operator*(const Monomial& other) const {
    std::vector<std::uint32_t> sum(e_);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += other.e_[i];
    return Monomial(std::move(sum));
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<std::uint32_t> e_;
};

inline bool graded_lex_less(const Monomial& a, const Monomial& b) {
  std::uint64_t da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a.exponents() < b.exponents();
}

struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return graded_lex_less(a, b);
  }
};

}  // namespace cnkit
