#include "cnkit/polynomial.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace cnkit {
namespace {

void require_distinct_names(const std::vector<std::string>& names) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) {
      throw Error(Errc::precondition, "duplicate variable name \"" + n + "\"");
    }
  }
}

}  // namespace

Polynomial::Polynomial(FieldSpec spec, std::vector<std::string> variables)
    : spec_(std::move(spec)), variables_(std::move(variables)) {
  require_distinct_names(variables_);
}

Polynomial Polynomial::constant(FieldSpec spec,
                                std::vector<std::string> variables,
                                const FieldValue& value) {
  Polynomial p(std::move(spec), std::move(variables));
  p.insert_term(Monomial::constant(p.arity()), value);
  return p;
}

Polynomial Polynomial::variable(FieldSpec spec,
                                std::vector<std::string> variables,
                                std::size_t index, std::uint32_t power) {
  Polynomial p(std::move(spec), std::move(variables));
  if (index >= p.arity()) {
    throw Error(Errc::arity_mismatch, "variable index out of range");
  }
  std::vector<std::uint32_t> e(p.arity(), 0);
  e[index] = power;
  p.insert_term(Monomial(std::move(e)), FieldValue::one(p.spec_));
  return p;
}

Polynomial Polynomial::from_terms(
    FieldSpec spec, std::vector<std::string> variables,
    const std::vector<std::pair<Monomial, FieldValue>>& terms) {
  Polynomial p(std::move(spec), std::move(variables));
  for (const auto& [m, c] : terms) p.insert_term(m, c);
  return p;
}

void Polynomial::insert_term(const Monomial& m, const FieldValue& c) {
  if (m.arity() != arity()) {
    throw Error(Errc::arity_mismatch, "monomial arity does not match polynomial");
  }
  if (!(c.spec() == spec_)) {
    throw Error(Errc::field_mismatch, "coefficient field does not match polynomial");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::uint64_t Polynomial::total_degree() const {
  if (terms_.empty()) return 0;
  // Graded order: the last term has maximal total degree.
  return terms_.rbegin()->first.total_degree();
}

std::uint32_t Polynomial::degree_in(std::size_t i) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
  return d;
}

FieldValue Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  if (it == terms_.end()) return FieldValue::zero(spec_);
  return it->second;
}

void Polynomial::require_compatible(const Polynomial& rhs) const {
  if (!(spec_ == rhs.spec_)) {
    throw Error(Errc::field_mismatch, "polynomials live in different fields");
  }
  if (variables_ != rhs.variables_) {
    throw Error(Errc::arity_mismatch,
                "polynomials have different variable lists");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(spec_, variables_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  require_compatible(rhs);
  Polynomial r = *this;
  for (const auto& [m, c] : rhs.terms_) r.insert_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  require_compatible(rhs);
  Polynomial r = *this;
  for (const auto& [m, c] : rhs.terms_) r.insert_term(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  require_compatible(rhs);
  Polynomial r(spec_, variables_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      r.insert_term(ma * mb, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::scale(const FieldValue& c) const {
  if (!(c.spec() == spec_)) {
    throw Error(Errc::field_mismatch, "scalar field does not match polynomial");
  }
  Polynomial r(spec_, variables_);
  if (c.is_zero()) return r;
  for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
  return r;
}

FieldValue Polynomial::eval(const std::vector<FieldValue>& point) const {
  if (point.size() != arity()) {
    throw Error(Errc::arity_mismatch, "evaluation point has wrong length");
  }
  for (const auto& v : point) {
    if (!(v.spec() == spec_)) {
      throw Error(Errc::field_mismatch, "evaluation point in wrong field");
    }
  }
  FieldValue acc = FieldValue::zero(spec_);
  for (const auto& [m, c] : terms_) {
    FieldValue t = c;
    for (std::size_t i = 0; i < arity(); ++i) {
      if (m[i] != 0) t *= pow(point[i], m[i]);
    }
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::partial_eval(std::size_t i, const FieldValue& a) const {
  if (i >= arity()) {
    throw Error(Errc::arity_mismatch, "variable index out of range");
  }
  if (!(a.spec() == spec_)) {
    throw Error(Errc::field_mismatch, "substituted value in wrong field");
  }
  // Powers of a up to deg_i, computed once.
  std::vector<FieldValue> powers;
  powers.push_back(FieldValue::one(spec_));
  for (std::uint32_t e = 1; e <= degree_in(i); ++e) {
    powers.push_back(powers.back() * a);
  }
  Polynomial r(spec_, variables_);
  for (const auto& [m, c] : terms_) {
    std::vector<std::uint32_t> e = m.exponents();
    std::uint32_t ei = e[i];
    e[i] = 0;
    r.insert_term(Monomial(std::move(e)), c * powers[ei]);
  }
  return r;
}

Polynomial::LinearDivision Polynomial::divide_by_linear(
    std::size_t i, const FieldValue& a) const {
  if (i >= arity()) {
    throw Error(Errc::arity_mismatch, "variable index out of range");
  }
  if (!(a.spec() == spec_)) {
    throw Error(Errc::field_mismatch, "division point in wrong field");
  }
  // Group terms by the monomial with the i-th exponent removed, then run
  // synthetic division on each univariate column:
  //   b_D = c_D,  b_j = c_j + a * b_{j+1};  remainder b_0, quotient b_{j+1}.
  std::map<Monomial, std::map<std::uint32_t, FieldValue>, GradedLexLess> cols;
  for (const auto& [m, c] : terms_) {
    std::vector<std::uint32_t> rest = m.exponents();
    std::uint32_t d = rest[i];
    rest[i] = 0;
    cols[Monomial(std::move(rest))].emplace(d, c);
  }
  Polynomial quotient(spec_, variables_);
  Polynomial remainder(spec_, variables_);
  for (const auto& [rest, col] : cols) {
    std::uint32_t deg = col.rbegin()->first;
    FieldValue b = FieldValue::zero(spec_);
    for (std::uint32_t j = deg; j-- > 0;) {
      auto it = col.find(j + 1);
      FieldValue c = it == col.end() ? FieldValue::zero(spec_) : it->second;
      b = b * a + c;
      std::vector<std::uint32_t> e = rest.exponents();
      e[i] = j;
      quotient.insert_term(Monomial(std::move(e)), b);
    }
    auto it0 = col.find(0);
    FieldValue c0 = it0 == col.end() ? FieldValue::zero(spec_) : it0->second;
    remainder.insert_term(rest, deg == 0 ? c0 : b * a + c0);
  }
  return {std::move(quotient), std::move(remainder)};
}

std::vector<Monomial> Polynomial::support() const {
  std::vector<Monomial> s;
  s.reserve(terms_.size());
  for (const auto& [m, c] : terms_) s.push_back(m);
  return s;
}

std::vector<Monomial> Polynomial::maximal_support_elements() const {
  std::vector<Monomial> s = support();
  std::vector<Monomial> maximal;
  for (const Monomial& m : s) {
    bool dominated = false;
    for (const Monomial& other : s) {
      if (!(other == m) && other.dominates(m)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(m);
  }
  return maximal;
}

bool Polynomial::is_maximal_support_element(const Monomial& m) const {
  if (coefficient(m).is_zero()) return false;
  for (const auto& [other, c] : terms_) {
    if (!(other == m) && other.dominates(m)) return false;
  }
  return true;
}

std::vector<Monomial> Polynomial::cone(std::size_t cap) const {
  std::set<Monomial, GradedLexLess> closure;
  for (const auto& [m, c] : terms_) {
    // The box below a single element already lower-bounds the closure size.
    std::size_t box = 1;
    for (std::size_t i = 0; i < arity(); ++i) {
      std::uint64_t side = static_cast<std::uint64_t>(m[i]) + 1;
      if (box > cap / side) {
        throw Error(Errc::cone_cap,
                    "cone size exceeds cap of " + std::to_string(cap));
      }
      box *= side;
    }
    std::vector<std::uint32_t> beta(arity(), 0);
    while (true) {
      closure.insert(Monomial(beta));
      if (closure.size() > cap) {
        throw Error(Errc::cone_cap,
                    "cone size exceeds cap of " + std::to_string(cap));
      }
      if (arity() == 0) break;
      std::size_t axis = arity();
      while (axis-- > 0) {
        if (beta[axis] < m[axis]) {
          ++beta[axis];
          for (std::size_t j = axis + 1; j < arity(); ++j) beta[j] = 0;
          break;
        }
        if (axis == 0) {
          axis = arity();  // sentinel: odometer exhausted
          break;
        }
      }
      if (axis == arity()) break;
    }
  }
  return std::vector<Monomial>(closure.begin(), closure.end());
}

}  // namespace cnkit
