#include "cnkit/nss.hpp"

#include <algorithm>

namespace cnkit {
namespace {

void require_point_on_grid(const Grid& grid,
                           const std::vector<FieldValue>& point) {
  if (point.size() != grid.arity()) {
    throw Error(Errc::arity_mismatch, "point length does not match grid");
  }
  if (!grid.contains_point(point)) {
    throw Error(Errc::not_on_grid, "point does not lie on the grid");
  }
}

void require_grid_matches_poly(const Polynomial& f, const Grid& grid) {
  if (grid.arity() != f.arity()) {
    throw Error(Errc::arity_mismatch, "grid arity does not match polynomial");
  }
  if (!(grid.spec() == f.spec())) {
    throw Error(Errc::field_mismatch, "grid field does not match polynomial");
  }
}

std::vector<std::string> default_variables(std::size_t n) {
  std::vector<std::string> vars;
  vars.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    vars.push_back("x" + std::to_string(i + 1));
  }
  return vars;
}

// Per-axis interpolation weights w_i(j) = prod_{j' != j} (A_i[j] - A_i[j'])^{-1},
// so that N(a)^{-1} factors as prod_i w_i(a_i).
std::vector<std::vector<FieldValue>> interpolation_weights(const Grid& grid) {
  std::vector<std::vector<FieldValue>> weights(grid.arity());
  for (std::size_t i = 0; i < grid.arity(); ++i) {
    const auto& set = grid.set(i);
    weights[i].reserve(set.size());
    for (std::size_t j = 0; j < set.size(); ++j) {
      FieldValue prod = FieldValue::one(grid.spec());
      for (std::size_t k = 0; k < set.size(); ++k) {
        if (k != j) prod *= set[j] - set[k];
      }
      weights[i].push_back(prod.inverse());
    }
  }
  return weights;
}

// The pointwise sum  sum_a f(a)/N(a)  factors through the terms of f:
// since N(a)^{-1} = prod_i w_i(a_i), distributing the sum over the grid
// gives  sum_{(m,c)} c * prod_i S_i(m_i)  with the weighted power sums
//   S_i(e) = sum_j w_i(j) * A_i[j]^e.
// One pass over the terms instead of one per grid point; the exact
// rational (or residue) result is identical.
FieldValue contract_weighted(const Polynomial& f, const Grid& grid,
                             const std::vector<std::vector<FieldValue>>& w) {
  std::vector<std::vector<FieldValue>> power_sums(grid.arity());
  for (std::size_t i = 0; i < grid.arity(); ++i) {
    const auto& set = grid.set(i);
    std::uint32_t deg = f.degree_in(i);
    std::vector<FieldValue> powers(set.size(), FieldValue::one(grid.spec()));
    power_sums[i].reserve(deg + 1);
    for (std::uint32_t e = 0; e <= deg; ++e) {
      FieldValue s = FieldValue::zero(grid.spec());
      for (std::size_t j = 0; j < set.size(); ++j) {
        if (e > 0) powers[j] *= set[j];
        s += w[i][j] * powers[j];
      }
      power_sums[i].push_back(std::move(s));
    }
  }
  FieldValue acc = FieldValue::zero(f.spec());
  for (const auto& [m, c] : f.terms()) {
    FieldValue term = c;
    for (std::size_t i = 0; i < grid.arity(); ++i) {
      if (term.is_zero()) break;
      term *= power_sums[i][m[i]];
    }
    acc += term;
  }
  return acc;
}

// Lexicographic scan over all axes except `skip_axis` (that coordinate is
// pinned to `pinned`), sharing partial evaluations along the prefix so the
// scan runs near-linearly while settling points in exactly the naive
// enumeration order. A partially evaluated polynomial that collapses to
// zero settles its whole run of points at once; the evaluation counter
// only records full-point values actually computed.
class SubgridScan {
public:
  SubgridScan(const Grid& grid, std::size_t skip_axis)
      : grid_(grid), skip_axis_(skip_axis) {}

  std::uint64_t evaluations() const { return evaluations_; }

  std::optional<std::pair<std::vector<FieldValue>, FieldValue>> run(
      const Polynomial& f, const FieldValue& pinned) {
    point_.assign(grid_.arity(), pinned);
    return descend(f, 0);
  }

private:
  std::optional<std::pair<std::vector<FieldValue>, FieldValue>> descend(
      const Polynomial& f, std::size_t axis) {
    while (axis < grid_.arity() && axis == skip_axis_) ++axis;
    if (f.is_zero()) return std::nullopt;
    if (axis == grid_.arity()) {
      ++evaluations_;
      return std::make_pair(point_,
                            f.coefficient(Monomial::constant(f.arity())));
    }
    for (const FieldValue& a : grid_.set(axis)) {
      point_[axis] = a;
      auto hit = descend(f.partial_eval(axis, a), axis + 1);
      if (hit) return hit;
    }
    return std::nullopt;
  }

  const Grid& grid_;
  std::size_t skip_axis_;
  std::uint64_t evaluations_ = 0;
  std::vector<FieldValue> point_;
};

WitnessReport recursive_search(const Polynomial& f, const Monomial& alpha,
                               const Grid& grid, std::uint64_t& evaluations) {
  if (alpha.total_degree() == 0) {
    // Maximality of the zero exponent vector forces f to be a nonzero
    // constant here.
    std::vector<FieldValue> point = grid.first_point();
    FieldValue value = f.eval(point);
    ++evaluations;
    if (value.is_zero()) {
      throw Error(Errc::internal,
                  "recursion base case evaluated to zero; this contradicts "
                  "the induction invariant");
    }
    WitnessReport report;
    report.point = std::move(point);
    report.value = std::move(value);
    return report;
  }

  std::size_t axis = 0;
  while (alpha[axis] == 0) ++axis;
  const FieldValue a = grid.set(axis).front();

  auto division = f.divide_by_linear(axis, a);

  if (!division.remainder.is_zero()) {
    SubgridScan scan(grid, axis);
    auto hit = scan.run(division.remainder, a);
    evaluations += scan.evaluations();
    if (hit) {
      WitnessReport report;
      report.point = std::move(hit->first);
      report.value = std::move(hit->second);
      return report;
    }
  }

  // The remainder vanishes on the subgrid, so the quotient inherits the
  // induction hypothesis with alpha_i - 1 over A_i minus the fixed element.
  std::vector<std::uint32_t> reduced = alpha.exponents();
  --reduced[axis];
  WitnessReport inner =
      recursive_search(division.quotient, Monomial(std::move(reduced)),
                       grid.without_element(axis, 0), evaluations);
  // f(p) = (p_axis - a) * g(p) at the inner witness.
  inner.value = (inner.point->at(axis) - a) * *inner.value;
  if (inner.value->is_zero()) {
    throw Error(Errc::internal,
                "recursive witness evaluated to zero; this contradicts the "
                "induction invariant");
  }
  return inner;
}

}  // namespace

FieldValue normalizer(const Grid& grid, const std::vector<FieldValue>& point) {
  require_point_on_grid(grid, point);
  FieldValue prod = FieldValue::one(grid.spec());
  for (std::size_t i = 0; i < grid.arity(); ++i) {
    for (const FieldValue& b : grid.set(i)) {
      if (!(b == point[i])) prod *= point[i] - b;
    }
  }
  return prod;
}

Polynomial chi_indicator(const Grid& grid,
                         const std::vector<FieldValue>& point) {
  FieldValue n = normalizer(grid, point);
  Polynomial chi = Polynomial::constant(
      grid.spec(), default_variables(grid.arity()), n.inverse());
  for (std::size_t i = 0; i < grid.arity(); ++i) {
    for (const FieldValue& b : grid.set(i)) {
      if (b == point[i]) continue;
      Polynomial factor =
          Polynomial::variable(grid.spec(), chi.variables(), i) -
          Polynomial::constant(grid.spec(), chi.variables(), b);
      chi = chi * factor;
    }
  }
  return chi;
}

FieldValue lemma_sum(const std::vector<FieldValue>& values) {
  if (values.size() < 2) {
    throw Error(Errc::precondition,
                "lemma sum needs at least two elements");
  }
  const FieldSpec& spec = values.front().spec();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i].spec() == spec)) {
      throw Error(Errc::field_mismatch, "elements live in different fields");
    }
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] == values[j]) {
        throw Error(Errc::precondition,
                    "elements must be pairwise distinct");
      }
    }
  }
  FieldValue sum = FieldValue::zero(spec);
  for (const FieldValue& a : values) {
    FieldValue prod = FieldValue::one(spec);
    for (const FieldValue& b : values) {
      if (!(b == a)) prod *= b - a;
    }
    sum += prod.inverse();
  }
  return sum;
}

FieldValue coefficient_via_formula(const Polynomial& f, const Monomial& alpha,
                                   const Grid& grid,
                                   bool skip_maximality_check) {
  require_grid_matches_poly(f, grid);
  if (alpha.arity() != f.arity()) {
    throw Error(Errc::arity_mismatch, "monomial arity does not match");
  }
  for (std::size_t i = 0; i < grid.arity(); ++i) {
    if (grid.size(i) != static_cast<std::size_t>(alpha[i]) + 1) {
      throw Error(Errc::grid_mismatch,
                  "set " + std::to_string(i) + " has " +
                      std::to_string(grid.size(i)) + " elements, need exactly " +
                      std::to_string(alpha[i] + 1));
    }
  }
  if (!skip_maximality_check && !f.is_zero() &&
      !f.is_maximal_support_element(alpha)) {
    throw Error(Errc::precondition,
                "monomial is not maximal in the support; pass the explicit "
                "override to compute the sum anyway");
  }
  auto weights = interpolation_weights(grid);
  return contract_weighted(f, grid, weights);
}

WitnessReport find_witness_enumerate(const Polynomial& f, const Grid& grid) {
  require_grid_matches_poly(f, grid);
  WitnessReport report;
  if (!grid.has_points()) return report;
  if (grid.arity() == 0) {
    FieldValue value = f.eval({});
    ++report.evaluations_used;
    if (!value.is_zero()) {
      report.point = std::vector<FieldValue>{};
      report.value = std::move(value);
    }
    return report;
  }

  // Power tables: powers[i][j][e] = A_i[j]^e.
  std::vector<std::vector<std::vector<FieldValue>>> powers(grid.arity());
  for (std::size_t i = 0; i < grid.arity(); ++i) {
    std::uint32_t deg = f.degree_in(i);
    powers[i].reserve(grid.size(i));
    for (const FieldValue& a : grid.set(i)) {
      std::vector<FieldValue> column;
      column.reserve(deg + 1);
      column.push_back(FieldValue::one(grid.spec()));
      for (std::uint32_t e = 1; e <= deg; ++e) {
        column.push_back(column.back() * a);
      }
      powers[i].push_back(std::move(column));
    }
  }

  std::vector<std::size_t> index(grid.arity(), 0);
  while (true) {
    FieldValue value = FieldValue::zero(f.spec());
    for (const auto& [m, c] : f.terms()) {
      FieldValue term = c;
      for (std::size_t i = 0; i < grid.arity(); ++i) {
        if (m[i] != 0) term *= powers[i][index[i]][m[i]];
      }
      value += term;
    }
    ++report.evaluations_used;
    if (!value.is_zero()) {
      std::vector<FieldValue> point;
      point.reserve(grid.arity());
      for (std::size_t i = 0; i < grid.arity(); ++i) {
        point.push_back(grid.set(i)[index[i]]);
      }
      report.point = std::move(point);
      report.value = std::move(value);
      return report;
    }
    std::size_t axis = grid.arity();
    while (axis-- > 0) {
      if (++index[axis] < grid.size(axis)) break;
      index[axis] = 0;
      if (axis == 0) return report;  // exhausted
    }
  }
}

std::string GcnReport::summary() const {
  if (!compatible) return "incompatible arity or field";
  std::string s;
  s += in_support ? "monomial is in the support"
                  : "monomial is not in the support";
  if (in_support) {
    s += maximal ? " and maximal" : " but not maximal";
  }
  if (grid_ok) {
    s += "; grid sizes sufficient";
  } else {
    s += "; grid too small on axis";
    for (std::size_t i : deficient_axes) s += " " + std::to_string(i);
  }
  if (ok()) {
    s += classical ? "; total-degree hypothesis also holds"
                   : "; total-degree hypothesis does not hold (generalized "
                     "form required)";
  }
  return s;
}

GcnReport check_gcn_preconditions(const Polynomial& f, const Monomial& alpha,
                                  const Grid& grid) {
  GcnReport report;
  report.compatible = alpha.arity() == f.arity() &&
                      grid.arity() == f.arity() && grid.spec() == f.spec();
  if (!report.compatible) return report;
  report.in_support = !f.coefficient(alpha).is_zero();
  report.maximal = f.is_maximal_support_element(alpha);
  report.grid_ok = true;
  for (std::size_t i = 0; i < grid.arity(); ++i) {
    if (grid.size(i) < static_cast<std::size_t>(alpha[i]) + 1) {
      report.grid_ok = false;
      report.deficient_axes.push_back(i);
    }
  }
  report.classical =
      report.in_support && f.total_degree() == alpha.total_degree();
  return report;
}

WitnessReport find_witness_recursive(const Polynomial& f,
                                     const Monomial& alpha, const Grid& grid) {
  GcnReport check = check_gcn_preconditions(f, alpha, grid);
  if (!check.ok()) {
    throw Error(Errc::precondition, check.summary());
  }
  std::uint64_t evaluations = 0;
  WitnessReport report = recursive_search(f, alpha, grid, evaluations);
  report.evaluations_used = evaluations;
  return report;
}

WitnessReport substitution_witness(const Polynomial& g,
                                   const Polynomial& inner, const Grid& grid,
                                   const Monomial& alpha) {
  if (inner.arity() != 1) {
    throw Error(Errc::precondition, "inner polynomial must be univariate");
  }
  if (g.arity() == 0) {
    throw Error(Errc::precondition, "outer polynomial needs a first variable");
  }
  if (!(inner.spec() == g.spec())) {
    throw Error(Errc::field_mismatch, "inner polynomial in wrong field");
  }
  require_grid_matches_poly(g, grid);
  if (alpha.arity() != g.arity()) {
    throw Error(Errc::arity_mismatch, "monomial arity does not match");
  }
  const std::uint64_t k = inner.total_degree();
  if (k == 0) {
    throw Error(Errc::precondition, "inner polynomial must be nonconstant");
  }

  // Transform the first set through `inner`, demanding injectivity so the
  // witness can be pulled back.
  std::vector<FieldValue> image;
  image.reserve(grid.size(0));
  for (const FieldValue& a : grid.set(0)) {
    image.push_back(inner.eval({a}));
  }
  for (std::size_t i = 0; i < image.size(); ++i) {
    for (std::size_t j = i + 1; j < image.size(); ++j) {
      if (image[i] == image[j]) {
        throw Error(Errc::non_injective,
                    "inner polynomial is not injective on the first set: "
                    "elements " +
                        grid.set(0)[i].str() + " and " + grid.set(0)[j].str() +
                        " map to " + image[i].str());
      }
    }
  }

  std::vector<std::uint32_t> reduced = alpha.exponents();
  reduced[0] = static_cast<std::uint32_t>((alpha[0] + k - 1) / k);  // ceil
  Grid transformed = grid.with_set(0, image);
  WitnessReport report =
      find_witness_recursive(g, Monomial(std::move(reduced)), transformed);

  // Pull the first coordinate back through the preimage map.
  auto idx = transformed.index_in_set(0, report.point->front());
  (*report.point)[0] = grid.set(0)[*idx];
  return report;
}

}  // namespace cnkit
