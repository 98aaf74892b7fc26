#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cnkit/grid.hpp"
#include "cnkit/polynomial.hpp"

namespace cnkit {

/// The normalizing factor
///   N(a_1,...,a_n) = prod_i prod_{b in A_i \ {a_i}} (a_i - b),
/// nonzero because grid elements are distinct. The point must lie on the
/// grid.
FieldValue normalizer(const Grid& grid, const std::vector<FieldValue>& point);

/// The grid indicator polynomial
///   chi_a = N(a)^{-1} * prod_i prod_{b in A_i \ {a_i}} (x_i - b),
/// which is 1 at `point` and 0 at every other grid point. Variables are
/// named x1..xn.
Polynomial chi_indicator(const Grid& grid,
                         const std::vector<FieldValue>& point);

/// The sum
///   sum_{a in A} prod_{b in A \ {a}} (b - a)^{-1}
/// over a sequence of at least two distinct field elements. The identity
/// says this is always zero; the computed value is returned so callers
/// can assert it.
FieldValue lemma_sum(const std::vector<FieldValue>& values);

/// Evaluates the coefficient of the monomial alpha in f from the values
/// of f on a grid with |A_i| = alpha_i + 1:
///
///   f_alpha = sum_{a in A_1 x ... x A_n} f(a) / N(a).
///
/// The equality needs alpha to be maximal in the support of f; by
/// default that is checked (the zero polynomial passes vacuously).
/// Setting skip_maximality_check computes the sum regardless, which is
/// how one demonstrates the formula failing on non-maximal monomials.
/// Grids with any other sizes are rejected rather than trimmed.
FieldValue coefficient_via_formula(const Polynomial& f, const Monomial& alpha,
                                   const Grid& grid,
                                   bool skip_maximality_check = false);

struct WitnessReport {
  std::optional<std::vector<FieldValue>> point;
  std::optional<FieldValue> value;
  std::uint64_t evaluations_used = 0;

  bool found() const { return point.has_value(); }
};

/// Brute-force scan of the whole grid in lexicographic order; the first
/// point where f is nonzero wins. This is the reference oracle for the
/// witness-existence claims.
WitnessReport find_witness_enumerate(const Polynomial& f, const Grid& grid);

/// Diagnostic breakdown of the witness-search hypotheses for (f, alpha,
/// grid): membership and maximality of alpha in the support, grid sizes
/// |A_i| >= alpha_i + 1, and whether the stronger total-degree hypothesis
/// deg(f) = sum alpha_i also holds (in which case the classical statement
/// already applies).
struct GcnReport {
  bool compatible = false;   // matching arity and field
  bool in_support = false;
  bool maximal = false;
  bool grid_ok = false;
  std::vector<std::size_t> deficient_axes;
  bool classical = false;

  bool ok() const { return compatible && in_support && maximal && grid_ok; }
  std::string summary() const;
};

GcnReport check_gcn_preconditions(const Polynomial& f, const Monomial& alpha,
                                  const Grid& grid);

/// Witness search by the inductive argument: when alpha is maximal in the
/// support of f, f has nonzero coefficient at alpha, and |A_i| >=
/// alpha_i + 1, a nonvanishing grid point is guaranteed. The recursion
/// fixes the first element a of A_i for the smallest i with alpha_i > 0,
/// splits f = g * (x_i - a) + h, scans h on the codimension-one subgrid,
/// and on failure recurses on g over A_i \ {a} with alpha_i - 1.
///
/// Preconditions are checked up front and reported before any search.
/// Exhausting the recursion would contradict the underlying theorem, so
/// it aborts with an internal error.
WitnessReport find_witness_recursive(const Polynomial& f,
                                     const Monomial& alpha, const Grid& grid);

/// Witness search for the composite f(x_1, ..., x_n) =
/// g(inner(x_1), x_2, ..., x_n) where inner is univariate of degree k.
/// Searches g over the transformed grid whose first set is inner(A_1)
/// (inner must be injective on A_1) with first exponent ceil(alpha_1/k),
/// then pulls the first coordinate back through the preimage map. The
/// first set may be roughly k times smaller than the direct search
/// would need.
WitnessReport substitution_witness(const Polynomial& g,
                                   const Polynomial& inner, const Grid& grid,
                                   const Monomial& alpha);

}  // namespace cnkit
