#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cnkit/graph.hpp"
#include "cnkit/grid.hpp"
#include "cnkit/nss.hpp"
#include "cnkit/polynomial.hpp"

namespace cnkit {

/// A labeling problem: a graph, a univariate rational polynomial f_v per
/// vertex (nonconstant, degree at most l, positive leading coefficient),
/// an outdegree bound k, and per-vertex label lists of at least k*l + 1
/// distinct rationals (default {1, ..., k*l + 1}).
///
/// A labeling c is valid when for every edge uw
///   c(u) - sum_{v in N(u)} f_v(c(v))  !=  c(w) - sum_{v in N(w)} f_v(c(v)).
class LabelingInstance {
public:
  static LabelingInstance make(
      Graph graph, std::vector<Polynomial> vertex_polys, int k, int l,
      std::optional<std::vector<std::vector<FieldValue>>> label_lists =
          std::nullopt);

  const Graph& graph() const { return graph_; }
  const std::vector<Polynomial>& vertex_polys() const { return vertex_polys_; }
  int k() const { return k_; }
  int l() const { return l_; }
  const std::vector<std::vector<FieldValue>>& label_lists() const {
    return label_lists_;
  }

private:
  LabelingInstance(Graph graph, std::vector<Polynomial> vertex_polys, int k,
                   int l, std::vector<std::vector<FieldValue>> label_lists)
      : graph_(std::move(graph)),
        vertex_polys_(std::move(vertex_polys)),
        k_(k),
        l_(l),
        label_lists_(std::move(label_lists)) {}

  Graph graph_;
  std::vector<Polynomial> vertex_polys_;
  int k_;
  int l_;
  std::vector<std::vector<FieldValue>> label_lists_;
};

/// One factor per edge uw (stored with u < w), in edge order:
///   sum_{v in N(u)} f_v(x_v) + x_w - sum_{v in N(w)} f_v(x_v) - x_u
/// over Q in variables x0..x{n-1}. Writing u first only fixes the sign
/// of each factor; the validity condition is symmetric.
std::vector<Polynomial> edge_factors(const LabelingInstance& inst);

/// The expanded product of edge_factors(inst); the empty product is 1.
/// A labeling is valid exactly when this polynomial is nonzero at the
/// label vector. Requires the bipartite check to have passed.
Polynomial build_edge_polynomial(const LabelingInstance& inst);

/// The product over directed edges u->w of the leading monomial of
/// f_u(x_u): the target monomial whose coefficient certifies a labeling.
/// Its degree in x_v is outdeg(v) * deg(f_v) <= k*l.
Monomial select_target_monomial(const LabelingInstance& inst,
                                const Orientation& orientation);

struct CoefficientCertificate {
  Monomial target;
  FieldValue coefficient;     // the certified nonzero value
  FieldValue direct_value;    // from the expanded polynomial
  FieldValue formula_value;   // from the evaluation formula
  std::vector<std::size_t> grid_sizes;
};

/// Computes the coefficient of M in h two independent ways (direct
/// expansion lookup, and the evaluation formula over a conforming grid)
/// and verifies M is maximal in the support. Zero coefficient,
/// non-maximality, or disagreement all indicate violated instance
/// hypotheses and raise an instance-invalid error.
CoefficientCertificate certify_target_coefficient(const Polynomial& h,
                                                  const Monomial& target);

struct LabelingResult {
  std::vector<FieldValue> labels;  // by vertex
  CoefficientCertificate certificate;
  std::uint64_t evaluations_used = 0;
};

/// End-to-end pipeline: bipartite check, bounded-outdegree orientation,
/// edge polynomial, target monomial, certificate, then the recursive
/// witness search over the label-list grid. When the instance hypotheses
/// hold this cannot fail.
LabelingResult find_labeling(const LabelingInstance& inst);

struct VerifyResult {
  bool ok = false;
  std::optional<std::pair<int, int>> violating_edge;
};

/// Replays the defining inequality on every edge with exact arithmetic.
VerifyResult verify_labeling(const LabelingInstance& inst,
                             const std::vector<FieldValue>& labels);

}  // namespace cnkit
