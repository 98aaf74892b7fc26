#include "cnkit/labeling.hpp"

#include <string>

namespace cnkit {
namespace {

std::vector<std::string> vertex_variables(std::size_t n) {
  std::vector<std::string> vars;
  vars.reserve(n);
  for (std::size_t v = 0; v < n; ++v) vars.push_back("x" + std::to_string(v));
  return vars;
}

// f_v(x_v) as an n-variate polynomial.
Polynomial lift_univariate(const Polynomial& f,
                           const std::vector<std::string>& vars,
                           std::size_t vertex) {
  std::vector<std::pair<Monomial, FieldValue>> terms;
  for (const auto& [m, c] : f.terms()) {
    std::vector<std::uint32_t> e(vars.size(), 0);
    e[vertex] = m[0];
    terms.emplace_back(Monomial(std::move(e)), c);
  }
  return Polynomial::from_terms(f.spec(), vars, terms);
}

FieldValue eval_univariate(const Polynomial& f, const FieldValue& x) {
  return f.eval({x});
}

}  // namespace

LabelingInstance LabelingInstance::make(
    Graph graph, std::vector<Polynomial> vertex_polys, int k, int l,
    std::optional<std::vector<std::vector<FieldValue>>> label_lists) {
  const std::size_t n = graph.vertex_count();
  if (vertex_polys.size() != n) {
    throw Error(Errc::precondition,
                "need exactly one vertex polynomial per vertex");
  }
  if (k < 0 || l < 1) {
    throw Error(Errc::precondition, "need k >= 0 and l >= 1");
  }
  const FieldSpec q = FieldSpec::rationals();
  for (std::size_t v = 0; v < n; ++v) {
    const Polynomial& f = vertex_polys[v];
    if (f.arity() != 1 || !(f.spec() == q)) {
      throw Error(Errc::precondition,
                  "vertex polynomial " + std::to_string(v) +
                      " must be univariate over the rationals");
    }
    if (f.total_degree() == 0) {
      throw Error(Errc::instance_invalid,
                  "vertex polynomial " + std::to_string(v) +
                      " must be nonconstant");
    }
    if (f.total_degree() > static_cast<std::uint64_t>(l)) {
      throw Error(Errc::instance_invalid,
                  "vertex polynomial " + std::to_string(v) +
                      " has degree above the bound l");
    }
    if (f.terms().rbegin()->second.sign() <= 0) {
      throw Error(Errc::instance_invalid,
                  "vertex polynomial " + std::to_string(v) +
                      " must have a positive leading coefficient");
    }
  }
  const std::size_t list_size = static_cast<std::size_t>(k) * l + 1;
  std::vector<std::vector<FieldValue>> lists;
  if (label_lists) {
    lists = std::move(*label_lists);
    if (lists.size() != n) {
      throw Error(Errc::precondition, "need one label list per vertex");
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (lists[v].size() < list_size) {
        throw Error(Errc::precondition,
                    "label list for vertex " + std::to_string(v) +
                        " needs at least " + std::to_string(list_size) +
                        " elements");
      }
      for (std::size_t i = 0; i < lists[v].size(); ++i) {
        if (!(lists[v][i].spec() == q)) {
          throw Error(Errc::precondition, "labels must be rationals");
        }
        for (std::size_t j = i + 1; j < lists[v].size(); ++j) {
          if (lists[v][i] == lists[v][j]) {
            throw Error(Errc::precondition,
                        "label list for vertex " + std::to_string(v) +
                            " has duplicates");
          }
        }
      }
    }
  } else {
    std::vector<FieldValue> defaults;
    defaults.reserve(list_size);
    for (std::size_t i = 1; i <= list_size; ++i) {
      defaults.push_back(FieldValue::integer(q, static_cast<long>(i)));
    }
    lists.assign(n, defaults);
  }
  return LabelingInstance(std::move(graph), std::move(vertex_polys), k, l,
                          std::move(lists));
}

std::vector<Polynomial> edge_factors(const LabelingInstance& inst) {
  const Graph& g = inst.graph();
  const std::size_t n = g.vertex_count();
  const FieldSpec q = FieldSpec::rationals();
  const auto vars = vertex_variables(n);

  // Lift each f_v once; neighborhood sums reuse the lifted copies.
  std::vector<Polynomial> lifted;
  lifted.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    lifted.push_back(lift_univariate(inst.vertex_polys()[v], vars, v));
  }

  std::vector<Polynomial> factors;
  factors.reserve(g.edge_count());
  for (const auto& [u, w] : g.edges()) {
    Polynomial factor = Polynomial::zero(q, vars);
    for (int v : g.neighbors(u)) factor = factor + lifted[v];
    factor = factor + Polynomial::variable(q, vars, static_cast<std::size_t>(w));
    for (int v : g.neighbors(w)) factor = factor - lifted[v];
    factor = factor - Polynomial::variable(q, vars, static_cast<std::size_t>(u));
    factors.push_back(std::move(factor));
  }
  return factors;
}

Polynomial build_edge_polynomial(const LabelingInstance& inst) {
  const FieldSpec q = FieldSpec::rationals();
  Polynomial h = Polynomial::constant(q, vertex_variables(inst.graph().vertex_count()),
                                      FieldValue::one(q));
  for (const Polynomial& factor : edge_factors(inst)) h = h * factor;
  return h;
}

Monomial select_target_monomial(const LabelingInstance& inst,
                                const Orientation& orientation) {
  if (orientation.max_outdegree() > inst.k()) {
    throw Error(Errc::precondition,
                "orientation exceeds the instance outdegree bound");
  }
  std::vector<std::uint32_t> exponents(inst.graph().vertex_count(), 0);
  for (const auto& [tail, head] : orientation.directed) {
    exponents[tail] += static_cast<std::uint32_t>(
        inst.vertex_polys()[tail].total_degree());
  }
  return Monomial(std::move(exponents));
}

CoefficientCertificate certify_target_coefficient(const Polynomial& h,
                                                  const Monomial& target) {
  if (target.arity() != h.arity()) {
    throw Error(Errc::arity_mismatch, "target monomial arity mismatch");
  }
  FieldValue direct = h.coefficient(target);
  if (direct.is_zero()) {
    throw Error(Errc::instance_invalid,
                "target monomial has zero coefficient; the instance "
                "hypotheses do not hold");
  }
  if (!h.is_maximal_support_element(target)) {
    throw Error(Errc::instance_invalid,
                "target monomial is not maximal in the support; the "
                "instance hypotheses do not hold");
  }

  const FieldSpec q = h.spec();
  std::vector<std::vector<FieldValue>> sets(h.arity());
  for (std::size_t v = 0; v < h.arity(); ++v) {
    for (std::uint32_t i = 0; i <= target[v]; ++i) {
      sets[v].push_back(FieldValue::integer(q, static_cast<long>(i)));
    }
  }
  Grid grid(q, std::move(sets));
  FieldValue formula = coefficient_via_formula(h, target, grid);
  if (!(formula == direct)) {
    throw Error(Errc::instance_invalid,
                "expansion and evaluation formula disagree on the target "
                "coefficient");
  }

  CoefficientCertificate cert{target, direct, direct, formula, {}};
  for (std::size_t v = 0; v < h.arity(); ++v) {
    cert.grid_sizes.push_back(grid.size(v));
  }
  return cert;
}

LabelingResult find_labeling(const LabelingInstance& inst) {
  check_bipartite(inst.graph());
  Orientation orientation = orient_bounded_outdegree(inst.graph(), inst.k());
  Polynomial h = build_edge_polynomial(inst);
  Monomial target = select_target_monomial(inst, orientation);
  CoefficientCertificate cert = certify_target_coefficient(h, target);

  Grid labels(FieldSpec::rationals(), inst.label_lists());
  WitnessReport witness = find_witness_recursive(h, target, labels);

  LabelingResult result{std::move(*witness.point), std::move(cert),
                        witness.evaluations_used};
  if (!verify_labeling(inst, result.labels).ok) {
    throw Error(Errc::internal,
                "witness point fails the edge inequalities; this contradicts "
                "the certificate");
  }
  return result;
}

VerifyResult verify_labeling(const LabelingInstance& inst,
                             const std::vector<FieldValue>& labels) {
  const Graph& g = inst.graph();
  if (labels.size() != g.vertex_count()) {
    throw Error(Errc::arity_mismatch, "need one label per vertex");
  }
  // c(v) - sum over neighbors, per vertex, computed once.
  std::vector<FieldValue> margin;
  margin.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    FieldValue sum = FieldValue::zero(FieldSpec::rationals());
    for (int u : g.neighbors(static_cast<int>(v))) {
      sum += eval_univariate(inst.vertex_polys()[u], labels[u]);
    }
    margin.push_back(labels[v] - sum);
  }
  for (const auto& [u, w] : g.edges()) {
    if (margin[u] == margin[w]) {
      return VerifyResult{false, std::make_pair(u, w)};
    }
  }
  return VerifyResult{true, std::nullopt};
}

}  // namespace cnkit
