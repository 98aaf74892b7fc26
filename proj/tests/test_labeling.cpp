#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cnkit/labeling.hpp"
#include "cnkit/parser.hpp"
#include "support/testutil.hpp"

using namespace cnkit;
using testutil::Rng;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Polynomial identity_poly() { return parse_polynomial("x", {"x"}, Q); }

LabelingInstance identity_instance(Graph g, int k, int l = 1) {
  std::vector<Polynomial> polys(g.vertex_count(), identity_poly());
  return LabelingInstance::make(std::move(g), std::move(polys), k, l);
}

FieldValue qi(long v) { return FieldValue::integer(Q, v); }

}  // namespace

TEST_CASE("instance validation") {
  Graph edge(2, {{0, 1}});
  CHECK_NOTHROW(identity_instance(edge, 1));

  // Constant vertex polynomials are rejected.
  std::vector<Polynomial> constant(2, parse_polynomial("2", {"x"}, Q));
  CHECK_THROWS_AS(LabelingInstance::make(edge, constant, 1, 1), Error);

  // Degree above l.
  std::vector<Polynomial> quad(2, parse_polynomial("x^2", {"x"}, Q));
  CHECK_THROWS_AS(LabelingInstance::make(edge, quad, 1, 1), Error);
  CHECK_NOTHROW(LabelingInstance::make(edge, quad, 1, 2));

  // Negative leading coefficient.
  std::vector<Polynomial> neg(2, parse_polynomial("-x", {"x"}, Q));
  CHECK_THROWS_AS(LabelingInstance::make(edge, neg, 1, 1), Error);

  // Label lists must be large enough and duplicate-free.
  CHECK_THROWS_AS(LabelingInstance::make(
                      edge, {identity_poly(), identity_poly()}, 1, 1,
                      std::vector<std::vector<FieldValue>>{{qi(1)}, {qi(1), qi(2)}}),
                  Error);
  CHECK_THROWS_AS(LabelingInstance::make(
                      edge, {identity_poly(), identity_poly()}, 1, 1,
                      std::vector<std::vector<FieldValue>>{{qi(1), qi(1)},
                                                           {qi(1), qi(2)}}),
                  Error);

  // Default lists are {1, ..., k*l + 1}.
  auto inst = identity_instance(testutil::cycle_graph(4), 2, 3);
  CHECK(inst.label_lists()[0].size() == 7);
  CHECK(inst.label_lists()[0].front() == qi(1));
  CHECK(inst.label_lists()[0].back() == qi(7));
}

TEST_CASE("edge polynomial for a single edge") {
  auto inst = identity_instance(Graph(2, {{0, 1}}), 1);
  auto factors = edge_factors(inst);
  REQUIRE(factors.size() == 1);
  // f_w(x_w) + x_w - f_u(x_u) - x_u = 2*x1 - 2*x0.
  CHECK(factors[0] == parse_polynomial("2*x1 - 2*x0", {"x0", "x1"}, Q));
  CHECK(build_edge_polynomial(inst) == factors[0]);
}

TEST_CASE("edge polynomial for a path") {
  auto inst = identity_instance(testutil::path_graph(3), 1);
  auto factors = edge_factors(inst);
  REQUIRE(factors.size() == 2);
  // Edge {0,1}: N(0) = {1}, N(1) = {0,2}.
  CHECK(factors[0] ==
        parse_polynomial("x1 + x1 - x0 - x2 - x0", {"x0", "x1", "x2"}, Q));
  // Edge {1,2}: N(1) = {0,2}, N(2) = {1}.
  CHECK(factors[1] ==
        parse_polynomial("x0 + x2 + x2 - x1 - x1", {"x0", "x1", "x2"}, Q));
  CHECK(build_edge_polynomial(inst) == factors[0] * factors[1]);
}

TEST_CASE("empty edge set gives the unit polynomial") {
  auto inst = identity_instance(Graph(2, {}), 0);
  auto h = build_edge_polynomial(inst);
  CHECK(h == Polynomial::constant(Q, {"x0", "x1"}, FieldValue::one(Q)));
}

TEST_CASE("target monomial selection") {
  auto inst = identity_instance(Graph(2, {{0, 1}}), 1);
  Orientation toward_w{{{0, 1}}, {1, 0}};
  CHECK(select_target_monomial(inst, toward_w) == Monomial({1, 0}));

  auto c4 = identity_instance(testutil::cycle_graph(4), 1);
  Orientation cycle = orient_bounded_outdegree(c4.graph(), 1);
  CHECK(select_target_monomial(c4, cycle) == Monomial({1, 1, 1, 1}));

  // deg_{x_v}(M) = outdeg(v) * deg(f_v) <= k*l on random instances.
  Rng rng(5150);
  for (int trial = 0; trial < 40; ++trial) {
    int n = static_cast<int>(rng.uniform(2, 6));
    std::vector<std::pair<int, int>> candidates;
    for (int u = 0; u < n; ++u) {
      for (int w = u + 1; w < n; ++w) candidates.emplace_back(u, w);
    }
    rng.shuffle(candidates);
    std::size_t m = static_cast<std::size_t>(rng.uniform(0, 6));
    m = std::min(m, candidates.size());
    Graph g(static_cast<std::size_t>(n),
            {candidates.begin(), candidates.begin() + static_cast<long>(m)});
    int k = testutil::minimal_feasible_outdegree(g);
    int l = static_cast<int>(rng.uniform(1, 2));
    std::vector<Polynomial> polys;
    for (int v = 0; v < n; ++v) {
      polys.push_back(l == 1 ? identity_poly()
                             : parse_polynomial("x^2 + x", {"x"}, Q));
    }
    auto inst = LabelingInstance::make(g, polys, k, l);
    auto orientation = orient_bounded_outdegree(g, k);
    Monomial target = select_target_monomial(inst, orientation);
    for (int v = 0; v < n; ++v) {
      CHECK(target[static_cast<std::size_t>(v)] <=
            static_cast<std::uint32_t>(k * l));
      CHECK(target[static_cast<std::size_t>(v)] ==
            static_cast<std::uint32_t>(orientation.outdegree[v]) *
                inst.vertex_polys()[v].total_degree());
    }
  }
}

TEST_CASE("certificate for the single edge") {
  auto inst = identity_instance(Graph(2, {{0, 1}}), 1);
  auto h = build_edge_polynomial(inst);
  auto cert = certify_target_coefficient(h, Monomial({1, 0}));
  CHECK(cert.coefficient == qi(-2));
  CHECK(cert.direct_value == cert.formula_value);
}

TEST_CASE("certificate detects violated hypotheses") {
  // With f_u = -x (negative leading coefficient) the x_u terms of the
  // factor cancel: h = f_w(x_w) + x_w - f_u(x_u) - x_u = 2*x1.
  auto h = parse_polynomial("2*x1", {"x0", "x1"}, Q);
  CHECK_THROWS_AS(certify_target_coefficient(h, Monomial({1, 0})), Error);
  try {
    certify_target_coefficient(h, Monomial({1, 0}));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::instance_invalid);
  }
  // Non-maximal target is also refused.
  auto g = parse_polynomial("x0 + x0^2", {"x0", "x1"}, Q);
  CHECK_THROWS_AS(certify_target_coefficient(g, Monomial({1, 0})), Error);
}

TEST_CASE("find_labeling on the single edge") {
  auto inst = identity_instance(Graph(2, {{0, 1}}), 1);
  auto result = find_labeling(inst);
  REQUIRE(result.labels.size() == 2);
  CHECK(result.labels[0] == qi(1));
  CHECK(result.labels[1] == qi(2));
  CHECK(verify_labeling(inst, result.labels).ok);
  CHECK(result.certificate.coefficient == qi(-2));
}

TEST_CASE("find_labeling on the four-cycle") {
  auto inst = identity_instance(testutil::cycle_graph(4), 1);
  auto result = find_labeling(inst);
  CHECK(verify_labeling(inst, result.labels).ok);
  for (const auto& label : result.labels) {
    CHECK((label == qi(1) || label == qi(2)));
  }
  // Independent brute force over all 16 assignments agrees one exists.
  CHECK(testutil::brute_force_labeling(inst).has_value());
}

TEST_CASE("triangle input propagates the bipartite error") {
  auto inst = identity_instance(testutil::cycle_graph(3), 2);
  CHECK_THROWS_AS(find_labeling(inst), NotBipartiteError);
}

TEST_CASE("verify_labeling examples") {
  auto inst = identity_instance(Graph(2, {{0, 1}}), 1);
  CHECK(verify_labeling(inst, {qi(1), qi(2)}).ok);
  auto bad = verify_labeling(inst, {qi(1), qi(1)});
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.violating_edge.has_value());
  CHECK(*bad.violating_edge == std::make_pair(0, 1));
}

TEST_CASE("labels can come from arbitrary lists") {
  std::vector<std::vector<FieldValue>> lists(4);
  for (int v = 0; v < 4; ++v) {
    lists[v] = {FieldValue::ratio(Q, 1 + v, 2), qi(-3 - v),
                FieldValue::ratio(Q, 7, 3 + v)};
  }
  auto base = identity_instance(testutil::cycle_graph(4), 1);
  auto inst = LabelingInstance::make(base.graph(), base.vertex_polys(), 1, 1,
                                     lists);
  auto result = find_labeling(inst);
  CHECK(verify_labeling(inst, result.labels).ok);
  for (int v = 0; v < 4; ++v) {
    bool from_list = false;
    for (const auto& candidate : lists[v]) {
      if (candidate == result.labels[static_cast<std::size_t>(v)]) {
        from_list = true;
      }
    }
    CHECK(from_list);
  }
}

TEST_CASE("higher-degree vertex polynomials") {
  // f_v = x^2 + x, l = 2, on the four-cycle with k = 1: labels from
  // {1, 2, 3}.
  Graph c4 = testutil::cycle_graph(4);
  std::vector<Polynomial> polys(4, parse_polynomial("x^2 + x", {"x"}, Q));
  auto inst = LabelingInstance::make(c4, polys, 1, 2);
  auto result = find_labeling(inst);
  CHECK(verify_labeling(inst, result.labels).ok);
  CHECK(testutil::brute_force_labeling(inst).has_value());
}

TEST_CASE("sign consistency of target selections on small instances") {
  Rng rng(2718);
  std::vector<Graph> graphs{
      Graph(2, {{0, 1}}),
      testutil::path_graph(3),
      testutil::path_graph(4),
      testutil::star_graph(3),
      testutil::cycle_graph(4),
      Graph(4, {{0, 1}, {2, 3}}),
  };
  for (const Graph& g : graphs) {
    int k = testutil::minimal_feasible_outdegree(g);
    auto inst = identity_instance(g, k);
    auto orientation = orient_bounded_outdegree(g, k);
    auto factors = edge_factors(inst);
    auto h = build_edge_polynomial(inst);
    Monomial target = select_target_monomial(inst, orientation);
    auto contributions = testutil::selection_contributions(factors, target);
    REQUIRE_FALSE(contributions.empty());
    int sign = contributions.front().sign();
    FieldValue sum = FieldValue::zero(Q);
    for (const auto& c : contributions) {
      CHECK(c.sign() == sign);
      sum += c;
    }
    auto cert = certify_target_coefficient(h, target);
    CHECK(sum == cert.coefficient);
  }
}

TEST_CASE("random bipartite instances round-trip end to end") {
  Rng rng(1618);
  int solved = 0;
  for (int trial = 0; trial < 25; ++trial) {
    int left = static_cast<int>(rng.uniform(1, 4));
    int right = static_cast<int>(rng.uniform(1, 4));
    std::vector<std::pair<int, int>> candidates;
    for (int u = 0; u < left; ++u) {
      for (int w = 0; w < right; ++w) candidates.emplace_back(u, left + w);
    }
    rng.shuffle(candidates);
    std::size_t m = std::min<std::size_t>(
        candidates.size(), static_cast<std::size_t>(rng.uniform(1, 10)));
    Graph g(static_cast<std::size_t>(left + right),
            {candidates.begin(), candidates.begin() + static_cast<long>(m)});
    int k = testutil::minimal_feasible_outdegree(g);
    auto inst = identity_instance(g, k);
    auto result = find_labeling(inst);
    CHECK(verify_labeling(inst, result.labels).ok);
    auto brute = testutil::brute_force_labeling(inst);
    REQUIRE(brute.has_value());
    for (const auto& label : result.labels) {
      bool in_range = false;
      for (long c = 1; c <= k + 1; ++c) {
        if (label == qi(c)) in_range = true;
      }
      CHECK(in_range);
    }
    ++solved;
  }
  CHECK(solved == 25);
}
