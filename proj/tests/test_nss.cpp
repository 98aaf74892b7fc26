#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cnkit/nss.hpp"
#include "cnkit/parser.hpp"
#include "support/testutil.hpp"

using namespace cnkit;
using testutil::Rng;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::vector<FieldValue> ints(const FieldSpec& spec, std::vector<long> values) {
  std::vector<FieldValue> out;
  for (long v : values) out.push_back(FieldValue::integer(spec, v));
  return out;
}

Grid grid_of(const FieldSpec& spec, std::vector<std::vector<long>> sets) {
  std::vector<std::vector<FieldValue>> lifted;
  for (auto& s : sets) lifted.push_back(ints(spec, s));
  return Grid(spec, std::move(lifted));
}

}  // namespace

TEST_CASE("grid construction validates distinctness and field") {
  CHECK_NOTHROW(grid_of(Q, {{0, 1}, {2, 3, 4}}));
  CHECK_THROWS_AS(grid_of(Q, {{0, 1, 0}}), Error);
  const FieldSpec f5 = FieldSpec::prime_field(5);
  CHECK_THROWS_AS(grid_of(f5, {{1, 6}}), Error);  // 6 = 1 in F_5
  std::vector<std::vector<FieldValue>> mixed{
      {FieldValue::one(Q), FieldValue::one(f5)}};
  CHECK_THROWS_AS(Grid(Q, mixed), Error);
}

TEST_CASE("normalizer") {
  auto g1 = grid_of(Q, {{0, 1}});
  CHECK(normalizer(g1, ints(Q, {0})) == FieldValue::integer(Q, -1));
  CHECK(normalizer(g1, ints(Q, {1})) == FieldValue::integer(Q, 1));

  // Singleton sets give empty products.
  auto g2 = grid_of(Q, {{7}, {9}});
  CHECK(normalizer(g2, ints(Q, {7, 9})) == FieldValue::one(Q));

  CHECK_THROWS_AS(normalizer(g1, ints(Q, {5})), Error);

  // N agrees with evaluating prod_i prod_{b != a_i} (x_i - b) at the point.
  auto g3 = grid_of(Q, {{0, 1, 3}, {-1, 2}});
  for (long a1 : {0, 1, 3}) {
    for (long a2 : {-1, 2}) {
      std::vector<std::string> vars{"x1", "x2"};
      Polynomial prod = Polynomial::constant(Q, vars, FieldValue::one(Q));
      for (long b : {0, 1, 3}) {
        if (b == a1) continue;
        prod = prod * (Polynomial::variable(Q, vars, 0) -
                       Polynomial::constant(Q, vars, FieldValue::integer(Q, b)));
      }
      for (long b : {-1, 2}) {
        if (b == a2) continue;
        prod = prod * (Polynomial::variable(Q, vars, 1) -
                       Polynomial::constant(Q, vars, FieldValue::integer(Q, b)));
      }
      CHECK(prod.eval(ints(Q, {a1, a2})) == normalizer(g3, ints(Q, {a1, a2})));
    }
  }
}

TEST_CASE("chi indicator is the Kronecker delta on the grid") {
  for (const FieldSpec& spec : {Q, FieldSpec::prime_field(13)}) {
    auto g = grid_of(spec, {{0, 1, 2}, {3, 5}});
    std::vector<std::vector<FieldValue>> points;
    for (long a : {0, 1, 2}) {
      for (long b : {3, 5}) points.push_back(ints(spec, {a, b}));
    }
    Polynomial sum = Polynomial::zero(spec, {"x1", "x2"});
    for (const auto& p : points) {
      Polynomial chi = chi_indicator(g, p);
      for (const auto& q : points) {
        FieldValue expected =
            p == q ? FieldValue::one(spec) : FieldValue::zero(spec);
        CHECK(chi.eval(q) == expected);
      }
      sum = sum + chi;
    }
    // The indicators sum to 1 everywhere on the grid.
    for (const auto& q : points) {
      CHECK(sum.eval(q) == FieldValue::one(spec));
    }
  }
}

TEST_CASE("lemma sum examples") {
  CHECK(lemma_sum(ints(Q, {0, 1})).is_zero());
  CHECK(lemma_sum(ints(Q, {1, 2, 3})).is_zero());
  CHECK_THROWS_AS(lemma_sum(ints(Q, {0})), Error);
  // Two-element case by hand: 1/(1-0) + 1/(0-1) = 0.
  auto two = lemma_sum(ints(Q, {0, 1}));
  CHECK(two == FieldValue::zero(Q));
  CHECK_THROWS_AS(lemma_sum(ints(Q, {1, 1})), Error);
}

TEST_CASE("lemma sum vanishes on random sets") {
  Rng rng(808);
  for (const FieldSpec& spec :
       {Q, FieldSpec::prime_field(13), FieldSpec::prime_field(101)}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t size = static_cast<std::size_t>(rng.uniform(2, 12));
      CHECK(lemma_sum(testutil::distinct_values(rng, spec, size)).is_zero());
    }
  }
}

TEST_CASE("coefficient formula examples") {
  auto f = parse_polynomial("x1*x2", {"x1", "x2"}, Q);
  auto g = grid_of(Q, {{0, 1}, {0, 1}});
  Monomial alpha({1, 1});
  CHECK(coefficient_via_formula(f, alpha, g) == FieldValue::one(Q));
  CHECK(coefficient_via_formula(f, alpha, g) == f.coefficient(alpha));

  // The zero polynomial sums to zero on any conforming grid.
  auto z = Polynomial::zero(Q, {"x1", "x2"});
  CHECK(coefficient_via_formula(z, alpha, g).is_zero());

  // Size mismatch is rejected, not trimmed.
  auto big = grid_of(Q, {{0, 1, 2}, {0, 1}});
  CHECK_THROWS_AS(coefficient_via_formula(f, alpha, big), Error);
}

TEST_CASE("maximality is necessary: x + x^2 at alpha=(1) on {0,1}") {
  auto f = parse_polynomial("x + x^2", {"x"}, Q);
  Monomial alpha({1});
  auto g = grid_of(Q, {{0, 1}});
  // Strict mode refuses.
  CHECK_THROWS_AS(coefficient_via_formula(f, alpha, g), Error);
  // The raw sum evaluates to 2, but the true coefficient is 1.
  FieldValue sum = coefficient_via_formula(f, alpha, g, true);
  CHECK(sum == FieldValue::integer(Q, 2));
  CHECK(f.coefficient(alpha) == FieldValue::one(Q));
  CHECK(sum != f.coefficient(alpha));
}

TEST_CASE("coefficient formula matches direct expansion on random inputs") {
  Rng rng(90210);
  for (const FieldSpec& spec : {Q, FieldSpec::prime_field(101)}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t arity = static_cast<std::size_t>(rng.uniform(1, 4));
      auto f = testutil::random_sparse_poly(rng, spec, arity, 12, 4);
      for (const Monomial& alpha : f.maximal_support_elements()) {
        Grid g = testutil::random_grid_for(rng, spec, alpha);
        CHECK(coefficient_via_formula(f, alpha, g) == f.coefficient(alpha));
      }
    }
  }
}

TEST_CASE("witness enumeration") {
  auto f = parse_polynomial("x1*x2 - 1", {"x1", "x2"}, Q);
  auto g = grid_of(Q, {{0, 1}, {0, 1}});
  auto report = find_witness_enumerate(f, g);
  REQUIRE(report.found());
  CHECK(*report.point == ints(Q, {0, 0}));
  CHECK(*report.value == FieldValue::integer(Q, -1));
  CHECK(report.evaluations_used == 1);

  // A nonzero constant wins at the first point.
  auto c = parse_polynomial("7", {"x1", "x2"}, Q);
  auto rc = find_witness_enumerate(c, g);
  REQUIRE(rc.found());
  CHECK(*rc.point == ints(Q, {0, 0}));

  // prod_{b in A_1} (x1 - b) vanishes identically on the grid.
  auto v = parse_polynomial("x1*(x1-1)", {"x1", "x2"}, Q);
  auto rv = find_witness_enumerate(v, g);
  CHECK_FALSE(rv.found());
  CHECK(rv.evaluations_used == 4);
}

TEST_CASE("gcn precondition diagnostics") {
  auto f = parse_polynomial("x + x^2", {"x"}, Q);
  auto g3 = grid_of(Q, {{0, 1, 2}});

  auto ok = check_gcn_preconditions(f, Monomial({2}), g3);
  CHECK(ok.ok());
  CHECK(ok.classical);  // deg(f) = 2 = total degree of alpha

  auto notmax = check_gcn_preconditions(f, Monomial({1}), g3);
  CHECK(notmax.in_support);
  CHECK_FALSE(notmax.maximal);
  CHECK_FALSE(notmax.ok());

  // Maximal monomial of submaximal total degree: the generalized
  // hypothesis holds where the classical one fails.
  auto h = parse_polynomial("x1*x2 + x1^3", {"x1", "x2"}, Q);
  auto g22 = grid_of(Q, {{0, 1}, {0, 1}});
  auto gap = check_gcn_preconditions(h, Monomial({1, 1}), g22);
  CHECK(gap.ok());
  CHECK_FALSE(gap.classical);

  auto small = check_gcn_preconditions(f, Monomial({2}), grid_of(Q, {{0, 1}}));
  CHECK_FALSE(small.grid_ok);
  CHECK(small.deficient_axes == std::vector<std::size_t>{0});
}

TEST_CASE("recursive witness search") {
  // Base case: constant polynomial.
  auto c = parse_polynomial("5", {"x1", "x2"}, Q);
  auto g = grid_of(Q, {{0, 1}, {0, 1}});
  auto rc = find_witness_recursive(c, Monomial({0, 0}), g);
  REQUIRE(rc.found());
  CHECK(*rc.point == ints(Q, {0, 0}));
  CHECK(*rc.value == FieldValue::integer(Q, 5));

  auto f = parse_polynomial("x1*x2 - 1", {"x1", "x2"}, Q);
  auto rf = find_witness_recursive(f, Monomial({1, 1}), g);
  REQUIRE(rf.found());
  CHECK_FALSE(f.eval(*rf.point).is_zero());
  CHECK(*rf.value == f.eval(*rf.point));
  // The brute-force oracle agrees a witness exists.
  CHECK(find_witness_enumerate(f, g).found());

  // Precondition guard: alpha not maximal.
  auto p = parse_polynomial("x + x^2", {"x"}, Q);
  CHECK_THROWS_AS(find_witness_recursive(p, Monomial({1}), grid_of(Q, {{0, 1, 2}})),
                  Error);
  try {
    find_witness_recursive(p, Monomial({1}), grid_of(Q, {{0, 1, 2}}));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::precondition);
  }
}

TEST_CASE("recursive search is sound on random instances") {
  Rng rng(60601);
  int checked = 0;
  for (const FieldSpec& spec : {Q, FieldSpec::prime_field(101)}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t arity = static_cast<std::size_t>(rng.uniform(1, 3));
      auto f = testutil::random_sparse_poly(rng, spec, arity, 8, 3);
      auto maximal = f.maximal_support_elements();
      if (maximal.empty()) continue;
      const Monomial& alpha =
          maximal[static_cast<std::size_t>(rng.uniform(0, maximal.size() - 1))];
      Grid g = testutil::random_grid_for(rng, spec, alpha, 2);
      REQUIRE(check_gcn_preconditions(f, alpha, g).ok());
      auto report = find_witness_recursive(f, alpha, g);
      REQUIRE(report.found());
      CHECK_FALSE(f.eval(*report.point).is_zero());
      CHECK(*report.value == f.eval(*report.point));
      CHECK(g.contains_point(*report.point));
      CHECK(find_witness_enumerate(f, g).found());
      ++checked;
    }
  }
  CHECK(checked > 80);
}

TEST_CASE("nonzero formula value implies a witness on the grid") {
  Rng rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t arity = static_cast<std::size_t>(rng.uniform(1, 3));
    auto f = testutil::random_sparse_poly(rng, Q, arity, 8, 3);
    auto maximal = f.maximal_support_elements();
    if (maximal.empty()) continue;
    const Monomial& alpha = maximal.front();
    Grid g = testutil::random_grid_for(rng, Q, alpha);
    if (!coefficient_via_formula(f, alpha, g).is_zero()) {
      CHECK(find_witness_enumerate(f, g).found());
    }
  }
}

TEST_CASE("witness reports are deterministic") {
  auto f = parse_polynomial("x1^2*x2 - x1*x2 + 1", {"x1", "x2"}, Q);
  auto g = grid_of(Q, {{0, 1, 2}, {0, 1}});
  auto a = find_witness_recursive(f, Monomial({2, 1}), g);
  auto b = find_witness_recursive(f, Monomial({2, 1}), g);
  REQUIRE(a.found());
  CHECK(*a.point == *b.point);
  CHECK(*a.value == *b.value);
  CHECK(a.evaluations_used == b.evaluations_used);
}

TEST_CASE("substitution witness") {
  // g(y, x2) = y*x2 with inner h(x) = x^2, so f = x1^2 * x2.
  auto g = parse_polynomial("y*x2", {"y", "x2"}, Q);
  auto inner = parse_polynomial("x^2", {"x"}, Q);
  auto grid = grid_of(Q, {{0, 1, 2}, {0, 1}});
  auto report = substitution_witness(g, inner, grid, Monomial({2, 1}));
  REQUIRE(report.found());
  const auto& p = *report.point;
  CHECK((p[0] == FieldValue::integer(Q, 1) || p[0] == FieldValue::integer(Q, 2)));
  // Check against f = x1^2 * x2 on the original grid.
  auto f = parse_polynomial("x1^2*x2", {"x1", "x2"}, Q);
  CHECK_FALSE(f.eval(p).is_zero());
  CHECK(*report.value == f.eval(p));
  CHECK(find_witness_enumerate(f, grid).found());

  // Injectivity failure: x^2 on {-1, 1}.
  auto bad = grid_of(Q, {{-1, 1}, {0, 1}});
  CHECK_THROWS_AS(substitution_witness(g, inner, bad, Monomial({2, 1})), Error);
  try {
    substitution_witness(g, inner, bad, Monomial({2, 1}));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::non_injective);
  }

  // Identity inner polynomial degenerates to the plain recursive search.
  auto id = parse_polynomial("x", {"x"}, Q);
  auto f2 = parse_polynomial("y*x2 - 1", {"y", "x2"}, Q);
  auto grid2 = grid_of(Q, {{0, 1}, {0, 1}});
  auto via_subst = substitution_witness(f2, id, grid2, Monomial({1, 1}));
  auto direct = find_witness_recursive(f2, Monomial({1, 1}), grid2);
  REQUIRE(via_subst.found());
  CHECK(*via_subst.point == *direct.point);
  CHECK(*via_subst.value == *direct.value);
}

TEST_CASE("substitution beats the classical size requirement") {
  // f = x1^4 * x2 needs |A_1| >= 5 for the direct argument; through
  // inner(x) = x^2 a first set of 3 suffices.
  auto g = parse_polynomial("y^2*x2", {"y", "x2"}, Q);
  auto inner = parse_polynomial("x^2", {"x"}, Q);
  auto grid = grid_of(Q, {{0, 1, 2}, {0, 1}});
  auto report = substitution_witness(g, inner, grid, Monomial({4, 1}));
  REQUIRE(report.found());
  auto f = parse_polynomial("x1^4*x2", {"x1", "x2"}, Q);
  CHECK_FALSE(f.eval(*report.point).is_zero());
  CHECK(*report.value == f.eval(*report.point));
  // Enumeration over the 6-point grid agrees.
  auto oracle = find_witness_enumerate(f, grid);
  REQUIRE(oracle.found());
}
