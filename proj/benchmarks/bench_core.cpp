#include <benchmark/benchmark.h>

#include "cnkit/labeling.hpp"
#include "cnkit/nss.hpp"
#include "cnkit/parser.hpp"

namespace {

using namespace cnkit;

const FieldSpec Q = FieldSpec::rationals();

Grid integer_grid(const FieldSpec& spec, std::vector<std::size_t> sizes) {
  std::vector<std::vector<FieldValue>> sets;
  for (std::size_t size : sizes) {
    std::vector<FieldValue> set;
    for (std::size_t i = 0; i < size; ++i) {
      set.push_back(FieldValue::integer(spec, static_cast<long>(i)));
    }
    sets.push_back(std::move(set));
  }
  return Grid(spec, std::move(sets));
}

// A dense-ish test polynomial with a maximal corner monomial:
// prod_i (x_i^d + x_i + 1) - handy because every per-variable degree is d.
Polynomial corner_poly(const FieldSpec& spec, std::size_t arity,
                       std::uint32_t d) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < arity; ++i) vars.push_back("x" + std::to_string(i + 1));
  Polynomial f = Polynomial::constant(spec, vars, FieldValue::one(spec));
  for (std::size_t i = 0; i < arity; ++i) {
    Polynomial factor = Polynomial::variable(spec, vars, i, d) +
                        Polynomial::variable(spec, vars, i) +
                        Polynomial::constant(spec, vars, FieldValue::one(spec));
    f = f * factor;
  }
  return f;
}

void BM_PolyMul(benchmark::State& state) {
  const std::size_t arity = static_cast<std::size_t>(state.range(0));
  Polynomial f = corner_poly(Q, arity, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f * f);
  }
}
BENCHMARK(BM_PolyMul)->Arg(2)->Arg(3)->Arg(4);

void BM_CoefficientFormula(benchmark::State& state) {
  const std::size_t arity = static_cast<std::size_t>(state.range(0));
  const std::uint32_t d = 3;
  Polynomial f = corner_poly(Q, arity, d);
  Monomial alpha(std::vector<std::uint32_t>(arity, d));
  Grid grid = integer_grid(Q, std::vector<std::size_t>(arity, d + 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(coefficient_via_formula(f, alpha, grid));
  }
}
BENCHMARK(BM_CoefficientFormula)->Arg(2)->Arg(3)->Arg(4);

void BM_CoefficientDirect(benchmark::State& state) {
  const std::size_t arity = static_cast<std::size_t>(state.range(0));
  const std::uint32_t d = 3;
  Polynomial f = corner_poly(Q, arity, d);
  Monomial alpha(std::vector<std::uint32_t>(arity, d));
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.coefficient(alpha));
  }
}
BENCHMARK(BM_CoefficientDirect)->Arg(2)->Arg(3)->Arg(4);

// prod_i prod_{j<d} (x_i - j) vanishes at every grid point with a
// coordinate below d, so witnesses sit deep in enumeration order and the
// probe counters contrast the two strategies.
Polynomial vanishing_box_poly(const FieldSpec& spec, std::size_t arity,
                              std::uint32_t d) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < arity; ++i) vars.push_back("x" + std::to_string(i + 1));
  Polynomial f = Polynomial::constant(spec, vars, FieldValue::one(spec));
  for (std::size_t i = 0; i < arity; ++i) {
    for (std::uint32_t j = 0; j < d; ++j) {
      f = f * (Polynomial::variable(spec, vars, i) -
               Polynomial::constant(spec, vars,
                                    FieldValue::integer(spec, j)));
    }
  }
  return f;
}

void BM_WitnessRecursive(benchmark::State& state) {
  const std::size_t arity = static_cast<std::size_t>(state.range(0));
  const std::uint32_t d = 3;
  Polynomial f = vanishing_box_poly(Q, arity, d);
  Monomial alpha(std::vector<std::uint32_t>(arity, d));
  Grid grid = integer_grid(Q, std::vector<std::size_t>(arity, d + 2));
  std::uint64_t evals = 0;
  for (auto _ : state) {
    WitnessReport report = find_witness_recursive(f, alpha, grid);
    evals = report.evaluations_used;
    benchmark::DoNotOptimize(report);
  }
  state.counters["evals"] = static_cast<double>(evals);
}
BENCHMARK(BM_WitnessRecursive)->Arg(2)->Arg(3)->Arg(4);

void BM_WitnessEnumerate(benchmark::State& state) {
  const std::size_t arity = static_cast<std::size_t>(state.range(0));
  const std::uint32_t d = 3;
  Polynomial f = vanishing_box_poly(Q, arity, d);
  Grid grid = integer_grid(Q, std::vector<std::size_t>(arity, d + 2));
  std::uint64_t evals = 0;
  for (auto _ : state) {
    WitnessReport report = find_witness_enumerate(f, grid);
    evals = report.evaluations_used;
    benchmark::DoNotOptimize(report);
  }
  state.counters["evals"] = static_cast<double>(evals);
}
BENCHMARK(BM_WitnessEnumerate)->Arg(2)->Arg(3)->Arg(4);

void BM_LemmaSum(benchmark::State& state) {
  const std::size_t size = static_cast<std::size_t>(state.range(0));
  std::vector<FieldValue> values;
  for (std::size_t i = 0; i < size; ++i) {
    values.push_back(FieldValue::integer(Q, static_cast<long>(i)));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(lemma_sum(values));
  }
}
BENCHMARK(BM_LemmaSum)->Arg(4)->Arg(8)->Arg(12);

void BM_LabelCube(benchmark::State& state) {
  Graph cube = [] {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 8; ++v) {
      for (int bit = 0; bit < 3; ++bit) {
        int w = v ^ (1 << bit);
        if (v < w) edges.emplace_back(v, w);
      }
    }
    return Graph(8, std::move(edges));
  }();
  std::vector<Polynomial> polys(8, parse_polynomial("x", {"x"}, Q));
  auto inst = LabelingInstance::make(cube, polys, 2, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_labeling(inst));
  }
}
BENCHMARK(BM_LabelCube);

}  // namespace

BENCHMARK_MAIN();
