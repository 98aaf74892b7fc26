// cnkit: batch CLI for exact witness search on grids, the evaluation
// coefficient formula, and bipartite graph labeling.
//
// Exit codes: 0 success; 1 domain failure (no witness, infeasible
// orientation, failed precondition, ...); 2 parse or usage error. Every
// failure prints exactly one "ERR <code> <message>" line to stderr.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cnkit/labeling.hpp"
#include "cnkit/nss.hpp"
#include "cnkit/parser.hpp"

namespace {

using namespace cnkit;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

std::vector<std::string> parse_variables(const std::string& text) {
  auto names = split(text, ',');
  for (const auto& n : names) {
    if (n.empty()) {
      throw Error(Errc::parse, "empty variable name in \"" + text + "\"");
    }
  }
  return names;
}

Monomial parse_exponents(const std::string& text) {
  std::vector<std::uint32_t> e;
  for (const auto& part : split(text, ',')) {
    try {
      unsigned long v = std::stoul(part);
      e.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw Error(Errc::parse, "bad exponent \"" + part + "\"");
    }
  }
  return Monomial(std::move(e));
}

std::vector<FieldValue> parse_value_list(const FieldSpec& spec,
                                         const std::string& text) {
  std::vector<FieldValue> values;
  for (const auto& part : split(text, ',')) {
    values.push_back(FieldValue::parse(spec, part));
  }
  return values;
}

// Sets are separated by ';', elements by ','.
Grid parse_sets(const FieldSpec& spec, const std::string& text) {
  std::vector<std::vector<FieldValue>> sets;
  for (const auto& group : split(text, ';')) {
    sets.push_back(parse_value_list(spec, group));
  }
  return Grid(spec, std::move(sets));
}

std::string format_point(const std::vector<FieldValue>& point) {
  std::string out;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) out += ",";
    out += point[i].str();
  }
  return out;
}

// The --fv argument is an expression, or the name of a file with lines
// "<vertex> <expression>".
std::vector<Polynomial> load_vertex_polys(const std::string& fv,
                                          std::size_t vertex_count) {
  const FieldSpec q = FieldSpec::rationals();
  if (!std::filesystem::is_regular_file(fv)) {
    Polynomial f = parse_polynomial(fv, {"x"}, q);
    return std::vector<Polynomial>(vertex_count, f);
  }
  std::ifstream in(fv);
  if (!in) throw Error(Errc::io, "cannot open \"" + fv + "\"");
  std::vector<std::optional<Polynomial>> per_vertex(vertex_count);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    std::size_t vertex = 0;
    try {
      vertex = std::stoul(head);
    } catch (const std::exception&) {
      throw Error(Errc::parse, "fv file line " + std::to_string(line_no) +
                                   ": expected a vertex index");
    }
    if (vertex >= vertex_count) {
      throw Error(Errc::parse, "fv file line " + std::to_string(line_no) +
                                   ": vertex out of range");
    }
    std::string expr;
    std::getline(ls, expr);
    per_vertex[vertex] = parse_polynomial(expr, {"x"}, q);
  }
  std::vector<Polynomial> result;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (!per_vertex[v]) {
      throw Error(Errc::parse,
                  "fv file gives no polynomial for vertex " + std::to_string(v));
    }
    result.push_back(std::move(*per_vertex[v]));
  }
  return result;
}

// Label lists file: lines "<vertex> <a,b,c,...>".
std::vector<std::vector<FieldValue>> load_label_lists(
    const std::string& path, std::size_t vertex_count) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open \"" + path + "\"");
  const FieldSpec q = FieldSpec::rationals();
  std::vector<std::optional<std::vector<FieldValue>>> lists(vertex_count);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    std::size_t vertex = 0;
    try {
      vertex = std::stoul(head);
    } catch (const std::exception&) {
      throw Error(Errc::parse, "lists file line " + std::to_string(line_no) +
                                   ": expected a vertex index");
    }
    if (vertex >= vertex_count) {
      throw Error(Errc::parse, "lists file line " + std::to_string(line_no) +
                                   ": vertex out of range");
    }
    std::string values;
    if (!(ls >> values)) {
      throw Error(Errc::parse, "lists file line " + std::to_string(line_no) +
                                   ": expected a comma-separated list");
    }
    lists[vertex] = parse_value_list(q, values);
  }
  std::vector<std::vector<FieldValue>> result;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (!lists[v]) {
      throw Error(Errc::parse,
                  "lists file gives no labels for vertex " + std::to_string(v));
    }
    result.push_back(std::move(*lists[v]));
  }
  return result;
}

struct Options {
  std::string field = "q";
  std::string vars;
  std::string poly;
  std::string alpha;
  std::string sets;
  std::string set;
  std::string strategy = "enumerate";
  std::string graph;
  std::string fv = "x";
  std::string lists;
  int k = 0;
  int l = 1;
  bool check = false;
  bool allow_nonmaximal = false;
};

int run_coeff(const Options& opt) {
  FieldSpec spec = FieldSpec::parse(opt.field);
  auto vars = parse_variables(opt.vars);
  Polynomial f = parse_polynomial(opt.poly, vars, spec);
  Monomial alpha = parse_exponents(opt.alpha);
  Grid grid = parse_sets(spec, opt.sets);
  FieldValue value =
      coefficient_via_formula(f, alpha, grid, opt.allow_nonmaximal);
  std::cout << value.str() << "\n";
  if (opt.check) {
    FieldValue direct = f.coefficient(alpha);
    std::cout << "direct " << direct.str() << " "
              << (direct == value ? "agree" : "mismatch") << "\n";
  }
  return 0;
}

int run_witness(const Options& opt) {
  FieldSpec spec = FieldSpec::parse(opt.field);
  auto vars = parse_variables(opt.vars);
  Polynomial f = parse_polynomial(opt.poly, vars, spec);
  Grid grid = parse_sets(spec, opt.sets);
  WitnessReport report;
  if (opt.strategy == "recursive") {
    if (opt.alpha.empty()) {
      throw Error(Errc::parse, "--strategy recursive needs --alpha");
    }
    report = find_witness_recursive(f, parse_exponents(opt.alpha), grid);
  } else if (opt.strategy == "enumerate") {
    report = find_witness_enumerate(f, grid);
  } else {
    throw Error(Errc::parse, "unknown strategy \"" + opt.strategy + "\"");
  }
  if (!report.found()) {
    std::cout << "NONE\n";
    std::cerr << "ERR no-witness polynomial vanishes on the whole grid\n";
    return 1;
  }
  std::cout << "point " << format_point(*report.point) << "\n";
  std::cout << "value " << report.value->str() << "\n";
  return 0;
}

int run_label(const Options& opt) {
  Graph g = parse_graph_file(opt.graph);
  auto polys = load_vertex_polys(opt.fv, g.vertex_count());
  std::optional<std::vector<std::vector<FieldValue>>> lists;
  if (!opt.lists.empty()) {
    lists = load_label_lists(opt.lists, g.vertex_count());
  }
  auto inst = LabelingInstance::make(std::move(g), std::move(polys), opt.k,
                                     opt.l, std::move(lists));
  LabelingResult result = find_labeling(inst);
  for (std::size_t v = 0; v < result.labels.size(); ++v) {
    std::cout << "v " << v << " " << result.labels[v].str() << "\n";
  }
  std::vector<std::string> vars;
  for (std::size_t v = 0; v < result.labels.size(); ++v) {
    vars.push_back("x" + std::to_string(v));
  }
  std::cout << "certificate M " << format_monomial(result.certificate.target, vars)
            << " coeff " << result.certificate.coefficient.str() << "\n";
  return 0;
}

int run_lemma(const Options& opt) {
  FieldSpec spec = FieldSpec::parse(opt.field);
  FieldValue sum = lemma_sum(parse_value_list(spec, opt.set));
  std::cout << sum.str() << "\n";
  return 0;
}

int run_parse(const Options& opt) {
  FieldSpec spec = FieldSpec::parse(opt.field);
  auto vars = parse_variables(opt.vars);
  std::cout << format_polynomial(parse_polynomial(opt.poly, vars, spec))
            << "\n";
  return 0;
}

int run_orient(const Options& opt) {
  Graph g = parse_graph_file(opt.graph);
  Orientation o;
  try {
    o = orient_bounded_outdegree(g, opt.k);
  } catch (const Error& e) {
    if (e.code() != Errc::infeasible) throw;
    std::cout << "INFEASIBLE\n";
    std::cerr << "ERR infeasible " << e.what() << "\n";
    return 1;
  }
  for (const auto& [tail, head] : o.directed) {
    std::cout << "e " << tail << " " << head << "\n";
  }
  return 0;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::parse:
    case Errc::io:
    case Errc::not_prime:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact witness search, coefficient formula, and bipartite "
               "graph labeling over Q and prime fields"};
  app.require_subcommand(1);
  Options opt;

  auto add_field = [&](CLI::App* cmd) {
    cmd->add_option("--field", opt.field, "field: \"q\" or \"fp:<p>\"");
  };
  auto add_poly_inputs = [&](CLI::App* cmd) {
    cmd->add_option("--vars", opt.vars, "comma-separated variable names")
        ->required();
    cmd->add_option("--poly", opt.poly, "polynomial expression")->required();
  };

  CLI::App* coeff = app.add_subcommand(
      "coeff", "coefficient of a monomial from grid evaluations");
  add_field(coeff);
  add_poly_inputs(coeff);
  coeff->add_option("--alpha", opt.alpha, "target exponents, e.g. 1,1")
      ->required();
  coeff->add_option("--sets", opt.sets,
                    "grid sets, ';' between sets, ',' between elements")
      ->required();
  coeff->add_flag("--check", opt.check,
                  "also print the direct-expansion coefficient");
  coeff->add_flag("--allow-nonmaximal", opt.allow_nonmaximal,
                  "skip the maximality precondition and sum anyway");

  CLI::App* witness =
      app.add_subcommand("witness", "find a nonvanishing grid point");
  add_field(witness);
  add_poly_inputs(witness);
  witness->add_option("--alpha", opt.alpha,
                      "exponents for the recursive strategy");
  witness->add_option("--sets", opt.sets, "grid sets")->required();
  witness->add_option("--strategy", opt.strategy,
                      "search strategy: enumerate (default) or recursive");

  CLI::App* label =
      app.add_subcommand("label", "find a valid labeling of a bipartite graph");
  label->add_option("--graph", opt.graph, "graph file")->required();
  label->add_option("--k", opt.k, "outdegree bound")->required();
  label->add_option("--l", opt.l, "vertex polynomial degree bound")->required();
  label->add_option("--fv", opt.fv,
                    "vertex polynomial in x, or a per-vertex file");
  label->add_option("--lists", opt.lists, "per-vertex label list file");

  CLI::App* lemma =
      app.add_subcommand("lemma", "sum of inverse difference products");
  add_field(lemma);
  lemma->add_option("--set", opt.set, "comma-separated distinct elements")
      ->required();

  CLI::App* parse =
      app.add_subcommand("parse", "echo a polynomial in canonical form");
  add_field(parse);
  add_poly_inputs(parse);

  CLI::App* orient =
      app.add_subcommand("orient", "orient edges with bounded outdegree");
  orient->add_option("--graph", opt.graph, "graph file")->required();
  orient->add_option("--k", opt.k, "outdegree bound")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "ERR usage " << e.what() << "\n";
    return 2;
  }

  try {
    if (coeff->parsed()) return run_coeff(opt);
    if (witness->parsed()) return run_witness(opt);
    if (label->parsed()) return run_label(opt);
    if (lemma->parsed()) return run_lemma(opt);
    if (parse->parsed()) return run_parse(opt);
    if (orient->parsed()) return run_orient(opt);
  } catch (const Error& e) {
    std::cerr << "ERR " << errc_token(e.code()) << " " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "ERR internal " << e.what() << "\n";
    return 1;
  }
  return 0;
}
