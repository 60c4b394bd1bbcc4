// netrobust: generators, robustness analyses, brute-force cross-checks and
// the claims-catalog verifier behind one command-line surface.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "netrobust/claims.hpp"
#include "netrobust/graph.hpp"
#include "netrobust/independence.hpp"
#include "netrobust/matching.hpp"
#include "netrobust/mincut.hpp"
#include "netrobust/oracle.hpp"
#include "netrobust/restricted.hpp"
#include "netrobust/runtime.hpp"
#include "netrobust/topology.hpp"

namespace {

using namespace netrobust;
using nlohmann::json;

Graph load_graph(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    buffer << in.rdbuf();
  }
  return parse_graph(buffer.str());
}

json edge_array(const std::vector<Edge>& edges) {
  json a = json::array();
  for (const Edge& e : edges) a.push_back(json::array({e.u, e.v}));
  return a;
}

std::string edge_text(const std::vector<Edge>& edges) {
  std::ostringstream os;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) os << " ";
    os << edges[i].u << "-" << edges[i].v;
  }
  return os.str();
}

json cut_json(const CutWitness& w) {
  json j;
  j["edges"] = edge_array(w.cut_edges);
  j["side"] = w.side;
  j["component_sizes"] = w.component_sizes;
  return j;
}

int run_gen(const std::string& family, int k, int n, const std::string& out) {
  Graph g = family == "dcell" ? gen_dcell(k, n) : gen_star(n, k);
  const std::string text = write_graph(g);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
  }
  return 0;
}

void emit_preclusion(const std::string& name, const PreclusionResult& r,
                     bool as_json) {
  std::map<std::string, int> kind_counts;
  for (const PreclusionWitness& w : r.witnesses)
    ++kind_counts[preclusion_kind_name(w.kind)];
  if (as_json) {
    json j;
    j["metric"] = name;
    j["defined"] = r.defined;
    if (r.defined) j["value"] = r.number;
    j["exhaustive"] = r.exhaustive;
    j["tested"] = r.tested;
    json sets = json::array();
    for (const PreclusionWitness& w : r.witnesses) {
      json s;
      s["edges"] = edge_array(w.edges);
      s["kind"] = preclusion_kind_name(w.kind);
      sets.push_back(std::move(s));
    }
    j["optimal_sets"] = std::move(sets);
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (!r.defined) {
    std::cout << name << " = undefined\n";
    return;
  }
  std::cout << name << " = " << r.number << (r.exhaustive ? " (exhaustive" : " (first optimum")
            << ", " << r.tested << " sets tested)\n";
  for (const auto& [kind, count] : kind_counts)
    std::cout << "  " << kind << ": " << count << "\n";
  if (!r.witnesses.empty())
    std::cout << "  example: " << edge_text(r.witnesses.front().edges) << "\n";
}

int run_analyze(const std::string& metric, int k, bool exhaustive,
                const std::string& path, bool as_json) {
  Graph g = load_graph(path);
  const Deadline deadline = Deadline::after_ms(default_budget_ms());
  SweepLimits sweep;
  sweep.deadline = deadline;
  MatchingLimits matching;
  matching.deadline = deadline;

  if (metric == "lambda") {
    ConnectivityResult r = edge_connectivity(g);
    if (as_json) {
      json j{{"metric", "lambda"}, {"value", r.value}, {"witness", cut_json(r.witness)}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "lambda = " << r.value << "\n"
                << "  cut: " << edge_text(r.witness.cut_edges) << "\n";
    }
    return 0;
  }
  if (metric == "lambda2" || metric == "lambda3" || metric == "lambdak") {
    const int kk = metric == "lambda2" ? 2 : metric == "lambda3" ? 3 : k;
    if (kk < 1) throw std::runtime_error("analyze: --k must be >= 1 for lambdak");
    LadderResult r = lambda_k(g, kk, sweep);
    if (as_json) {
      json j{{"metric", "lambda" + std::to_string(kk)},
             {"defined", r.defined},
             {"pairs_swept", r.pairs_swept}};
      if (r.defined) {
        j["value"] = r.value;
        j["witness"] = cut_json(r.witness);
      }
      std::cout << j.dump(2) << "\n";
    } else if (!r.defined) {
      std::cout << "lambda_" << kk << " = undefined (no " << kk
                << "-restricted edge-cut exists)\n";
    } else {
      std::cout << "lambda_" << kk << " = " << r.value << "\n"
                << "  cut: " << edge_text(r.witness.cut_edges) << "\n";
    }
    return 0;
  }
  if (metric == "xi") {
    if (k < 1) throw std::runtime_error("analyze: --k must be >= 1 for xi");
    XiResult r = xi_k(g, k);
    if (as_json) {
      json j{{"metric", "xi" + std::to_string(k)}, {"value", r.value}, {"set", r.witness}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "xi_" << k << " = " << r.value << "\n";
    }
    return 0;
  }
  if (metric == "alpha") {
    AlphaResult r = independence_number(g, 200'000'000, deadline);
    if (as_json) {
      json j{{"metric", "alpha"},
             {"value", r.alpha},
             {"witness", r.witness},
             {"nodes", r.nodes}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "alpha = " << r.alpha << "\n";
    }
    return 0;
  }
  if (metric == "ve") {
    VeResult r = v_e(g);
    if (as_json) {
      json j{{"metric", "ve"},
             {"value", r.value},
             {"path", r.path},
             {"edges", edge_array(r.edges)}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "v_e = " << r.value << " (2-path " << r.path[0] << "-" << r.path[1]
                << "-" << r.path[2] << ")\n";
    }
    return 0;
  }
  if (metric == "mp" || metric == "mp1") {
    PreclusionResult r = metric == "mp" ? mp_number(g, exhaustive, matching)
                                        : mp1_number(g, exhaustive, matching);
    emit_preclusion(metric, r, as_json);
    return 0;
  }
  throw std::runtime_error("analyze: unknown metric " + metric);
}

int run_classify(const std::string& property, const std::string& path) {
  Graph g = load_graph(path);
  const Deadline deadline = Deadline::after_ms(default_budget_ms());
  Verdict verdict = Verdict::Unknown;
  std::string evidence;
  std::vector<Edge> counter_edges;

  if (property == "super-lambda" || property == "super-lambda2" ||
      property == "super-lambda3") {
    const int k = property == "super-lambda" ? 1 : property == "super-lambda2" ? 2 : 3;
    SweepLimits sweep;
    sweep.deadline = deadline;
    SuperStatus s = classify_super_lambda_k(g, k, sweep);
    verdict = s.verdict;
    evidence = s.evidence;
    counter_edges = s.counterexample.cut_edges;
  } else if (property == "super-matched" || property == "cond-super-matched") {
    MatchingLimits matching;
    matching.deadline = deadline;
    MatchedStatus s = property == "super-matched"
                          ? super_matched_status(g, matching)
                          : cond_super_matched_status(g, matching);
    verdict = s.verdict;
    evidence = s.evidence;
    counter_edges = s.counterexample;
  } else {
    throw std::runtime_error("classify: unknown property " + property);
  }

  std::cout << property << ": " << verdict_name(verdict) << "\n";
  if (!evidence.empty()) std::cout << "  evidence: " << evidence << "\n";
  if (verdict == Verdict::Refuted && !counter_edges.empty())
    std::cout << "  counterexample: " << edge_text(counter_edges) << "\n";
  return verdict == Verdict::Unknown ? 3 : 0;
}

int run_isocheck(int n) {
  Graph d = gen_dcell(1, n);
  Graph s = gen_star(n + 1, 2);
  VertexMap map = dcell_star_map(n);
  const bool ok = check_adjacency_preserving(d, s, map);
  std::cout << "D_{1," << n << "} -> S_{" << (n + 1) << ",2}: "
            << (ok ? "adjacency-preserving bijection verified" : "NOT an isomorphism")
            << " (" << d.vertex_count() << " vertices, " << d.edge_count()
            << " edges)\n";
  return ok ? 0 : 1;
}

int run_oracle(const std::string& metric, const std::string& path) {
  Graph g = load_graph(path);
  auto show_ladder = [&](int k) {
    oracle::BruteLadder r = oracle::brute_lambda_k(g, k);
    if (r.defined)
      std::cout << "oracle lambda_" << k << " = " << r.value << "\n";
    else
      std::cout << "oracle lambda_" << k << " = undefined\n";
  };
  auto show_super = [&](int k) {
    oracle::BruteSuper r = oracle::brute_super_lambda_k(g, k);
    if (!r.defined)
      std::cout << "oracle super-lambda_" << k << " = undefined\n";
    else
      std::cout << "oracle super-lambda_" << k << " = " << (r.super ? "true" : "false")
                << "\n";
  };
  if (metric == "lambda")
    show_ladder(1);
  else if (metric == "lambda2")
    show_ladder(2);
  else if (metric == "lambda3")
    show_ladder(3);
  else if (metric == "super-lambda")
    show_super(1);
  else if (metric == "super-lambda2")
    show_super(2);
  else if (metric == "super-lambda3")
    show_super(3);
  else if (metric == "alpha")
    std::cout << "oracle alpha = " << oracle::brute_independence_number(g) << "\n";
  else if (metric == "mp" || metric == "mp1") {
    oracle::BrutePreclusion r = oracle::brute_preclusion(g, metric == "mp1");
    if (!r.defined)
      std::cout << "oracle " << metric << " = undefined\n";
    else
      std::cout << "oracle " << metric << " = " << r.number << " ("
                << r.optimal_sets.size() << " optimal sets)\n";
  } else
    throw std::runtime_error("oracle: unknown metric " + metric);
  return 0;
}

int run_verify(long long max_order, bool slow, std::uint32_t seed,
               const std::string& json_out) {
  claims::PlanOptions opts;
  opts.max_order = max_order;
  opts.slow = slow;
  opts.seed = seed;
  claims::VerificationReport report = claims::run_verification(opts);
  std::cout << report.to_table();
  if (!json_out.empty()) {
    std::ofstream f(json_out);
    if (!f) throw std::runtime_error("cannot write " + json_out);
    f << report.to_json().dump(2) << "\n";
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "netrobust: DCell / star-graph generators with edge-connectivity, "
      "matching-preclusion and independence analyses"};
  app.require_subcommand(1);
  int rc = 0;

  auto* gen = app.add_subcommand("gen", "generate a graph file");
  std::string gen_family;
  int gen_k = 1, gen_n = 2;
  std::string gen_out;
  gen->add_option("--family", gen_family, "graph family")
      ->required()
      ->check(CLI::IsMember({"dcell", "star"}));
  gen->add_option("--k", gen_k, "DCell level / star k'")->required();
  gen->add_option("--n", gen_n, "DCell n / star n'")->required();
  gen->add_option("--out", gen_out, "output file (default: stdout)");
  gen->callback([&]() { rc = run_gen(gen_family, gen_k, gen_n, gen_out); });

  auto* analyze = app.add_subcommand("analyze", "compute one robustness metric");
  std::string an_metric, an_file;
  int an_k = 0;
  bool an_exhaustive = false, an_json = false;
  analyze->add_option("--metric", an_metric, "metric to compute")
      ->required()
      ->check(CLI::IsMember(
          {"lambda", "lambda2", "lambda3", "lambdak", "xi", "alpha", "ve", "mp", "mp1"}));
  analyze->add_option("--k", an_k, "k for lambdak / xi");
  analyze->add_flag("--exhaustive", an_exhaustive,
                    "enumerate every optimal preclusion set (mp / mp1)");
  analyze->add_option("file", an_file, "graph file ('-' for stdin)")->required();
  analyze->add_flag("--json", an_json, "emit JSON");
  analyze->callback(
      [&]() { rc = run_analyze(an_metric, an_k, an_exhaustive, an_file, an_json); });

  auto* classify = app.add_subcommand("classify", "decide a super-robustness property");
  std::string cl_property, cl_file;
  classify->add_option("--property", cl_property, "property to decide")
      ->required()
      ->check(CLI::IsMember({"super-lambda", "super-lambda2", "super-lambda3",
                             "super-matched", "cond-super-matched"}));
  classify->add_option("file", cl_file, "graph file ('-' for stdin)")->required();
  classify->callback([&]() { rc = run_classify(cl_property, cl_file); });

  auto* iso = app.add_subcommand("isocheck",
                                 "verify the D_{1,n} -> S_{n+1,2} bijection");
  int iso_n = 2;
  iso->add_option("--n", iso_n, "DCell base size n")->required();
  iso->callback([&]() { rc = run_isocheck(iso_n); });

  auto* orc = app.add_subcommand("oracle", "brute-force cross-check (small graphs)");
  std::string or_metric, or_file;
  orc->add_option("--metric", or_metric, "metric to brute-force")
      ->required()
      ->check(CLI::IsMember({"lambda", "lambda2", "lambda3", "super-lambda",
                             "super-lambda2", "super-lambda3", "alpha", "mp", "mp1"}));
  orc->add_option("file", or_file, "graph file ('-' for stdin)")->required();
  orc->callback([&]() { rc = run_oracle(or_metric, or_file); });

  auto* verify = app.add_subcommand(
      "verify-paper", "evaluate the built-in catalog of stated robustness values");
  long long vp_max_order = 500;
  bool vp_slow = false;
  std::uint32_t vp_seed = 20190402;
  std::string vp_json;
  verify->add_option("--max-order", vp_max_order,
                     "largest DCell order included in the plan");
  verify->add_flag("--slow", vp_slow, "include D_{3,2} and raise the work cap");
  verify->add_option("--seed", vp_seed, "corpus seed recorded in the report");
  verify->add_option("--json", vp_json, "write the JSON report to this file");
  verify->callback([&]() { rc = run_verify(vp_max_order, vp_slow, vp_seed, vp_json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
