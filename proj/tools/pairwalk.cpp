#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "pairwalk/constructions.hpp"
#include "pairwalk/graph_io.hpp"
#include "pairwalk/instances.hpp"
#include "pairwalk/spectral.hpp"
#include "pairwalk/transfer.hpp"
#include "pairwalk/verify.hpp"

using namespace pairwalk;

namespace {

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

std::string num(double v) {
  v = std::round(v * 1e9) / 1e9;
  if (v == 0.0) v = 0.0;  // no negative zero in output
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", v);
  return buf;
}

void emit(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_file);
  if (!out) throw std::invalid_argument("cannot write file: " + out_file);
  out << text;
}

int cmd_spectrum(const std::string& graph_arg, const std::string& model_arg) {
  WeightedGraph g = load_graph(graph_arg);
  SpectralDecomposition dec = decompose(g, parse_model(model_arg));
  std::ostringstream os;
  for (int k = 0; k < dec.size(); ++k) {
    if (k) os << ", ";
    os << num(dec.eigenvalue(k)) << " (" << dec.multiplicity(k) << ")";
  }
  std::cout << os.str() << "\n";
  return kExitPositive;
}

int cmd_fidelity(const std::string& graph_arg, const std::string& model_arg,
                 const std::string& x_spec, const std::string& y_spec,
                 double t_max, int steps, const std::string& out_file) {
  WeightedGraph g = load_graph(graph_arg);
  SpectralDecomposition dec = decompose(g, parse_model(model_arg));
  RealPureState x = parse_state(x_spec, g.order());
  RealPureState y = parse_state(y_spec, g.order());
  OverlapSeries series(dec, x, y);

  std::ostringstream os;
  os << "t,fidelity\n";
  if (t_max <= 0.0) {
    os << num(0.0) << "," << num(std::abs(x.vec().dot(y.vec()))) << "\n";
  } else {
    for (int j = 0; j <= steps; ++j) {
      double t = t_max * j / steps;
      os << num(t) << "," << num(series.fidelity(t)) << "\n";
    }
  }
  emit(os.str(), out_file);
  return kExitPositive;
}

int cmd_pst(const std::string& graph_arg, const std::string& model_arg,
            const std::string& x_spec, const std::string& y_spec,
            double window, std::optional<double> tol,
            const std::string& out_file) {
  WeightedGraph g = load_graph(graph_arg);
  SpectralDecomposition dec = decompose(g, parse_model(model_arg));
  RealPureState x = parse_state(x_spec, g.order());
  RealPureState y = parse_state(y_spec, g.order());

  SearchOptions opts;
  if (window > 0) opts.window = window;
  if (tol) {
    opts.tol_exact = *tol;
    opts.tol_numeric = *tol;
  }
  for (const RealPureState* state : {&x, &y}) {
    Support s = support(dec, *state);
    if (!s.borderline.empty())
      std::cerr << "note: a projection norm sits within a decade of the "
                   "support threshold; the support classification is "
                   "borderline\n";
  }
  std::vector<TransferCertificate> certs = find_pst(dec, x, y, opts);
  nlohmann::json j = nlohmann::json::array();
  bool any_positive = false;
  for (const TransferCertificate& c : certs) {
    j.push_back(certificate_to_json(c));
    any_positive = any_positive || c.positive();
  }
  emit(j.dump(2) + "\n", out_file);
  return any_positive ? kExitPositive : kExitNegative;
}

WeightedGraph parse_inline_graph(const std::string& token) {
  return load_graph(token);
}

Cluster cluster_from_members(const WeightedGraph& g,
                             const std::string& member_list) {
  std::vector<int> members;
  std::stringstream ss(member_list);
  std::string item;
  while (std::getline(ss, item, ',')) members.push_back(std::stoi(item));
  std::sort(members.begin(), members.end());
  if (members.size() < 2)
    throw std::invalid_argument("a cluster needs at least two members");
  Cluster c;
  c.members = members;
  c.shared = g.neighbors(members.front());
  c.weights.resize(c.shared.size());
  for (size_t k = 0; k < c.shared.size(); ++k)
    c.weights[k] = g.weight(members.front(), c.shared[k]);
  if (!validate_cluster(g, c))
    throw std::invalid_argument("given vertices do not form a cluster");
  return c;
}

int cmd_construct(const std::string& kind,
                  const std::vector<std::string>& args,
                  const std::string& members, const std::string& out_file) {
  auto need = [&](size_t n) {
    if (args.size() != n)
      throw std::invalid_argument("construct " + kind + " expects " +
                                  std::to_string(n) + " arguments");
  };
  WeightedGraph result(1);
  if (kind == "attach") {
    need(2);
    WeightedGraph base = parse_inline_graph(args[0]);
    WeightedGraph inner = parse_inline_graph(args[1]);
    Cluster cl;
    if (!members.empty()) {
      cl = cluster_from_members(base, members);
    } else {
      auto found = detect_clusters(base);
      if (found.empty())
        throw std::invalid_argument("base graph has no cluster");
      cl = found.front();
    }
    result = attach(base, cl, inner);
  } else if (kind == "complement") {
    need(1);
    result = complement(parse_inline_graph(args[0]));
  } else if (kind == "seqjoin") {
    if (args.empty())
      throw std::invalid_argument("seqjoin expects at least one graph");
    std::vector<WeightedGraph> parts;
    for (const std::string& a : args) parts.push_back(parse_inline_graph(a));
    result = sequential_join(parts);
  } else if (kind == "cartesian") {
    need(2);
    result = cartesian(parse_inline_graph(args[0]), parse_inline_graph(args[1]));
  } else if (kind == "vcorona") {
    need(2);
    result = vertex_corona(parse_inline_graph(args[0]),
                           parse_inline_graph(args[1]));
  } else if (kind == "ecorona") {
    need(2);
    result = edge_corona(parse_inline_graph(args[0]),
                         parse_inline_graph(args[1]));
  } else if (kind == "ncorona") {
    need(2);
    result = neighborhood_corona(parse_inline_graph(args[0]),
                                 parse_inline_graph(args[1]));
  } else if (kind == "blowup") {
    if (args.size() < 2)
      throw std::invalid_argument("blowup expects a graph and a size");
    WeightedGraph base = parse_inline_graph(args[0]);
    int c = std::stoi(args[1]);
    std::vector<WeightedGraph> inner;
    if (args.size() == 2) {
      inner.assign(base.order(), empty_graph(c));
    } else if (args.size() == 3) {
      inner.assign(base.order(), parse_inline_graph(args[2]));
    } else {
      for (size_t k = 2; k < args.size(); ++k)
        inner.push_back(parse_inline_graph(args[k]));
    }
    result = blow_up(base, c, inner);
  } else if (kind == "kn-minus-matching") {
    need(2);
    result = complete_minus_matching(std::stoi(args[0]), std::stoi(args[1]));
  } else if (kind == "kn-minus-cycle") {
    need(2);
    result = complete_minus_cycle(std::stoi(args[0]), std::stoi(args[1]));
  } else {
    throw std::invalid_argument("unknown construction kind: " + kind);
  }
  emit(graph_to_json(result).dump(2) + "\n", out_file);
  return kExitPositive;
}

int cmd_verify(const std::string& suite, unsigned long long seed) {
  VerifySuiteReport rep = run_suite(suite, seed);
  std::vector<VerifyCase> cases = rep.cases;
  std::sort(cases.begin(), cases.end(),
            [](const VerifyCase& a, const VerifyCase& b) {
              return a.instance < b.instance;
            });
  for (const VerifyCase& c : cases) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << rep.suite << " :: "
              << c.instance << " :: " << c.expected
              << " :: residual=" << num(c.residual) << "\n";
  }
  std::cout << "suite " << rep.suite << ": " << rep.passed() << " passed, "
            << rep.failed() << " failed\n";
  return rep.all_passed() ? kExitPositive : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"continuous-time quantum walk pair state transfer toolkit"};
  app.require_subcommand(1);

  std::string graph_arg, model_arg = "A", x_spec, y_spec, out_file;
  std::string suite = "all", kind, members;
  std::vector<std::string> construct_args;
  double t_max = 2.0 * 3.14159265358979323846;
  double window = 0.0;
  std::optional<double> tol;
  int steps = 200;
  unsigned long long seed = 0;

  CLI::App* spectrum = app.add_subcommand("spectrum", "distinct eigenvalues");
  spectrum->add_option("graph", graph_arg)->required();
  spectrum->add_option("--model", model_arg);

  CLI::App* fid = app.add_subcommand("fidelity", "fidelity curve as CSV");
  fid->add_option("graph", graph_arg)->required();
  fid->add_option("--model", model_arg);
  fid->add_option("--x", x_spec)->required();
  fid->add_option("--y", y_spec)->required();
  fid->add_option("--tmax", t_max);
  fid->add_option("--steps", steps);
  fid->add_option("--out", out_file);

  CLI::App* pst = app.add_subcommand("pst", "search for perfect state transfer");
  pst->add_option("graph", graph_arg)->required();
  pst->add_option("--model", model_arg);
  pst->add_option("--x", x_spec)->required();
  pst->add_option("--y", y_spec)->required();
  pst->add_option("--window", window);
  double tol_value = 0.0;
  CLI::Option* tol_opt = pst->add_option("--tol", tol_value);
  pst->add_option("--out", out_file);

  CLI::App* construct = app.add_subcommand("construct", "build a graph");
  construct->add_option("kind", kind)->required();
  construct->add_option("args", construct_args);
  construct->add_option("--members", members);
  construct->add_option("--out", out_file);

  CLI::App* verify = app.add_subcommand("verify", "run a theorem suite");
  verify->add_option("suite", suite)->required();
  verify->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitPositive : kExitUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(graph_arg, model_arg);
    if (*fid)
      return cmd_fidelity(graph_arg, model_arg, x_spec, y_spec, t_max, steps,
                          out_file);
    if (*pst) {
      if (tol_opt->count() > 0) tol = tol_value;
      return cmd_pst(graph_arg, model_arg, x_spec, y_spec, window, tol,
                     out_file);
    }
    if (*construct) return cmd_construct(kind, construct_args, members, out_file);
    if (*verify) return cmd_verify(suite, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
