#include "pairwalk/graph_io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <regex>
#include <sstream>
#include <stdexcept>

using nlohmann::json;

namespace pairwalk {

WeightedGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("graph JSON needs an integer field 'n'");
  WeightedGraph g(j["n"].get<int>());
  if (j.contains("edges")) {
    for (const json& e : j["edges"]) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3)
        throw std::invalid_argument("edge entries are [u, v] or [u, v, w]");
      double w = e.size() == 3 ? e[2].get<double>() : 1.0;
      g.add_edge(e[0].get<int>(), e[1].get<int>(), w);
    }
  }
  if (j.contains("labels")) {
    auto labels = j["labels"].get<std::vector<std::string>>();
    return WeightedGraph(g.order(), g.edges(), std::move(labels));
  }
  return g;
}

json graph_to_json(const WeightedGraph& g) {
  json j;
  j["n"] = g.order();
  j["edges"] = json::array();
  for (const Edge& e : g.edges()) {
    if (e.w == 1.0)
      j["edges"].push_back({e.u, e.v});
    else
      j["edges"].push_back({e.u, e.v, e.w});
  }
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

WeightedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  json j;
  in >> j;
  return graph_from_json(j);
}

void write_graph_file(const WeightedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write graph file: " + path);
  out << graph_to_json(g).dump(2) << "\n";
}

namespace {

const std::regex kNamedPattern(R"(^([KPC])(\d+)(?:,(\d+))?$)");

}  // namespace

bool is_named_graph(const std::string& token) {
  std::smatch m;
  if (!std::regex_match(token, m, kNamedPattern)) return false;
  return m[1].str() == "K" || !m[3].matched;
}

WeightedGraph named_graph(const std::string& token) {
  std::smatch m;
  if (!std::regex_match(token, m, kNamedPattern))
    throw std::invalid_argument("unknown graph token: " + token);
  int first = std::stoi(m[2].str());
  if (m[3].matched) {
    if (m[1].str() != "K")
      throw std::invalid_argument("unknown graph token: " + token);
    return complete_bipartite(first, std::stoi(m[3].str()));
  }
  if (m[1].str() == "K") return complete(first);
  if (m[1].str() == "P") return path(first);
  return cycle(first);
}

WeightedGraph load_graph(const std::string& token_or_path) {
  if (is_named_graph(token_or_path)) return named_graph(token_or_path);
  return read_graph_file(token_or_path);
}

RealPureState parse_state(const std::string& spec, int n) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("state spec needs a kind prefix: " + spec);
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);

  std::vector<double> nums;
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    double v = std::stod(item, &used);
    if (used != item.size())
      throw std::invalid_argument("bad number in state spec: " + item);
    nums.push_back(v);
  }

  auto as_vertex = [&](double v) {
    int a = static_cast<int>(v);
    if (a != v) throw std::invalid_argument("vertex index must be integral");
    return a;
  };

  if (kind == "vertex" && nums.size() == 1)
    return RealPureState::vertex(n, as_vertex(nums[0]));
  if (kind == "pair" && nums.size() == 2)
    return RealPureState::pair(n, as_vertex(nums[0]), as_vertex(nums[1]));
  if (kind == "spair" && nums.size() == 3)
    return RealPureState::s_pair(n, as_vertex(nums[0]), as_vertex(nums[1]),
                                 nums[2]);
  if (kind == "vec" && static_cast<int>(nums.size()) == n)
    return RealPureState::general(
        Eigen::Map<const Eigen::VectorXd>(nums.data(), nums.size()));
  throw std::invalid_argument("bad state spec: " + spec);
}

json certificate_to_json(const TransferCertificate& cert) {
  json j;
  j["verdict"] = to_string(cert.verdict);
  j["tau"] = cert.tau;
  j["gamma"] = {{"re", cert.gamma.real()}, {"im", cert.gamma.imag()}};
  j["gamma_arg_over_pi"] = std::arg(cert.gamma) / std::numbers::pi;
  j["sign_map"] = json::array();
  for (auto& [lambda, sign] : cert.sign_map)
    j["sign_map"].push_back({lambda, sign});
  j["residual"] = cert.residual;
  return j;
}

json permutation_to_json(const PermutationCertificate& cert) {
  json j;
  j["gamma"] = {{"re", cert.gamma.real()}, {"im", cert.gamma.imag()}};
  j["perm"] = cert.perm;
  j["order2"] = cert.order2;
  j["fixed_point_free"] = cert.fixed_point_free;
  j["residual"] = cert.residual;
  return j;
}

}  // namespace pairwalk
