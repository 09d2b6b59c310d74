#include "pairwalk/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace pairwalk {

WeightedGraph::WeightedGraph(int n) : n_(n) {
  if (n <= 0) throw std::invalid_argument("graph order must be positive");
}

WeightedGraph::WeightedGraph(int n, const std::vector<Edge>& edges,
                             std::vector<std::string> labels)
    : WeightedGraph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v, e.w);
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != n)
      throw std::invalid_argument("label list length must equal order");
    labels_ = std::move(labels);
  }
}

long long WeightedGraph::key(int u, int v) {
  if (u > v) std::swap(u, v);
  return static_cast<long long>(u) << 32 | static_cast<unsigned>(v);
}

void WeightedGraph::check_vertex(int u) const {
  if (u < 0 || u >= n_) throw std::invalid_argument("vertex out of range");
}

void WeightedGraph::add_edge(int u, int v, double w) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (!(w > 0.0)) throw std::invalid_argument("edge weight must be positive");
  if (u > v) std::swap(u, v);
  if (!lookup_.emplace(key(u, v), w).second)
    throw std::invalid_argument("duplicate edge");
  edges_.push_back({u, v, w});
}

bool WeightedGraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return lookup_.count(key(u, v)) > 0;
}

double WeightedGraph::weight(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  auto it = lookup_.find(key(u, v));
  return it == lookup_.end() ? 0.0 : it->second;
}

std::vector<int> WeightedGraph::neighbors(int u) const {
  check_vertex(u);
  std::vector<int> out;
  for (const Edge& e : edges_) {
    if (e.u == u) out.push_back(e.v);
    if (e.v == u) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double WeightedGraph::degree(int u) const {
  check_vertex(u);
  double d = 0.0;
  for (const Edge& e : edges_)
    if (e.u == u || e.v == u) d += e.w;
  return d;
}

bool WeightedGraph::is_unweighted() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.w == 1.0; });
}

bool WeightedGraph::is_regular(double tol) const {
  if (n_ == 0) return true;
  double d0 = degree(0);
  for (int u = 1; u < n_; ++u)
    if (std::abs(degree(u) - d0) > tol) return false;
  return true;
}

bool WeightedGraph::is_connected() const {
  if (n_ == 0) return false;
  std::vector<std::vector<int>> adj(n_);
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == n_;
}

int zeta(Model m) { return m == Model::Laplacian ? -1 : 1; }

int delta(Model m) { return m == Model::Adjacency ? 0 : 1; }

std::string to_string(Model m) {
  switch (m) {
    case Model::Adjacency:
      return "A";
    case Model::Laplacian:
      return "L";
    case Model::SignlessLaplacian:
      return "Q";
  }
  return "?";
}

Model parse_model(const std::string& name) {
  if (name == "A" || name == "a" || name == "adjacency")
    return Model::Adjacency;
  if (name == "L" || name == "l" || name == "laplacian")
    return Model::Laplacian;
  if (name == "Q" || name == "q" || name == "signless")
    return Model::SignlessLaplacian;
  throw std::invalid_argument("unknown model '" + name + "' (use A, L or Q)");
}

Eigen::MatrixXd build_matrix(const WeightedGraph& g, Model m) {
  const int n = g.order();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  const double sign = (m == Model::Laplacian) ? -1.0 : 1.0;
  for (const Edge& e : g.edges()) {
    if (m != Model::Adjacency) {
      out(e.u, e.u) += e.w;
      out(e.v, e.v) += e.w;
    }
    out(e.u, e.v) = sign * e.w;
    out(e.v, e.u) = sign * e.w;
  }
  return out;
}

namespace {

bool weights_match(const std::vector<double>& a, const std::vector<double>& b,
                   double rel_tol) {
  for (size_t i = 0; i < a.size(); ++i) {
    double scale = std::max({1.0, std::abs(a[i]), std::abs(b[i])});
    if (std::abs(a[i] - b[i]) > rel_tol * scale) return false;
  }
  return true;
}

}  // namespace

std::vector<Cluster> detect_clusters(const WeightedGraph& g, double rel_tol) {
  const int n = g.order();
  // Weighted neighborhood of each vertex, sorted by neighbor index.
  std::vector<std::vector<int>> nbrs(n);
  std::vector<std::vector<double>> wts(n);
  for (int u = 0; u < n; ++u) {
    nbrs[u] = g.neighbors(u);
    wts[u].reserve(nbrs[u].size());
    for (int v : nbrs[u]) wts[u].push_back(g.weight(u, v));
  }

  // Bucket by neighbor index set, then split buckets on weight mismatch.
  std::map<std::vector<int>, std::vector<int>> buckets;
  for (int u = 0; u < n; ++u) buckets[nbrs[u]].push_back(u);

  std::vector<Cluster> out;
  for (auto& [shared, members] : buckets) {
    std::vector<std::vector<int>> groups;
    for (int u : members) {
      bool placed = false;
      for (auto& grp : groups)
        if (weights_match(wts[grp.front()], wts[u], rel_tol)) {
          grp.push_back(u);
          placed = true;
          break;
        }
      if (!placed) groups.push_back({u});
    }
    for (auto& grp : groups) {
      if (grp.size() < 2) continue;
      Cluster c;
      c.members = grp;
      c.shared = shared;
      c.weights = Eigen::Map<const Eigen::VectorXd>(wts[grp.front()].data(),
                                                    wts[grp.front()].size());
      out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), [](const Cluster& a, const Cluster& b) {
    return a.members.front() < b.members.front();
  });
  return out;
}

bool validate_cluster(const WeightedGraph& g, const Cluster& c,
                      double rel_tol) {
  if (c.members.size() < 2) return false;
  if (c.weights.size() != static_cast<Eigen::Index>(c.shared.size()))
    return false;
  for (size_t i = 0; i < c.members.size(); ++i)
    for (size_t j = i + 1; j < c.members.size(); ++j)
      if (g.has_edge(c.members[i], c.members[j])) return false;
  for (int u : c.members) {
    if (g.neighbors(u) != c.shared) return false;
    for (size_t k = 0; k < c.shared.size(); ++k) {
      double w = g.weight(u, c.shared[k]);
      double scale = std::max({1.0, std::abs(w), std::abs(c.weights[k])});
      if (std::abs(w - c.weights[k]) > rel_tol * scale) return false;
    }
  }
  return true;
}

WeightedGraph empty_graph(int n) { return WeightedGraph(n); }

WeightedGraph complete(int n) {
  WeightedGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

WeightedGraph path(int n) {
  WeightedGraph g(n);
  for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

WeightedGraph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  WeightedGraph g(n);
  for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

WeightedGraph complete_bipartite(int m, int n) {
  WeightedGraph g(m + n);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
  return g;
}

}  // namespace pairwalk
