#ifndef PAIRWALK_GRAPH_HPP
#define PAIRWALK_GRAPH_HPP

#include <Eigen/Dense>
#include <string>
#include <unordered_map>
#include <vector>

namespace pairwalk {

/// Undirected edge with positive weight, stored with u < v.
struct Edge {
  int u;
  int v;
  double w;
};

/// Simple weighted undirected graph: no self-loops, no parallel edges,
/// strictly positive weights. Vertices are 0-based.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(int n);
  WeightedGraph(int n, const std::vector<Edge>& edges,
                std::vector<std::string> labels = {});

  int order() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Throws on self-loops, duplicate pairs, non-positive weights,
  /// or out-of-range endpoints.
  void add_edge(int u, int v, double w = 1.0);

  bool has_edge(int u, int v) const;
  double weight(int u, int v) const;  // 0 when not adjacent

  /// Sorted neighbor list of u.
  std::vector<int> neighbors(int u) const;
  /// Weighted degree (sum of incident edge weights).
  double degree(int u) const;
  bool is_unweighted() const;  // all weights exactly 1
  bool is_regular(double tol = 1e-12) const;
  bool is_connected() const;

 private:
  static long long key(int u, int v);
  void check_vertex(int u) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::unordered_map<long long, double> lookup_;
};

/// Walk Hamiltonian: adjacency A, Laplacian L = D - A, signless Q = D + A.
enum class Model { Adjacency, Laplacian, SignlessLaplacian };

/// Sign of the off-diagonal cluster block: -1 for L, +1 for A and Q.
int zeta(Model m);
/// Diagonal contribution switch: 0 for A, 1 for L and Q.
int delta(Model m);

std::string to_string(Model m);
Model parse_model(const std::string& name);  // "A" | "L" | "Q"

constexpr Model kAllModels[] = {Model::Adjacency, Model::Laplacian,
                                Model::SignlessLaplacian};

/// Dense symmetric Hamiltonian of the requested model.
Eigen::MatrixXd build_matrix(const WeightedGraph& g, Model m);

/// A set C of pairwise non-adjacent vertices sharing the exact weighted
/// neighborhood S; z holds the common weight toward each vertex of S.
struct Cluster {
  std::vector<int> members;  // C, sorted ascending, |C| >= 2
  std::vector<int> shared;   // S, sorted ascending
  Eigen::VectorXd weights;   // z, indexed parallel to `shared`
};

/// All maximal false-twin classes, ordered by smallest member. Weight
/// equality uses relative tolerance `rel_tol`.
std::vector<Cluster> detect_clusters(const WeightedGraph& g,
                                     double rel_tol = 1e-9);

/// Re-checks the cluster definition against g.
bool validate_cluster(const WeightedGraph& g, const Cluster& c,
                      double rel_tol = 1e-9);

// Standard unweighted families.
WeightedGraph empty_graph(int n);
WeightedGraph complete(int n);
WeightedGraph path(int n);
WeightedGraph cycle(int n);
WeightedGraph complete_bipartite(int m, int n);

}  // namespace pairwalk

#endif
