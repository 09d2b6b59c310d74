#include "pairwalk/instances.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pairwalk {

namespace {

double draw_weight(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.5, 2.5)(rng);
}

}  // namespace

WeightedGraph random_graph(int n, double p, std::mt19937_64& rng,
                           bool weighted, bool ensure_connected) {
  WeightedGraph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  if (ensure_connected) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 1; i < n; ++i) {
      int j = std::uniform_int_distribution<int>(0, i - 1)(rng);
      g.add_edge(order[i], order[j], weighted ? draw_weight(rng) : 1.0);
    }
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && coin(rng) < p)
        g.add_edge(u, v, weighted ? draw_weight(rng) : 1.0);
  return g;
}

WeightedGraph random_circulant(int n, std::mt19937_64& rng, bool weighted) {
  if (n < 2) throw std::invalid_argument("circulant needs at least 2 vertices");
  const int half = n / 2;
  std::vector<int> offsets;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  while (offsets.empty())
    for (int d = 1; d <= half; ++d)
      if (coin(rng) < 0.5) offsets.push_back(d);

  WeightedGraph g(n);
  for (int d : offsets) {
    double w = weighted ? draw_weight(rng) : 1.0;
    for (int u = 0; u < n; ++u) {
      int v = (u + d) % n;
      if (!g.has_edge(u, v)) g.add_edge(u, v, w);
    }
  }
  return g;
}

ClusterInstance random_cluster_instance(Model model, std::mt19937_64& rng,
                                        const ClusterInstanceOptions& opts) {
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  const int c = opts.forced_inner
                    ? opts.forced_inner->order()
                    : pick(opts.min_cluster, opts.max_cluster);
  const int s = pick(1, 3);
  const int extra = pick(0, 3);
  const int n = c + s + extra;

  // Random role assignment so cluster members land on arbitrary indices.
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  std::vector<int> members(idx.begin(), idx.begin() + c);
  std::vector<int> shared(idx.begin() + c, idx.begin() + c + s);
  std::vector<int> rest(idx.begin() + c + s, idx.end());
  std::sort(members.begin(), members.end());
  std::sort(shared.begin(), shared.end());

  WeightedGraph base(n);
  Eigen::VectorXd z(s);
  for (int k = 0; k < s; ++k) {
    z[k] = opts.weighted ? draw_weight(rng) : 1.0;
    for (int u : members) base.add_edge(u, shared[k], z[k]);
  }
  // Keep S u rest connected among themselves so the base is connected.
  std::vector<int> outside = shared;
  outside.insert(outside.end(), rest.begin(), rest.end());
  for (size_t i = 1; i < outside.size(); ++i) {
    size_t j = std::uniform_int_distribution<size_t>(0, i - 1)(rng);
    if (!base.has_edge(outside[i], outside[j]))
      base.add_edge(outside[i], outside[j],
                    opts.weighted ? draw_weight(rng) : 1.0);
  }
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (size_t i = 0; i < outside.size(); ++i)
    for (size_t j = i + 1; j < outside.size(); ++j)
      if (!base.has_edge(outside[i], outside[j]) && coin(rng) < 0.4)
        base.add_edge(outside[i], outside[j],
                      opts.weighted ? draw_weight(rng) : 1.0);

  ClusterInstance inst;
  inst.base = base;
  inst.cluster = Cluster{members, shared, z};
  if (opts.forced_inner) {
    inst.inner = *opts.forced_inner;
  } else if (model == Model::Laplacian) {
    // The all-ones vector is a Laplacian eigenvector of any graph.
    inst.inner = random_graph(c, 0.5, rng,
                              opts.weighted && !opts.unweighted_inner);
  } else {
    inst.inner = random_circulant(c, rng,
                                  opts.weighted && !opts.unweighted_inner);
  }
  inst.attached = attach(inst.base, inst.cluster, inst.inner);
  inst.z_sum = z.sum();
  return inst;
}

Eigen::VectorXd random_balanced_vector(int c, std::mt19937_64& rng) {
  if (c < 2) throw std::invalid_argument("need dimension at least 2");
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    Eigen::VectorXd v(c);
    for (int i = 0; i < c; ++i) v[i] = gauss(rng);
    v.array() -= v.mean();
    double norm = v.norm();
    if (norm > 1e-6) return v / norm;
  }
}

RealPureState lift_state(const ClusterInstance& inst,
                         const Eigen::VectorXd& on_cluster) {
  if (on_cluster.size() != static_cast<Eigen::Index>(inst.cluster.members.size()))
    throw std::invalid_argument("vector length must equal cluster size");
  Eigen::VectorXd full = Eigen::VectorXd::Zero(inst.base.order());
  for (Eigen::Index i = 0; i < on_cluster.size(); ++i)
    full[inst.cluster.members[i]] = on_cluster[i];
  return RealPureState::general(full);
}

}  // namespace pairwalk
