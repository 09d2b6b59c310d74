#ifndef PAIRWALK_INSTANCES_HPP
#define PAIRWALK_INSTANCES_HPP

#include <random>

#include "pairwalk/constructions.hpp"
#include "pairwalk/graph.hpp"
#include "pairwalk/states.hpp"

namespace pairwalk {

/// Erdos-Renyi style graph; with ensure_connected a random spanning tree
/// is laid down first. Weighted edges draw from [0.5, 2.5].
WeightedGraph random_graph(int n, double p, std::mt19937_64& rng,
                           bool weighted = false,
                           bool ensure_connected = false);

/// Random circulant on n vertices (nonempty offset set). Regular by
/// construction, so the all-ones vector is an eigenvector of every model;
/// weighted variants give each offset class its own weight.
WeightedGraph random_circulant(int n, std::mt19937_64& rng,
                               bool weighted = false);

/// A base graph with a planted cluster (C, S), an inner graph H on C with
/// the all-ones eigenvector for `model`, and the overlay G(H).
struct ClusterInstance {
  WeightedGraph base;
  Cluster cluster;
  WeightedGraph inner;
  WeightedGraph attached;
  double z_sum = 0.0;  // 1^T z
};

struct ClusterInstanceOptions {
  int min_cluster = 2;
  int max_cluster = 4;
  bool weighted = true;
  bool unweighted_inner = false;  // force H unweighted (complement suites)
  const WeightedGraph* forced_inner = nullptr;  // overrides H when set
};

ClusterInstance random_cluster_instance(Model model, std::mt19937_64& rng,
                                        const ClusterInstanceOptions& opts = {});

/// Unit vector orthogonal to the all-ones vector, dimension c >= 2.
Eigen::VectorXd random_balanced_vector(int c, std::mt19937_64& rng);

/// Embeds a vector living on the cluster coordinates into the full vertex
/// space of the instance (zero elsewhere).
RealPureState lift_state(const ClusterInstance& inst,
                         const Eigen::VectorXd& on_cluster);

}  // namespace pairwalk

#endif
