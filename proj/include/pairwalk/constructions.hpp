#ifndef PAIRWALK_CONSTRUCTIONS_HPP
#define PAIRWALK_CONSTRUCTIONS_HPP

#include <vector>

#include "pairwalk/graph.hpp"

namespace pairwalk {

/// Overlay description: a graph `inner` drawn on the cluster set of `base`.
/// `embedding[i]` is the base vertex carrying inner vertex i; when empty,
/// inner vertex i maps to cluster.members[i].
struct AttachmentPlan {
  WeightedGraph base;
  Cluster cluster;
  WeightedGraph inner;
  std::vector<int> embedding;
};

/// Union of base and inner edge sets with weights preserved.
WeightedGraph attach(const AttachmentPlan& plan);
WeightedGraph attach(const WeightedGraph& base, const Cluster& cluster,
                     const WeightedGraph& inner);

/// Standard complement; rejects weighted input.
WeightedGraph complement(const WeightedGraph& g);

/// Join of two graphs. When `cross_weights` (indexed by V(g)) is given,
/// every join edge incident to base vertex u carries cross_weights[u];
/// otherwise join edges have weight 1.
WeightedGraph join(const WeightedGraph& g, const WeightedGraph& h,
                   const std::vector<double>& cross_weights = {});

/// H_1 v H_2 v ... v H_k: consecutive parts joined, all join edges weight 1.
WeightedGraph sequential_join(const std::vector<WeightedGraph>& parts);

/// Flat index of product vertex (i, j), first factor major.
inline int product_index(int i, int j, int n2) { return i * n2 + j; }

/// Cartesian product; satisfies M(g1 x g2) = M(g1) (x) I + I (x) M(g2)
/// for every model under the product_index ordering.
WeightedGraph cartesian(const WeightedGraph& g1, const WeightedGraph& g2);

/// Vertex of the i-th H-copy in a corona over a base of order n: the base
/// occupies 0..n-1 and copy i occupies n + i*c .. n + i*c + c - 1.
inline int corona_copy_index(int n, int c, int i, int j) {
  return n + i * c + j;
}

/// One copy of h per vertex of g, joined to that vertex.
WeightedGraph vertex_corona(const WeightedGraph& g, const WeightedGraph& h);
/// One copy of h per edge of g (in g.edges() order), joined to both ends.
WeightedGraph edge_corona(const WeightedGraph& g, const WeightedGraph& h);
/// One copy of h per vertex of g, joined to all neighbors of that vertex.
WeightedGraph neighborhood_corona(const WeightedGraph& g,
                                  const WeightedGraph& h);

/// Blow-up of g with independent sets of size c, cluster j overlaid with
/// inner[j]. Slot (i, j) sits at index i*c + j. With all inner graphs equal
/// this is the lexicographic product g[h].
WeightedGraph blow_up(const WeightedGraph& g, int c,
                      const std::vector<WeightedGraph>& inner);
WeightedGraph lexicographic(const WeightedGraph& g, const WeightedGraph& h);

/// K_n with matching edges {0,1}, {2,3}, ..., {2m-2, 2m-1} removed.
WeightedGraph complete_minus_matching(int n, int m);
/// K_n with the cycle 0-1-...-(2^k - 1)-0 removed.
WeightedGraph complete_minus_cycle(int n, int k);

}  // namespace pairwalk

#endif
