#ifndef PAIRWALK_STATES_HPP
#define PAIRWALK_STATES_HPP

#include <Eigen/Dense>

#include "pairwalk/graph.hpp"

namespace pairwalk {

/// Unit real vector on the vertex space of a graph.
class RealPureState {
 public:
  enum class Kind { Vertex, Pair, SPair, General };

  static RealPureState vertex(int n, int a);
  /// (e_a - e_b) / sqrt(2)
  static RealPureState pair(int n, int a, int b);
  /// (e_a + s e_b) / sqrt(1 + s^2), s != 0
  static RealPureState s_pair(int n, int a, int b, double s);
  /// Normalizes v; throws if v is (near) zero.
  static RealPureState general(const Eigen::VectorXd& v);

  const Eigen::VectorXd& vec() const { return vec_; }
  Kind kind() const { return kind_; }
  int dim() const { return static_cast<int>(vec_.size()); }

 private:
  RealPureState(Eigen::VectorXd v, Kind k) : vec_(std::move(v)), kind_(k) {}
  Eigen::VectorXd vec_;
  Kind kind_;
};

RealPureState vertex_state(const WeightedGraph& g, int a);
RealPureState pair_state(const WeightedGraph& g, int a, int b);
RealPureState s_pair_state(const WeightedGraph& g, int a, int b, double s);

}  // namespace pairwalk

#endif
