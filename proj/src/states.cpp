#include "pairwalk/states.hpp"

#include <cmath>
#include <stdexcept>

namespace pairwalk {

namespace {

void check_distinct(int n, int a, int b) {
  if (a < 0 || a >= n || b < 0 || b >= n)
    throw std::invalid_argument("vertex out of range");
  if (a == b) throw std::invalid_argument("vertices must be distinct");
}

}  // namespace

RealPureState RealPureState::vertex(int n, int a) {
  if (a < 0 || a >= n) throw std::invalid_argument("vertex out of range");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  v[a] = 1.0;
  return RealPureState(std::move(v), Kind::Vertex);
}

RealPureState RealPureState::pair(int n, int a, int b) {
  check_distinct(n, a, b);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  const double r = 1.0 / std::sqrt(2.0);
  v[a] = r;
  v[b] = -r;
  return RealPureState(std::move(v), Kind::Pair);
}

RealPureState RealPureState::s_pair(int n, int a, int b, double s) {
  check_distinct(n, a, b);
  if (s == 0.0) throw std::invalid_argument("s must be nonzero");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  const double r = 1.0 / std::sqrt(1.0 + s * s);
  v[a] = r;
  v[b] = s * r;
  return RealPureState(std::move(v), Kind::SPair);
}

RealPureState RealPureState::general(const Eigen::VectorXd& v) {
  double norm = v.norm();
  if (norm < 1e-12) throw std::invalid_argument("state vector is zero");
  return RealPureState(v / norm, Kind::General);
}

RealPureState vertex_state(const WeightedGraph& g, int a) {
  return RealPureState::vertex(g.order(), a);
}

RealPureState pair_state(const WeightedGraph& g, int a, int b) {
  return RealPureState::pair(g.order(), a, b);
}

RealPureState s_pair_state(const WeightedGraph& g, int a, int b, double s) {
  return RealPureState::s_pair(g.order(), a, b, s);
}

}  // namespace pairwalk
