#include "pairwalk/coherent.hpp"

#include <cmath>
#include <stdexcept>

namespace pairwalk {

bool is_walk_regular(const WeightedGraph& g, double rel_tol) {
  if (!g.is_unweighted())
    throw std::invalid_argument("walk regularity is defined for unweighted graphs");
  const int n = g.order();
  if (n <= 2) return true;
  Eigen::MatrixXd a = build_matrix(g, Model::Adjacency);
  Eigen::MatrixXd power = a;
  for (int k = 2; k < n; ++k) {
    power = power * a;
    double mean = power.trace() / n;
    for (int i = 0; i < n; ++i)
      if (std::abs(power(i, i) - mean) > rel_tol * std::max(1.0, std::abs(mean)))
        return false;
  }
  return true;
}

std::optional<PermutationCertificate> extract_permutation(
    const SpectralDecomposition& dec, double tau, double tol) {
  if (tau <= 0) throw std::invalid_argument("time must be positive");
  const int n = dec.dim();

  PermutationCertificate cert;
  cert.perm.assign(n, -1);
  std::vector<char> hit(n, 0);

  for (int col = 0; col < n; ++col) {
    Eigen::VectorXcd u = dec.evolve(tau, Eigen::VectorXd::Unit(n, col).eval());
    int row = 0;
    double best = 0.0;
    for (int i = 0; i < n; ++i)
      if (std::abs(u[i]) > best) {
        best = std::abs(u[i]);
        row = i;
      }
    if (std::abs(best - 1.0) > tol) return std::nullopt;
    if (hit[row]) return std::nullopt;
    hit[row] = 1;
    cert.perm[col] = row;

    std::complex<double> scalar = u[row] / best;
    if (col == 0) {
      cert.gamma = scalar;
    } else if (std::abs(scalar - cert.gamma) > tol) {
      return std::nullopt;
    }
    for (int i = 0; i < n; ++i) {
      std::complex<double> expect = (i == row) ? cert.gamma : 0.0;
      cert.residual = std::max(cert.residual, std::abs(u[i] - expect));
    }
    if (cert.residual > tol) return std::nullopt;
  }

  cert.order2 = true;
  cert.fixed_point_free = true;
  for (int i = 0; i < n; ++i) {
    if (cert.perm[cert.perm[i]] != i) cert.order2 = false;
    if (cert.perm[i] == i) cert.fixed_point_free = false;
  }
  return cert;
}

PermutationCertificate nearest_permutation(const SpectralDecomposition& dec,
                                           double tau) {
  const int n = dec.dim();
  PermutationCertificate cert;
  cert.perm.assign(n, -1);

  Eigen::MatrixXcd u(n, n);
  for (int col = 0; col < n; ++col)
    u.col(col) = dec.evolve(tau, Eigen::VectorXd::Unit(n, col).eval());
  for (int col = 0; col < n; ++col) {
    int row = 0;
    for (int i = 1; i < n; ++i)
      if (std::abs(u(i, col)) > std::abs(u(row, col))) row = i;
    cert.perm[col] = row;
    if (col == 0) cert.gamma = u(row, 0) / std::abs(u(row, 0));
  }
  for (int col = 0; col < n; ++col)
    for (int row = 0; row < n; ++row) {
      std::complex<double> expect =
          (row == cert.perm[col]) ? cert.gamma : std::complex<double>(0, 0);
      cert.residual = std::max(cert.residual, std::abs(u(row, col) - expect));
    }

  std::vector<char> seen(n, 0);
  bool bijection = true;
  for (int i = 0; i < n; ++i) {
    if (seen[cert.perm[i]]) bijection = false;
    seen[cert.perm[i]] = 1;
  }
  cert.order2 = bijection;
  cert.fixed_point_free = bijection;
  for (int i = 0; i < n && bijection; ++i) {
    if (cert.perm[cert.perm[i]] != i) cert.order2 = false;
    if (cert.perm[i] == i) cert.fixed_point_free = false;
  }
  return cert;
}

std::pair<RealPureState, RealPureState> s_pair_transfer(
    const PermutationCertificate& cert, int a, int b, double s) {
  const int n = static_cast<int>(cert.perm.size());
  if (a < 0 || a >= n || b < 0 || b >= n || a == b)
    throw std::invalid_argument("need two distinct vertices in range");
  if (!cert.order2 || !cert.fixed_point_free)
    throw std::invalid_argument(
        "certificate must be an order-two fixed-point-free permutation");
  if (cert.perm[a] == b)
    throw std::invalid_argument(
        "pair is swapped by the permutation and already admits vertex PST");
  return {RealPureState::s_pair(n, a, b, s),
          RealPureState::s_pair(n, cert.perm[a], cert.perm[b], s)};
}

}  // namespace pairwalk
