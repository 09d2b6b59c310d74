#include "pairwalk/expm.hpp"

#include <cmath>
#include <complex>

namespace pairwalk {

Eigen::MatrixXcd series_propagator(const Eigen::MatrixXd& m, double t) {
  const int n = static_cast<int>(m.rows());
  Eigen::MatrixXcd b = std::complex<double>(0.0, t) * m.cast<std::complex<double>>();

  // Scale so the Taylor series converges quickly, square back afterwards.
  double norm = b.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  b /= std::pow(2.0, squarings);

  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd sum = term;
  for (int k = 1; k <= 40; ++k) {
    term = (term * b) / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-20) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

Eigen::VectorXcd series_evolve(const Eigen::MatrixXd& m, double t,
                               const Eigen::VectorXd& x) {
  return series_propagator(m, t) * x.cast<std::complex<double>>();
}

}  // namespace pairwalk
