#ifndef PAIRWALK_EXPM_HPP
#define PAIRWALK_EXPM_HPP

#include <Eigen/Dense>

namespace pairwalk {

/// exp(i t M) summed directly as a scaled-and-squared Taylor series on the
/// dense matrix. Deliberately avoids any eigendecomposition so it can serve
/// as a second route against the spectral evolution.
Eigen::MatrixXcd series_propagator(const Eigen::MatrixXd& m, double t);

/// series_propagator(m, t) * x without exposing the full matrix.
Eigen::VectorXcd series_evolve(const Eigen::MatrixXd& m, double t,
                               const Eigen::VectorXd& x);

}  // namespace pairwalk

#endif
