#ifndef PAIRWALK_SPECTRAL_HPP
#define PAIRWALK_SPECTRAL_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "pairwalk/graph.hpp"
#include "pairwalk/states.hpp"

namespace pairwalk {

/// Distinct eigenvalues of a symmetric Hamiltonian together with the
/// orthogonal projections onto their eigenspaces. Immutable once built.
class SpectralDecomposition {
 public:
  /// Groups eigenvalues closer than grouping_tol * max(1, spectral radius)
  /// into one eigenspace. Throws on non-symmetric input.
  SpectralDecomposition(const Eigen::MatrixXd& matrix, Model model,
                        double grouping_tol = 1e-8);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(eigenvalues_.size()); }
  Model model() const { return model_; }
  double scale() const { return scale_; }  // max |eigenvalue|

  double eigenvalue(int k) const { return eigenvalues_[k]; }
  int multiplicity(int k) const { return multiplicities_[k]; }
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }
  const Eigen::MatrixXd& projection(int k) const { return projections_[k]; }

  /// U(t) x = sum_k exp(i t lambda_k) E_k x.
  Eigen::VectorXcd evolve(double t, const Eigen::VectorXd& x) const;
  Eigen::VectorXcd evolve(double t, const Eigen::VectorXcd& x) const;
  Eigen::VectorXcd evolve(double t, const RealPureState& x) const;

  /// y^T U(t) x.
  std::complex<double> overlap(double t, const RealPureState& x,
                               const RealPureState& y) const;

 private:
  int dim_;
  Model model_;
  double scale_;
  std::vector<double> eigenvalues_;   // strictly increasing
  std::vector<int> multiplicities_;
  std::vector<Eigen::MatrixXd> projections_;
};

SpectralDecomposition eigendecompose(const Eigen::MatrixXd& matrix,
                                     Model model, double grouping_tol = 1e-8);
SpectralDecomposition decompose(const WeightedGraph& g, Model model,
                                double grouping_tol = 1e-8);

/// Eigenvalue support of a state: indices with ||E_k x|| above threshold.
/// Entries whose norm falls within a decade of the threshold are flagged
/// as borderline rather than silently classified.
struct Support {
  std::vector<int> indices;
  std::vector<double> norms;
  std::vector<int> borderline;

  bool contains(int k) const;
};

Support support(const SpectralDecomposition& dec, const RealPureState& x,
                double threshold = 1e-8);

/// True iff the support is a single eigenvalue (x is an eigenvector).
bool is_fixed(const SpectralDecomposition& dec, const RealPureState& x,
              double threshold = 1e-8);

/// |y^T U(t) x|.
double fidelity(const SpectralDecomposition& dec, double t,
                const RealPureState& x, const RealPureState& y);

/// Scalar expansion of t -> y^T U(t) x; evaluating one time point costs
/// O(#eigenvalues), which keeps long time sweeps cheap.
class OverlapSeries {
 public:
  OverlapSeries(const SpectralDecomposition& dec, const RealPureState& x,
                const RealPureState& y);

  std::complex<double> overlap(double t) const;
  double fidelity(double t) const { return std::abs(overlap(t)); }

 private:
  std::vector<double> eigenvalues_;
  std::vector<double> coefficients_;  // y^T E_k x, real by symmetry
};

}  // namespace pairwalk

#endif
