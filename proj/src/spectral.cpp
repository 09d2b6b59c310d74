#include "pairwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pairwalk {

SpectralDecomposition::SpectralDecomposition(const Eigen::MatrixXd& matrix,
                                             Model model, double grouping_tol)
    : dim_(static_cast<int>(matrix.rows())), model_(model) {
  if (matrix.rows() != matrix.cols())
    throw std::invalid_argument("matrix must be square");
  double asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * std::max(1.0, matrix.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("matrix must be symmetric");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed to converge");

  const Eigen::VectorXd& vals = solver.eigenvalues();  // ascending
  const Eigen::MatrixXd& vecs = solver.eigenvectors();
  scale_ = std::max(std::abs(vals[0]), std::abs(vals[dim_ - 1]));
  const double gap = grouping_tol * std::max(1.0, scale_);

  int start = 0;
  for (int k = 1; k <= dim_; ++k) {
    if (k == dim_ || vals[k] - vals[k - 1] >= gap) {
      int count = k - start;
      Eigen::MatrixXd basis = vecs.middleCols(start, count);
      eigenvalues_.push_back(vals.segment(start, count).mean());
      multiplicities_.push_back(count);
      projections_.push_back(basis * basis.transpose());
      start = k;
    }
  }
}

Eigen::VectorXcd SpectralDecomposition::evolve(double t,
                                               const Eigen::VectorXd& x) const {
  return evolve(t, x.cast<std::complex<double>>().eval());
}

Eigen::VectorXcd SpectralDecomposition::evolve(
    double t, const Eigen::VectorXcd& x) const {
  if (x.size() != dim_) throw std::invalid_argument("dimension mismatch");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim_);
  for (int k = 0; k < size(); ++k) {
    std::complex<double> phase = std::polar(1.0, t * eigenvalues_[k]);
    out += phase * (projections_[k] * x);
  }
  return out;
}

Eigen::VectorXcd SpectralDecomposition::evolve(double t,
                                               const RealPureState& x) const {
  return evolve(t, x.vec());
}

std::complex<double> SpectralDecomposition::overlap(
    double t, const RealPureState& x, const RealPureState& y) const {
  return OverlapSeries(*this, x, y).overlap(t);
}

SpectralDecomposition eigendecompose(const Eigen::MatrixXd& matrix,
                                     Model model, double grouping_tol) {
  return SpectralDecomposition(matrix, model, grouping_tol);
}

SpectralDecomposition decompose(const WeightedGraph& g, Model model,
                                double grouping_tol) {
  return SpectralDecomposition(build_matrix(g, model), model, grouping_tol);
}

bool Support::contains(int k) const {
  return std::find(indices.begin(), indices.end(), k) != indices.end();
}

Support support(const SpectralDecomposition& dec, const RealPureState& x,
                double threshold) {
  if (x.dim() != dec.dim()) throw std::invalid_argument("dimension mismatch");
  Support out;
  for (int k = 0; k < dec.size(); ++k) {
    double norm = (dec.projection(k) * x.vec()).norm();
    if (norm > threshold) {
      out.indices.push_back(k);
      out.norms.push_back(norm);
    }
    if (norm > threshold / 10.0 && norm < threshold * 10.0)
      out.borderline.push_back(k);
  }
  return out;
}

bool is_fixed(const SpectralDecomposition& dec, const RealPureState& x,
              double threshold) {
  return support(dec, x, threshold).indices.size() == 1;
}

double fidelity(const SpectralDecomposition& dec, double t,
                const RealPureState& x, const RealPureState& y) {
  return std::abs(dec.overlap(t, x, y));
}

OverlapSeries::OverlapSeries(const SpectralDecomposition& dec,
                             const RealPureState& x, const RealPureState& y) {
  if (x.dim() != dec.dim() || y.dim() != dec.dim())
    throw std::invalid_argument("dimension mismatch");
  for (int k = 0; k < dec.size(); ++k) {
    double c = y.vec().dot(dec.projection(k) * x.vec());
    if (c != 0.0) {
      eigenvalues_.push_back(dec.eigenvalue(k));
      coefficients_.push_back(c);
    }
  }
}

std::complex<double> OverlapSeries::overlap(double t) const {
  std::complex<double> sum = 0.0;
  for (size_t k = 0; k < eigenvalues_.size(); ++k)
    sum += coefficients_[k] * std::polar(1.0, t * eigenvalues_[k]);
  return sum;
}

}  // namespace pairwalk
