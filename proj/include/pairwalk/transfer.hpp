#ifndef PAIRWALK_TRANSFER_HPP
#define PAIRWALK_TRANSFER_HPP

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "pairwalk/spectral.hpp"

namespace pairwalk {

enum class Verdict {
  Pst,
  Periodic,
  NotStronglyCospectral,
  PhaseMismatch,
  Inconclusive,
};

std::string to_string(Verdict v);

/// Sign pattern sigma_k in E_k x = sigma_k E_k y over the common support.
struct SignMap {
  std::vector<int> support;  // eigenvalue indices into the decomposition
  std::vector<int> signs;    // +1 / -1, parallel to support
};

struct TransferCertificate {
  Verdict verdict = Verdict::Inconclusive;
  double tau = 0.0;
  std::complex<double> gamma{1.0, 0.0};
  std::vector<std::pair<double, int>> sign_map;  // (eigenvalue, sign)
  double residual = 1.0;

  bool positive() const {
    return verdict == Verdict::Pst || verdict == Verdict::Periodic;
  }
};

/// Checks E_k x = +/- E_k y on every support eigenvalue. Returns the sign
/// map on success, nothing when the states are not strongly cospectral or
/// either is fixed. Throws when x and y are parallel.
std::optional<SignMap> strong_cospectral(const SpectralDecomposition& dec,
                                         const RealPureState& x,
                                         const RealPureState& y,
                                         double tol = 1e-8);

/// Tests |y^T U(tau) x| >= 1 - tol. Self-transfer (x parallel to y) is
/// reported as Periodic rather than Pst.
TransferCertificate check_pst_at(const SpectralDecomposition& dec,
                                 const RealPureState& x,
                                 const RealPureState& y, double tau,
                                 double tol = 1e-9);

struct SearchOptions {
  double window = 4.0 * 3.14159265358979323846;
  double tol_exact = 1e-9;    // integer-gap candidate branch
  double tol_numeric = 1e-7;  // grid + refinement branch
  int grid_per_period = 10000;
  double dead_zone = 1e-6;    // smallest admissible self-transfer time
};

/// Searches (0, window] for perfect state transfer times. Returns all
/// certified times sorted ascending, or a single negative certificate.
/// Parallel states are routed to the periodicity search.
std::vector<TransferCertificate> find_pst(const SpectralDecomposition& dec,
                                          const RealPureState& x,
                                          const RealPureState& y,
                                          const SearchOptions& opts = {});

/// Earliest periodicity time of x past the dead zone, with its phase.
std::optional<std::pair<double, std::complex<double>>> is_periodic(
    const SpectralDecomposition& dec, const RealPureState& x,
    const SearchOptions& opts = {});

/// Window minimum of |x^T U(t) x|: an upper bound on the infimum over
/// (0, T], refined locally around the best grid point.
struct SedentaryEstimate {
  double window;
  int grid;
  double estimate;
  double argmin;
};

SedentaryEstimate sedentariness(const SpectralDecomposition& dec,
                                const RealPureState& x, double window,
                                int grid = 20000);

/// Sampled evidence for pretty good state transfer. Never a proof: the
/// record reports the best fidelity seen, not a verdict.
struct PgstEvidence {
  double sup_fidelity = 0.0;
  std::vector<double> achieving_times;
  double window = 0.0;
  long long samples = 0;
};

/// Stratified uniform + random sampling of (0, t_max] with local
/// refinement at the best points. Passing the previous record keeps the
/// estimate nondecreasing as the window grows.
PgstEvidence pgst_evidence(const SpectralDecomposition& dec,
                           const RealPureState& x, const RealPureState& y,
                           double t_max, long long samples,
                           unsigned long long seed = 0,
                           const PgstEvidence* prev = nullptr);

}  // namespace pairwalk

#endif
