#ifndef PAIRWALK_COHERENT_HPP
#define PAIRWALK_COHERENT_HPP

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "pairwalk/spectral.hpp"
#include "pairwalk/states.hpp"

namespace pairwalk {

/// True iff every power A^k (k = 2..n-1) has constant diagonal. A cheap
/// necessary surrogate for membership in a homogeneous coherent algebra;
/// the permutation extraction below is valid regardless.
bool is_walk_regular(const WeightedGraph& g, double rel_tol = 1e-9);

/// Witness that U(tau) = gamma * P for a permutation matrix P.
struct PermutationCertificate {
  std::complex<double> gamma{1.0, 0.0};
  std::vector<int> perm;
  bool order2 = false;
  bool fixed_point_free = false;
  double residual = 0.0;  // max entry deviation of U(tau) from gamma P
};

/// Reconstructs U(tau) column by column and checks whether it is a common
/// unit scalar times a permutation matrix, within `tol` per entry.
std::optional<PermutationCertificate> extract_permutation(
    const SpectralDecomposition& dec, double tau, double tol = 1e-7);

/// Report-only variant for near-permutation structure (e.g. at sampled
/// PGST evidence times): always returns the closest column assignment and
/// its residual, never a verdict. The assignment may fail to be a
/// bijection, in which case both flags are false.
PermutationCertificate nearest_permutation(const SpectralDecomposition& dec,
                                           double tau);

/// Source and target s-pair states of the permutation transfer: maps
/// (a, b) to (perm(a), perm(b)). Requires an order-two fixed-point-free
/// permutation and a pair that is not itself swapped.
std::pair<RealPureState, RealPureState> s_pair_transfer(
    const PermutationCertificate& cert, int a, int b, double s);

}  // namespace pairwalk

#endif
