#include "pairwalk/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace pairwalk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kParallelTol = 1e-9;

bool parallel(const RealPureState& x, const RealPureState& y) {
  return std::abs(x.vec().dot(y.vec())) > 1.0 - kParallelTol;
}

std::vector<std::pair<double, int>> sign_pairs(
    const SpectralDecomposition& dec, const SignMap& sm) {
  std::vector<std::pair<double, int>> out;
  out.reserve(sm.support.size());
  for (size_t i = 0; i < sm.support.size(); ++i)
    out.emplace_back(dec.eigenvalue(sm.support[i]), sm.signs[i]);
  return out;
}

// Signs recovered from the overlaps y^T E_k x; for strongly cospectral
// states this equals the sign map. The cutoff sits above eigensolver
// noise and below any genuine paired support component.
std::vector<std::pair<double, int>> overlap_signs(
    const SpectralDecomposition& dec, const RealPureState& x,
    const RealPureState& y, double threshold = 1e-10) {
  std::vector<std::pair<double, int>> out;
  for (int k = 0; k < dec.size(); ++k) {
    double c = y.vec().dot(dec.projection(k) * x.vec());
    if (std::abs(c) > threshold)
      out.emplace_back(dec.eigenvalue(k), c > 0 ? 1 : -1);
  }
  return out;
}

// Golden-section minimization of f on [lo, hi] down to dt resolution.
template <typename F>
double golden_min(F&& f, double lo, double hi, double dt) {
  const double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > dt) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// Candidate PST times when all support eigenvalue gaps are integers:
// any transfer time satisfies tau * gap in pi * Z, so tau = pi a/b with b
// dividing the gcd of the gaps. Enumerates those up to `window`.
std::optional<std::vector<double>> integer_gap_candidates(
    const std::vector<double>& lambdas, double window, double tol = 1e-8) {
  long long g = 0;
  for (size_t k = 1; k < lambdas.size(); ++k) {
    double gap = lambdas[k] - lambdas[0];
    double rounded = std::round(gap);
    if (std::abs(gap - rounded) > tol) return std::nullopt;
    g = std::gcd(g, static_cast<long long>(std::llabs(
                        static_cast<long long>(rounded))));
  }
  if (g == 0) return std::nullopt;  // single eigenvalue: fixed state

  std::set<double> times;
  for (long long b = 1; b <= g; ++b) {
    if (g % b != 0) continue;
    long long max_a = static_cast<long long>(window * b / kPi + 1e-9);
    for (long long a = 1; a <= max_a; ++a)
      if (std::gcd(a, b) == 1) times.insert(kPi * a / b);
  }
  return std::vector<double>(times.begin(), times.end());
}

TransferCertificate make_positive(const SpectralDecomposition& dec,
                                  const RealPureState& x,
                                  const RealPureState& y, Verdict verdict,
                                  double tau, std::complex<double> amp,
                                  double residual) {
  TransferCertificate cert;
  cert.verdict = verdict;
  cert.tau = tau;
  cert.gamma = amp / std::abs(amp);
  cert.residual = residual;
  cert.sign_map = overlap_signs(dec, x, y);
  return cert;
}

struct SearchProblem {
  const SpectralDecomposition& dec;
  const RealPureState& x;
  const RealPureState& y;
  OverlapSeries series;
  Verdict positive_verdict;
  double min_time;

  SearchProblem(const SpectralDecomposition& d, const RealPureState& a,
                const RealPureState& b, Verdict v, double min_t)
      : dec(d), x(a), y(b), series(d, a, b), positive_verdict(v),
        min_time(min_t) {}
};

std::vector<TransferCertificate> search_times(
    const SearchProblem& prob, const std::vector<double>& support_lambdas,
    const SearchOptions& opts) {
  std::vector<TransferCertificate> found;
  double best_resid = 1.0, best_tau = 0.0;
  std::complex<double> best_amp = 0.0;

  auto consider = [&](double tau, double tol) {
    if (tau < prob.min_time || tau > opts.window + 1e-12) return;
    std::complex<double> amp = prob.series.overlap(tau);
    double resid = 1.0 - std::abs(amp);
    if (resid < best_resid) {
      best_resid = resid;
      best_tau = tau;
      best_amp = amp;
    }
    if (resid <= tol) {
      for (const TransferCertificate& c : found)
        if (std::abs(c.tau - tau) < 1e-9) return;
      found.push_back(make_positive(prob.dec, prob.x, prob.y,
                                    prob.positive_verdict, tau, amp, resid));
    }
  };

  auto exact = integer_gap_candidates(support_lambdas, opts.window);
  if (exact) {
    for (double tau : *exact) consider(tau, opts.tol_exact);
  } else {
    // Grid scan sized to the slowest beat frequency, then local refinement
    // of every grid-local minimum that comes close.
    double min_gap = std::numeric_limits<double>::infinity();
    for (size_t k = 1; k < support_lambdas.size(); ++k)
      min_gap = std::min(min_gap, support_lambdas[k] - support_lambdas[k - 1]);
    double period = 2.0 * kPi / min_gap;
    double periods = std::max(1.0, std::ceil(opts.window / period));
    long long steps = static_cast<long long>(
        std::min(2e6, static_cast<double>(opts.grid_per_period) * periods));
    double h = opts.window / static_cast<double>(steps);

    auto infid = [&](double t) { return 1.0 - prob.series.fidelity(t); };
    std::vector<double> f(steps + 1, 1.0);
    for (long long j = 1; j <= steps; ++j) f[j] = infid(j * h);
    for (long long j = 1; j <= steps; ++j) {
      bool local_min = f[j] <= f[j - 1] && (j == steps || f[j] <= f[j + 1]);
      if (!local_min || f[j] > 1e-3) continue;
      double t = golden_min(infid, (j - 1) * h, std::min((j + 1) * h,
                                                         opts.window),
                            1e-12);
      consider(t, opts.tol_numeric);
    }
  }

  if (found.empty()) {
    TransferCertificate cert;
    cert.verdict = exact ? Verdict::PhaseMismatch : Verdict::Inconclusive;
    cert.tau = best_tau;
    if (std::abs(best_amp) > 0) cert.gamma = best_amp / std::abs(best_amp);
    cert.residual = best_resid;
    return {cert};
  }
  std::sort(found.begin(), found.end(),
            [](const TransferCertificate& a, const TransferCertificate& b) {
              return a.tau < b.tau;
            });
  return found;
}

std::vector<TransferCertificate> periodicity_search(
    const SpectralDecomposition& dec, const RealPureState& x,
    const SearchOptions& opts) {
  Support sup = support(dec, x);
  if (sup.indices.size() == 1) {
    // Eigenvector: periodic at every time; report the first grid time.
    double tau = std::max(opts.dead_zone,
                          opts.window / opts.grid_per_period);
    double lambda = dec.eigenvalue(sup.indices.front());
    TransferCertificate cert;
    cert.verdict = Verdict::Periodic;
    cert.tau = tau;
    cert.gamma = std::polar(1.0, tau * lambda);
    cert.residual = 0.0;
    cert.sign_map = {{lambda, 1}};
    return {cert};
  }
  std::vector<double> lambdas;
  for (int k : sup.indices) lambdas.push_back(dec.eigenvalue(k));
  SearchProblem prob(dec, x, x, Verdict::Periodic, opts.dead_zone);
  return search_times(prob, lambdas, opts);
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pst:
      return "PST";
    case Verdict::Periodic:
      return "periodic";
    case Verdict::NotStronglyCospectral:
      return "not-strongly-cospectral";
    case Verdict::PhaseMismatch:
      return "phase-mismatch";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::optional<SignMap> strong_cospectral(const SpectralDecomposition& dec,
                                         const RealPureState& x,
                                         const RealPureState& y, double tol) {
  if (x.dim() != dec.dim() || y.dim() != dec.dim())
    throw std::invalid_argument("dimension mismatch");
  if (parallel(x, y))
    throw std::invalid_argument(
        "strong cospectrality needs linearly independent states");

  Support sx = support(dec, x);
  Support sy = support(dec, y);
  if (sx.indices.size() <= 1 || sy.indices.size() <= 1)
    return std::nullopt;  // fixed states are never strongly cospectral

  std::set<int> union_idx(sx.indices.begin(), sx.indices.end());
  union_idx.insert(sy.indices.begin(), sy.indices.end());

  SignMap sm;
  for (int k : union_idx) {
    Eigen::VectorXd ex = dec.projection(k) * x.vec();
    Eigen::VectorXd ey = dec.projection(k) * y.vec();
    double plus = (ex - ey).norm();
    double minus = (ex + ey).norm();
    if (std::min(plus, minus) > tol) return std::nullopt;
    sm.support.push_back(k);
    sm.signs.push_back(plus <= minus ? 1 : -1);
  }
  return sm;
}

TransferCertificate check_pst_at(const SpectralDecomposition& dec,
                                 const RealPureState& x,
                                 const RealPureState& y, double tau,
                                 double tol) {
  std::complex<double> amp = dec.overlap(tau, x, y);
  double resid = 1.0 - std::abs(amp);
  if (resid <= tol) {
    Verdict v = parallel(x, y) ? Verdict::Periodic : Verdict::Pst;
    return make_positive(dec, x, y, v, tau, amp, resid);
  }
  TransferCertificate cert;
  cert.verdict = Verdict::Inconclusive;
  cert.tau = tau;
  if (std::abs(amp) > 0) cert.gamma = amp / std::abs(amp);
  cert.residual = resid;
  return cert;
}

std::vector<TransferCertificate> find_pst(const SpectralDecomposition& dec,
                                          const RealPureState& x,
                                          const RealPureState& y,
                                          const SearchOptions& opts) {
  if (parallel(x, y)) return periodicity_search(dec, x, opts);

  auto sm = strong_cospectral(dec, x, y);
  if (!sm) {
    TransferCertificate cert;
    cert.verdict = Verdict::NotStronglyCospectral;
    return {cert};
  }
  std::vector<double> lambdas;
  for (int k : sm->support) lambdas.push_back(dec.eigenvalue(k));
  SearchProblem prob(dec, x, y, Verdict::Pst, 0.0);
  std::vector<TransferCertificate> out = search_times(prob, lambdas, opts);
  // Attach the certified sign pattern to positive results.
  for (TransferCertificate& c : out)
    if (c.verdict == Verdict::Pst) c.sign_map = sign_pairs(dec, *sm);
  return out;
}

std::optional<std::pair<double, std::complex<double>>> is_periodic(
    const SpectralDecomposition& dec, const RealPureState& x,
    const SearchOptions& opts) {
  for (const TransferCertificate& c : periodicity_search(dec, x, opts))
    if (c.verdict == Verdict::Periodic) return std::make_pair(c.tau, c.gamma);
  return std::nullopt;
}

SedentaryEstimate sedentariness(const SpectralDecomposition& dec,
                                const RealPureState& x, double window,
                                int grid) {
  if (window <= 0) throw std::invalid_argument("window must be positive");
  OverlapSeries series(dec, x, x);
  auto f = [&](double t) { return series.fidelity(t); };

  double h = window / grid;
  double best = 1.0, best_t = h;
  for (int j = 1; j <= grid; ++j) {
    double v = f(j * h);
    if (v < best) {
      best = v;
      best_t = j * h;
    }
  }
  double t = golden_min(f, std::max(h / 2, best_t - h), best_t + h, 1e-12);
  if (f(t) < best) {
    best = f(t);
    best_t = t;
  }
  return {window, grid, best, best_t};
}

PgstEvidence pgst_evidence(const SpectralDecomposition& dec,
                           const RealPureState& x, const RealPureState& y,
                           double t_max, long long samples,
                           unsigned long long seed, const PgstEvidence* prev) {
  if (t_max <= 0 || samples <= 0)
    throw std::invalid_argument("window and sample count must be positive");
  OverlapSeries series(dec, x, y);
  auto f = [&](double t) { return series.fidelity(t); };

  // Best few sample times, kept for local refinement.
  constexpr int kTop = 10;
  std::vector<std::pair<double, double>> top;  // (fidelity, time)
  auto offer = [&](double fid, double t) {
    if (top.size() < kTop) {
      top.emplace_back(fid, t);
      std::sort(top.begin(), top.end());
    } else if (fid > top.front().first) {
      top.front() = {fid, t};
      std::sort(top.begin(), top.end());
    }
  };

  long long uniform = samples / 2;
  double h = t_max / uniform;
  for (long long j = 1; j <= uniform; ++j) offer(f(j * h), j * h);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, t_max);
  for (long long j = samples - uniform; j > 0; --j) {
    double t = dist(rng);
    if (t > 0) offer(f(t), t);
  }

  PgstEvidence out;
  out.window = t_max;
  out.samples = samples;
  out.sup_fidelity = prev ? prev->sup_fidelity : 0.0;
  for (auto& [fid, t] : top) {
    double refined =
        golden_min([&](double s) { return -f(s); },
                   std::max(1e-9, t - h), std::min(t_max, t + h), 1e-10);
    double v = f(refined);
    if (v > out.sup_fidelity + 1e-12) {
      out.sup_fidelity = v;
      out.achieving_times = {refined};
    } else if (!out.achieving_times.empty() &&
               v >= out.sup_fidelity - 1e-9) {
      out.achieving_times.push_back(refined);
    }
  }
  if (prev && out.achieving_times.empty())
    out.achieving_times = prev->achieving_times;
  std::sort(out.achieving_times.begin(), out.achieving_times.end());
  out.achieving_times.erase(
      std::unique(out.achieving_times.begin(), out.achieving_times.end(),
                  [](double a, double b) { return std::abs(a - b) < 1e-6; }),
      out.achieving_times.end());
  return out;
}

}  // namespace pairwalk
