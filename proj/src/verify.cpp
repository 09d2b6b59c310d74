#include "pairwalk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "pairwalk/constructions.hpp"
#include "pairwalk/expm.hpp"
#include "pairwalk/instances.hpp"
#include "pairwalk/spectral.hpp"
#include "pairwalk/transfer.hpp"
#include "pairwalk/coherent.hpp"

namespace pairwalk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;
using Complex = std::complex<double>;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

WeightedGraph uniform_cycle(int n, double w) {
  WeightedGraph g(n);
  for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n, w);
  return g;
}

WeightedGraph two_matchings(int c) {
  // 2K2 plus isolated vertices: edges (0,1) and (2,3) on c >= 4 vertices.
  WeightedGraph g(c);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  return g;
}

Eigen::VectorXd kron(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  Eigen::VectorXd out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a[i] * b;
  return out;
}

/// Earliest PST certificate at the expected time, if the search finds one.
struct TimedPst {
  bool found = false;
  Complex gamma{0.0, 0.0};
  double residual = 1.0;
};

TimedPst pst_at(const SpectralDecomposition& dec, const RealPureState& x,
                const RealPureState& y, double expect_tau,
                const SearchOptions& opts = {}) {
  TimedPst out;
  for (const TransferCertificate& c : find_pst(dec, x, y, opts)) {
    if (!c.positive()) {
      out.residual = c.residual;
      continue;
    }
    if (std::abs(c.tau - expect_tau) <= 1e-9) {
      out.found = true;
      out.gamma = c.gamma;
      out.residual = c.residual;
      return out;
    }
  }
  return out;
}

/// Phase of the underlying inner-graph transfer recovered from a cluster
/// overlay certificate: gamma * exp(-i delta tau 1^T z).
Complex adjusted_phase(Complex gamma, Model m, double tau, double z_sum) {
  return gamma * std::polar(1.0, -delta(m) * tau * z_sum);
}

void add_case(VerifySuiteReport& rep, std::string id, std::string expected,
              bool pass, double residual) {
  rep.cases.push_back({std::move(id), std::move(expected), pass, residual});
}

}  // namespace

int VerifySuiteReport::passed() const {
  return static_cast<int>(
      std::count_if(cases.begin(), cases.end(),
                    [](const VerifyCase& c) { return c.pass; }));
}

int VerifySuiteReport::failed() const {
  return static_cast<int>(cases.size()) - passed();
}

VerifySuiteReport VerifySuiteReport::filter(const std::string& prefix) const {
  VerifySuiteReport out;
  out.suite = suite + "[" + prefix + "]";
  for (const VerifyCase& c : cases)
    if (c.instance.rfind(prefix, 0) == 0) out.cases.push_back(c);
  return out;
}

// --- Cluster overlay identity: evolution in G(H) is the lifted evolution
// --- in H, up to the phase exp(i delta t 1^T z). Checked against the
// --- series exponential.
VerifySuiteReport suite_cluster_lemma(unsigned long long seed) {
  VerifySuiteReport rep{"cluster-lemma", {}};
  std::mt19937_64 rng(seed ^ 0x636c7573ULL);
  std::uniform_real_distribution<double> time_dist(-10.0, 10.0);

  for (int i = 0; i < 50; ++i) {
    Model m = kAllModels[i % 3];
    ClusterInstance inst = random_cluster_instance(m, rng);
    const auto& members = inst.cluster.members;
    const int c = static_cast<int>(members.size());

    Eigen::VectorXd x = random_balanced_vector(c, rng);
    RealPureState lifted = lift_state(inst, x);
    Eigen::MatrixXd mg = build_matrix(inst.attached, m);
    Eigen::MatrixXd mh = build_matrix(inst.inner, m);
    SpectralDecomposition dec(mg, m);

    double worst = 0.0;
    for (int rep_t = 0; rep_t < 20; ++rep_t) {
      double t = time_dist(rng);
      Eigen::VectorXcd lhs = series_evolve(mg, t, lifted.vec());
      Eigen::VectorXcd inner = series_evolve(mh, t, x);
      Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(inst.base.order());
      Complex shift = std::polar(1.0, delta(m) * t * inst.z_sum);
      for (int k = 0; k < c; ++k) rhs[members[k]] = shift * inner[k];
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
      // The spectral route must agree with the series route as well.
      worst = std::max(
          worst, (dec.evolve(t, lifted) - lhs).cwiseAbs().maxCoeff());
    }
    add_case(rep,
             "cluster[" + std::to_string(i) + "]/" + to_string(m) + "/n=" +
                 std::to_string(inst.base.order()),
             "lifted evolution identity within 1e-8", worst <= 1e-8, worst);
  }
  return rep;
}

// --- Complement identity: the complement walk is the reversed walk times
// --- a unimodular factor, on states orthogonal to the ones vector.
VerifySuiteReport suite_complement_lemma(unsigned long long seed) {
  VerifySuiteReport rep{"complement-lemma", {}};
  std::mt19937_64 rng(seed ^ 0x636f6d70ULL);
  std::uniform_real_distribution<double> time_dist(-10.0, 10.0);
  std::uniform_int_distribution<int> size_dist(3, 8);

  for (int i = 0; i < 50; ++i) {
    Model m = kAllModels[i % 3];
    int c = size_dist(rng);
    WeightedGraph h = (m == Model::Laplacian)
                          ? random_graph(c, 0.5, rng)
                          : random_circulant(c, rng);
    WeightedGraph hbar = complement(h);
    Eigen::MatrixXd mh = build_matrix(h, m);
    Eigen::MatrixXd mhbar = build_matrix(hbar, m);
    Eigen::VectorXd x = random_balanced_vector(c, rng);

    double worst = 0.0;
    for (int rep_t = 0; rep_t < 20; ++rep_t) {
      double t = time_dist(rng);
      Eigen::VectorXcd lhs = series_evolve(mhbar, t, x);
      // Complement degrees are (c-1) - deg, so the unimodular factor is
      // exp(i (delta (c-1) - zeta) t).
      Complex shift = std::polar(1.0, (delta(m) * (c - 1) - zeta(m)) * t);
      Eigen::VectorXcd rhs = shift * series_evolve(mh, -t, x);
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    add_case(rep,
             "complement[" + std::to_string(i) + "]/" + to_string(m) +
                 "/c=" + std::to_string(c),
             "complement evolution identity within 1e-8", worst <= 1e-8,
             worst);
  }
  return rep;
}

// --- Transfer in H and in G(H) certifies at the same times; phases differ
// --- exactly by the cluster factor.
VerifySuiteReport suite_thm_3_1(unsigned long long seed) {
  VerifySuiteReport rep{"thm-3-1", {}};
  std::mt19937_64 rng(seed ^ 0x74683331ULL);

  for (int i = 0; i < 8; ++i) {
    double w = 1.0 + (i % 3);
    WeightedGraph inner = uniform_cycle(4, w);
    ClusterInstanceOptions opts;
    opts.forced_inner = &inner;
    // H is regular, so one instance serves all three models.
    ClusterInstance inst = random_cluster_instance(Model::Adjacency, rng, opts);
    const double tau = kHalfPi / w;

    RealPureState xh = RealPureState::pair(4, 0, 1);
    RealPureState yh = RealPureState::pair(4, 3, 2);
    Eigen::VectorXd xc = xh.vec(), yc = yh.vec();
    RealPureState xg = lift_state(inst, xc), yg = lift_state(inst, yc);

    for (Model m : kAllModels) {
      SpectralDecomposition dec_h = decompose(inst.inner, m);
      SpectralDecomposition dec_g = decompose(inst.attached, m);
      TimedPst in_h = pst_at(dec_h, xh, yh, tau);
      TimedPst in_g = pst_at(dec_g, xg, yg, tau);
      bool pass = in_h.found && in_g.found;
      double resid = std::max(in_h.residual, in_g.residual);
      if (pass) {
        Complex adj = adjusted_phase(in_g.gamma, m, tau, inst.z_sum);
        resid = std::max(resid, std::abs(adj - in_h.gamma));
        pass = resid <= 1e-8;
      }
      add_case(rep,
               "thm3.1[" + std::to_string(i) + "]/" + to_string(m) + "/w=" +
                   fmt(w),
               "same transfer time, cluster-shifted phase", pass, resid);
    }
  }
  return rep;
}

// --- Complete graph minus a matching of size >= 2.
VerifySuiteReport suite_thm_5_1() {
  VerifySuiteReport rep{"thm-5-1", {}};
  for (int n : {4, 5, 6, 8}) {
    for (int m = 2; 2 * m <= n; ++m) {
      WeightedGraph g = complete_minus_matching(n, m);
      RealPureState x = pair_state(g, 0, 2);
      RealPureState y = pair_state(g, 1, 3);
      for (Model model : kAllModels) {
        TimedPst res = pst_at(decompose(g, model), x, y, kHalfPi);
        add_case(rep,
                 "kn-matching[n=" + std::to_string(n) +
                     ",m=" + std::to_string(m) + "]/" + to_string(model),
                 "pair PST at pi/2, residual <= 1e-9",
                 res.found && res.residual <= 1e-9, res.residual);
      }
    }
  }
  return rep;
}

// --- Exhaustive Laplacian cospectrality scan of K_n minus one edge. The
// --- claimed result (no strongly cospectral pair states at all) is FALSE:
// --- with {a,b} the removed edge, (e_a - e_c) and (e_b - e_c) are strongly
// --- cospectral for every third vertex c and transfer perfectly at pi/2.
// --- E_{n-2} is the rank-one projection onto e_a - e_b, which fixes the
// --- sign pattern {n-2: -1, n: +1}; equivalently, the complement of the
// --- graph is K_2 plus isolated vertices, whose component-wise transfer
// --- lifts back through the complement. The scan cases are kept faithful
// --- to the claim and fail; the counterexample cases document the actual
// --- behavior against the series oracle.
VerifySuiteReport suite_prop_5_2() {
  VerifySuiteReport rep{"prop-5-2", {}};
  for (int n = 4; n <= 8; ++n) {
    WeightedGraph g = complete_minus_matching(n, 1);
    SpectralDecomposition dec = decompose(g, Model::Laplacian);

    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);

    int cospectral = 0, scanned = 0, off_family = 0;
    for (size_t i = 0; i < pairs.size(); ++i)
      for (size_t j = i + 1; j < pairs.size(); ++j) {
        ++scanned;
        RealPureState x = pair_state(g, pairs[i].first, pairs[i].second);
        RealPureState y = pair_state(g, pairs[j].first, pairs[j].second);
        if (!strong_cospectral(dec, x, y)) continue;
        ++cospectral;
        // Anything outside {(0,c),(1,c)} would be a second surprise.
        bool family = pairs[i].first == 0 && pairs[j].first == 1 &&
                      pairs[i].second == pairs[j].second;
        if (!family) ++off_family;
      }
    bool removed_pair_fixed = is_fixed(dec, pair_state(g, 0, 1));
    add_case(rep,
             "scan[n=" + std::to_string(n) + "]/L/pairs=" +
                 std::to_string(scanned),
             "claimed: zero strongly cospectral pair states",
             cospectral == 0 && removed_pair_fixed,
             static_cast<double>(cospectral));

    // The found family genuinely transfers; verified against the series
    // exponential, not just the spectral route.
    bool counter = removed_pair_fixed && off_family == 0 &&
                   cospectral == n - 2;
    double worst = 0.0;
    for (int c = 2; c < n; ++c) {
      RealPureState x = pair_state(g, 0, c);
      RealPureState y = pair_state(g, 1, c);
      TransferCertificate cert = check_pst_at(dec, x, y, kHalfPi);
      Eigen::VectorXcd ux = series_evolve(build_matrix(g, Model::Laplacian),
                                          kHalfPi, x.vec());
      double series_resid =
          1.0 - std::abs(y.vec().cast<Complex>().dot(ux));
      worst = std::max({worst, cert.residual, series_resid});
      counter = counter && cert.verdict == Verdict::Pst &&
                cert.residual <= 1e-9 && series_resid <= 1e-9;
    }
    add_case(rep, "counterexample[n=" + std::to_string(n) + "]/L",
             "(e_a-e_c, e_b-e_c) pairs transfer at pi/2 across the removed "
             "edge {a,b}",
             counter, worst);
  }
  return rep;
}

// --- K_n minus C_8 shows pretty good transfer evidence between the
// --- antipodally paired states.
VerifySuiteReport suite_pgst_5_3(unsigned long long seed) {
  VerifySuiteReport rep{"pgst-5-3", {}};
  for (int n : {8, 10}) {
    WeightedGraph g = complete_minus_cycle(n, 3);
    SpectralDecomposition dec = decompose(g, Model::Adjacency);
    // a = 0, b = 1; antipodal partners in the removed C_8 are 4 and 5.
    RealPureState x = pair_state(g, 0, 1);
    RealPureState y = pair_state(g, 4, 5);

    bool cospectral = strong_cospectral(dec, x, y).has_value();
    PgstEvidence first =
        pgst_evidence(dec, x, y, 1e4, 1'000'000, seed + n);
    PgstEvidence doubled =
        pgst_evidence(dec, x, y, 2e4, 1'000'000, seed + n + 1, &first);
    bool pass = cospectral && first.sup_fidelity > 0.9 &&
                doubled.sup_fidelity >= first.sup_fidelity;
    add_case(rep,
             "kn-minus-c8[n=" + std::to_string(n) + "]/A/sup=" +
                 fmt(first.sup_fidelity) + "->" + fmt(doubled.sup_fidelity),
             "sampled fidelity > 0.9, nondecreasing with window",
             pass, 1.0 - first.sup_fidelity);

    // At the best sampled time the transition matrix of the 8-vertex core
    // approaches a scalar multiple of the antipodal involution; reported
    // as a residual, never a verdict.
    if (n == 8 && !doubled.achieving_times.empty()) {
      PermutationCertificate near =
          nearest_permutation(dec, doubled.achieving_times.back());
      bool shape = near.perm == std::vector<int>{4, 5, 6, 7, 0, 1, 2, 3} &&
                   near.order2 && near.fixed_point_free;
      add_case(rep, "near-permutation[n=8]/A",
               "antipodal involution structure at the best sampled time",
               shape, near.residual);
    }
  }
  return rep;
}

// --- Section 6: permutation extraction on C_4 and the s-pair transfers.
VerifySuiteReport suite_coherent_6() {
  VerifySuiteReport rep{"coherent-6", {}};

  add_case(rep, "walk-regular/C4", "true", is_walk_regular(cycle(4)), 0.0);
  add_case(rep, "walk-regular/P3", "false", !is_walk_regular(path(3)), 0.0);
  add_case(rep, "walk-regular/K3,3", "true",
           is_walk_regular(complete_bipartite(3, 3)), 0.0);

  WeightedGraph c4 = cycle(4);
  SpectralDecomposition dec = decompose(c4, Model::Adjacency);
  auto cert = extract_permutation(dec, kHalfPi);
  {
    bool pass = cert.has_value() && cert->order2 && cert->fixed_point_free &&
                cert->perm == std::vector<int>{2, 3, 0, 1} &&
                std::abs(cert->gamma - Complex(-1.0, 0.0)) <= 1e-9;
    // Independent route: the series propagator must equal gamma P.
    double resid = 1.0;
    if (pass) {
      Eigen::MatrixXcd u = series_propagator(build_matrix(c4, Model::Adjacency),
                                             kHalfPi);
      Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(4, 4);
      for (int col = 0; col < 4; ++col)
        expect(cert->perm[col], col) = cert->gamma;
      resid = (u - expect).cwiseAbs().maxCoeff();
      pass = resid <= 1e-7;
    }
    add_case(rep, "perm/C4@pi:2", "gamma=-1, antipodal involution", pass,
             pass ? resid : 1.0);
  }
  {
    auto k2cert =
        extract_permutation(decompose(complete(2), Model::Adjacency), kHalfPi);
    bool pass = k2cert.has_value() && k2cert->perm == std::vector<int>{1, 0} &&
                std::abs(k2cert->gamma - Complex(0.0, 1.0)) <= 1e-9;
    add_case(rep, "perm/K2@pi:2", "gamma=i, swap", pass,
             k2cert ? k2cert->residual : 1.0);
  }
  add_case(rep, "perm/C4@pi:4", "no permutation structure",
           !extract_permutation(dec, kPi / 4).has_value(), 0.0);

  if (cert) {
    bool all_vertex = true;
    double worst = 0.0;
    for (int u = 0; u < 4; ++u) {
      TransferCertificate c = check_pst_at(
          dec, RealPureState::vertex(4, u),
          RealPureState::vertex(4, cert->perm[u]), kHalfPi);
      all_vertex = all_vertex && c.verdict == Verdict::Pst &&
                   std::abs(c.gamma - cert->gamma) <= 1e-8;
      worst = std::max(worst, c.residual);
    }
    add_case(rep, "perm/vertex-pst-all", "every vertex transfers to its image",
             all_vertex, worst);

    for (double s : {-1.0, 1.0, 2.0, 0.5}) {
      auto [x, y] = s_pair_transfer(*cert, 0, 1, s);
      TransferCertificate c = check_pst_at(dec, x, y, kHalfPi);
      bool pass = c.verdict == Verdict::Pst && c.residual <= 1e-9 &&
                  std::abs(c.gamma - cert->gamma) <= 1e-8;
      add_case(rep, "spair/C4/s=" + fmt(s), "PST at pi/2 with gamma=-1", pass,
               c.residual);
    }

    bool threw = false;
    try {
      s_pair_transfer(*cert, 0, 2, 1.0);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    add_case(rep, "spair/C4/antipodal-rejected",
             "swapped pair rejected (already vertex PST)", threw, 0.0);
  }
  return rep;
}

// --- Section 7: sequential joins, the Fig. 1 families, and weighted joins.
VerifySuiteReport suite_seqjoin_7() {
  VerifySuiteReport rep{"seqjoin-7", {}};

  for (int len = 1; len <= 6; ++len) {
    std::vector<WeightedGraph> parts{cycle(4)};
    for (int k = 0; k <= len; ++k) parts.push_back(empty_graph(1));
    WeightedGraph g1 = sequential_join(parts);
    RealPureState x = pair_state(g1, 0, 1);
    RealPureState y = pair_state(g1, 3, 2);
    for (Model m : kAllModels) {
      TimedPst res = pst_at(decompose(g1, m), x, y, kHalfPi);
      add_case(rep, "G1[len=" + std::to_string(len) + "]/" + to_string(m),
               "pair PST at pi/2", res.found && res.residual <= 1e-9,
               res.residual);
    }
  }

  for (int len = 1; len <= 6; ++len) {
    std::vector<WeightedGraph> parts{path(3)};
    for (int k = 0; k <= len; ++k) parts.push_back(empty_graph(1));
    WeightedGraph g2 = sequential_join(parts);
    RealPureState x = pair_state(g2, 0, 1);  // (e_a - e_c)/sqrt(2)
    RealPureState y = pair_state(g2, 2, 1);  // (e_b - e_c)/sqrt(2)
    TimedPst res = pst_at(decompose(g2, Model::Laplacian), x, y, kHalfPi);
    bool pass = res.found && res.residual <= 1e-9;
    double resid = res.residual;
    if (pass) {
      // The P3-level phase (cluster factor removed) is -i.
      Complex adj = adjusted_phase(res.gamma, Model::Laplacian, kHalfPi, 1.0);
      resid = std::abs(adj - Complex(0.0, -1.0));
      pass = resid <= 1e-8;
    }
    add_case(rep, "G2[len=" + std::to_string(len) + "]/L",
             "pair PST at pi/2, P3 phase -i after cluster shift", pass, resid);
  }

  // Joins over the 4-cycle: K1 v C4, K2bar v C4 and K2 v C4.
  struct JoinCase {
    const char* name;
    WeightedGraph tail;
    double z_sum;
  };
  std::vector<JoinCase> joins;
  joins.push_back({"K1vC4", empty_graph(1), 1.0});
  joins.push_back({"K2barvC4", empty_graph(2), 2.0});
  joins.push_back({"K2vC4", complete(2), 2.0});
  WeightedGraph c4 = cycle(4);
  RealPureState xh = RealPureState::pair(4, 0, 1);
  RealPureState yh = RealPureState::pair(4, 2, 3);
  for (const JoinCase& jc : joins) {
    WeightedGraph g = sequential_join({cycle(4), jc.tail});
    RealPureState x = pair_state(g, 0, 1);
    RealPureState y = pair_state(g, 2, 3);  // images under the antipodal map
    for (Model m : kAllModels) {
      // C4's own phase at pi/2 (-1 for A, +1 for L and Q).
      Complex gamma_h = check_pst_at(decompose(c4, m), xh, yh, kHalfPi).gamma;
      TimedPst res = pst_at(decompose(g, m), x, y, kHalfPi);
      bool pass = res.found && res.residual <= 1e-9;
      double resid = res.residual;
      if (pass) {
        Complex adj = adjusted_phase(res.gamma, m, kHalfPi, jc.z_sum);
        resid = std::abs(adj - gamma_h);
        pass = resid <= 1e-8;
      }
      add_case(rep, std::string("join/") + jc.name + "/" + to_string(m),
               "pair PST at pi/2 with the C4 phase after cluster shift", pass,
               resid);
    }
  }

  // Weighted join: identical weights toward each fixed base vertex keep the
  // cluster structure, so transfer survives arbitrary such weightings.
  {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 3; ++i) {
      WeightedGraph base = random_graph(2 + i, 0.6, rng, true, true);
      std::vector<double> cross;
      std::uniform_real_distribution<double> wdist(0.5, 2.5);
      double z_sum = 0.0;
      for (int u = 0; u < base.order(); ++u) {
        cross.push_back(wdist(rng));
        z_sum += cross.back();
      }
      WeightedGraph g = join(base, cycle(4), cross);
      int off = base.order();
      RealPureState x = pair_state(g, off + 0, off + 1);
      RealPureState y = pair_state(g, off + 2, off + 3);
      for (Model m : kAllModels) {
        Complex gamma_h =
            check_pst_at(decompose(c4, m), xh, yh, kHalfPi).gamma;
        TimedPst res = pst_at(decompose(g, m), x, y, kHalfPi);
        bool pass = res.found && res.residual <= 1e-9;
        double resid = res.residual;
        if (pass) {
          Complex adj = adjusted_phase(res.gamma, m, kHalfPi, z_sum);
          resid = std::abs(adj - gamma_h);
          pass = resid <= 1e-8;
        }
        add_case(rep,
                 "wjoin[" + std::to_string(i) + "]/" + to_string(m),
                 "weighted join keeps pair PST at pi/2", pass, resid);
      }
    }
  }

  // Sequential join on top of a matching-removed complete graph.
  {
    WeightedGraph h1 = complete_minus_matching(5, 2);
    WeightedGraph g = sequential_join({h1, empty_graph(1), empty_graph(1)});
    RealPureState x = pair_state(g, 0, 2);
    RealPureState y = pair_state(g, 1, 3);
    for (Model m : kAllModels) {
      TimedPst res = pst_at(decompose(g, m), x, y, kHalfPi);
      add_case(rep, std::string("seqjoin/K5-2M+path/") + to_string(m),
               "pair PST at pi/2", res.found && res.residual <= 1e-9,
               res.residual);
    }
  }
  return rep;
}

// --- Section 8: complements and the disconnected-H constructions.
VerifySuiteReport suite_complement_8(unsigned long long seed) {
  VerifySuiteReport rep{"complement-8", {}};
  std::mt19937_64 rng(seed ^ 0x636f3856ULL);

  // C4 and its complement 2K2 exchange pair PST at pi/2 with the
  // exp(i (delta c - zeta) tau) phase.
  for (Model m : kAllModels) {
    WeightedGraph h = cycle(4);
    WeightedGraph hbar = complement(h);
    RealPureState x = RealPureState::pair(4, 0, 1);
    RealPureState y = RealPureState::pair(4, 2, 3);
    TimedPst in_h = pst_at(decompose(h, m), x, y, kHalfPi);
    TimedPst in_hbar = pst_at(decompose(hbar, m), x, y, kHalfPi);
    bool pass = in_h.found && in_hbar.found;
    double resid = std::max(in_h.residual, in_hbar.residual);
    if (pass) {
      Complex expect =
          std::polar(1.0, (delta(m) * 3 - zeta(m)) * kHalfPi) *
          std::conj(in_h.gamma);
      resid = std::max(resid, std::abs(in_hbar.gamma - expect));
      pass = resid <= 1e-8;
    }
    add_case(rep, std::string("thm8.2/C4-vs-2K2/") + to_string(m),
             "PST at pi/2 on both sides, conjugate phase", pass, resid);
  }

  // Randomized: fidelity profiles of H and its complement coincide for
  // balanced states, and strong cospectrality verdicts agree.
  std::uniform_int_distribution<int> size_dist(4, 8);
  std::uniform_real_distribution<double> time_dist(-10.0, 10.0);
  for (int i = 0; i < 12; ++i) {
    Model m = kAllModels[i % 3];
    int c = size_dist(rng);
    WeightedGraph h = (m == Model::Laplacian) ? random_graph(c, 0.5, rng)
                                              : random_circulant(c, rng);
    WeightedGraph hbar = complement(h);
    int a = std::uniform_int_distribution<int>(0, c - 1)(rng);
    int b = (a + 1 + std::uniform_int_distribution<int>(0, c - 2)(rng)) % c;
    int a2 = std::uniform_int_distribution<int>(0, c - 1)(rng);
    int b2 = (a2 + 1 + std::uniform_int_distribution<int>(0, c - 2)(rng)) % c;
    if ((a == a2 && b == b2) || (a == b2 && b == a2)) {
      a2 = (a + 1) % c;
      b2 = (b + 1) % c;
      if (a2 == b2) b2 = (b2 + 1) % c;
    }
    RealPureState x = RealPureState::pair(c, a, b);
    RealPureState y = RealPureState::pair(c, a2, b2);

    SpectralDecomposition dec_h = decompose(h, m);
    SpectralDecomposition dec_hbar = decompose(hbar, m);
    OverlapSeries s_h(dec_h, x, y), s_hbar(dec_hbar, x, y);
    double worst = 0.0;
    for (int k = 0; k < 25; ++k) {
      double t = time_dist(rng);
      worst = std::max(worst,
                       std::abs(s_h.fidelity(t) - s_hbar.fidelity(t)));
    }
    bool sc_agree = strong_cospectral(dec_h, x, y).has_value() ==
                    strong_cospectral(dec_hbar, x, y).has_value();
    add_case(rep,
             "thm8.2/random[" + std::to_string(i) + "]/" + to_string(m),
             "identical fidelity profile and cospectrality verdict",
             worst <= 1e-8 && sc_agree, worst);
  }

  // Complete bipartite plus a 2-matching in one partite set.
  for (int m_side : {3, 4, 5}) {
    for (int n_side : {3, 4, 5}) {
      int offset;
      if (n_side >= 4) {
        offset = m_side;
      } else if (m_side >= 4) {
        offset = 0;
      } else {
        continue;  // a 2-matching needs four vertices in one side
      }
      WeightedGraph g = complete_bipartite(m_side, n_side);
      g.add_edge(offset + 0, offset + 1);
      g.add_edge(offset + 2, offset + 3);
      RealPureState x = pair_state(g, offset + 0, offset + 2);
      RealPureState y = pair_state(g, offset + 1, offset + 3);

      std::string id = "kmn[" + std::to_string(m_side) + "," +
                       std::to_string(n_side) + "]";
      TimedPst res = pst_at(decompose(g, Model::Laplacian), x, y, kHalfPi);
      add_case(rep, id + "/L", "Laplacian pair PST at pi/2",
               res.found && res.residual <= 1e-9, res.residual);

      TimedPst comp =
          pst_at(decompose(complement(g), Model::Laplacian), x, y, kHalfPi);
      add_case(rep, id + "-comp/L", "complement keeps pair PST at pi/2",
               comp.found && comp.residual <= 1e-9, comp.residual);
    }
  }

  // Perfect matching inside a partite set of size 4: the inner graph is
  // regular, so all three models apply.
  for (int m_side : {3, 4}) {
    WeightedGraph g = complete_bipartite(m_side, 4);
    g.add_edge(m_side + 0, m_side + 1);
    g.add_edge(m_side + 2, m_side + 3);
    RealPureState x = pair_state(g, m_side + 0, m_side + 2);
    RealPureState y = pair_state(g, m_side + 1, m_side + 3);
    for (Model m : kAllModels) {
      TimedPst res = pst_at(decompose(g, m), x, y, kHalfPi);
      add_case(rep,
               "kmn-perfect[" + std::to_string(m_side) + ",4]/" + to_string(m),
               "pair PST at pi/2 for all models",
               res.found && res.residual <= 1e-9, res.residual);
    }
  }

  // An edge inside the star's leaves (K2 u K1 inner graph).
  {
    WeightedGraph g = complete_bipartite(1, 4);
    g.add_edge(1, 2);
    RealPureState x = pair_state(g, 1, 3);
    RealPureState y = pair_state(g, 2, 3);
    TimedPst res = pst_at(decompose(g, Model::Laplacian), x, y, kHalfPi);
    add_case(rep, "star+edge/L", "Laplacian pair PST at pi/2",
             res.found && res.residual <= 1e-9, res.residual);
    TimedPst comp =
        pst_at(decompose(complement(g), Model::Laplacian), x, y, kHalfPi);
    add_case(rep, "star+edge-comp/L", "complement keeps pair PST at pi/2",
             comp.found && comp.residual <= 1e-9, comp.residual);
  }

  // Randomized disconnected-H overlays: 2K2 plus isolates inside a random
  // unweighted cluster, checked on the overlay and its complement.
  for (int i = 0; i < 4; ++i) {
    int c = 4 + (i % 3);
    WeightedGraph inner = two_matchings(c);
    ClusterInstanceOptions opts;
    opts.forced_inner = &inner;
    opts.weighted = false;
    ClusterInstance inst = random_cluster_instance(Model::Laplacian, rng, opts);

    Eigen::VectorXd xc = Eigen::VectorXd::Zero(c), yc = Eigen::VectorXd::Zero(c);
    xc[0] = 1 / std::sqrt(2.0);
    xc[2] = -1 / std::sqrt(2.0);
    yc[1] = 1 / std::sqrt(2.0);
    yc[3] = -1 / std::sqrt(2.0);
    RealPureState x = lift_state(inst, xc), y = lift_state(inst, yc);

    TimedPst res =
        pst_at(decompose(inst.attached, Model::Laplacian), x, y, kHalfPi);
    TimedPst comp = pst_at(
        decompose(complement(inst.attached), Model::Laplacian), x, y, kHalfPi);
    bool pass = res.found && comp.found && res.residual <= 1e-9 &&
                comp.residual <= 1e-9;
    add_case(rep, "disc-H[" + std::to_string(i) + "]/L",
             "overlay and complement both transfer at pi/2", pass,
             std::max(res.residual, comp.residual));
  }
  return rep;
}

// --- Section 9: Cartesian products, coronas, blow-ups, lexicographic.
VerifySuiteReport suite_products_9(unsigned long long seed) {
  VerifySuiteReport rep{"products-9", {}};
  std::mt19937_64 rng(seed ^ 0x70726f64ULL);

  WeightedGraph c4 = cycle(4);
  RealPureState xh = RealPureState::pair(4, 0, 1);
  RealPureState yh = RealPureState::pair(4, 3, 2);

  // (C4 v K1) x K2 for every model.
  {
    WeightedGraph gh = sequential_join({cycle(4), empty_graph(1)});
    WeightedGraph g = cartesian(gh, complete(2));
    RealPureState x = pair_state(g, product_index(0, 0, 2),
                                 product_index(1, 0, 2));
    RealPureState y = pair_state(g, product_index(3, 1, 2),
                                 product_index(2, 1, 2));
    for (Model m : kAllModels) {
      TimedPst res = pst_at(decompose(g, m), x, y, kHalfPi);
      add_case(rep, std::string("thm9.1/C4vK1xK2/") + to_string(m),
               "pair PST at pi/2", res.found && res.residual <= 1e-9,
               res.residual);
    }
  }

  // (K2 v K1 v K1) x K2, Laplacian only: the inner K2 u K1 is not regular.
  {
    WeightedGraph gh =
        sequential_join({complete(2), empty_graph(1), empty_graph(1)});
    WeightedGraph g = cartesian(gh, complete(2));
    RealPureState x = pair_state(g, product_index(0, 0, 2),
                                 product_index(3, 0, 2));
    RealPureState y = pair_state(g, product_index(1, 1, 2),
                                 product_index(3, 1, 2));
    TimedPst res = pst_at(decompose(g, Model::Laplacian), x, y, kHalfPi);
    add_case(rep, "thm9.1/K2vK1vK1xK2/L", "Laplacian pair PST at pi/2",
             res.found && res.residual <= 1e-9, res.residual);
  }

  // Random cluster overlays of C4 crossed with K2 or C4.
  for (int i = 0; i < 4; ++i) {
    ClusterInstanceOptions opts;
    opts.forced_inner = &c4;
    opts.weighted = (i % 2 == 0);
    ClusterInstance inst = random_cluster_instance(Model::Adjacency, rng, opts);
    WeightedGraph k = (i % 2 == 0) ? complete(2) : cycle(4);
    int w1 = 0;
    int w2 = (i % 2 == 0) ? 1 : 2;  // PST partner at pi/2 in K2 / C4
    WeightedGraph g = cartesian(inst.attached, k);

    RealPureState xg = lift_state(inst, xh.vec());
    RealPureState yg = lift_state(inst, yh.vec());
    Eigen::VectorXd w1v = Eigen::VectorXd::Unit(k.order(), w1);
    Eigen::VectorXd w2v = Eigen::VectorXd::Unit(k.order(), w2);
    RealPureState x = RealPureState::general(kron(xg.vec(), w1v));
    RealPureState y = RealPureState::general(kron(yg.vec(), w2v));
    for (Model m : kAllModels) {
      TimedPst res = pst_at(decompose(g, m), x, y, kHalfPi);
      add_case(rep,
               "thm9.1/random[" + std::to_string(i) + "]/" + to_string(m),
               "product pair PST at pi/2", res.found && res.residual <= 1e-9,
               res.residual);
    }
  }

  // Periodic second factor: slow C4 (weight 1/2) transfers at pi while the
  // K2 vertex state returns at pi.
  {
    WeightedGraph slow = uniform_cycle(4, 0.5);
    ClusterInstanceOptions opts;
    opts.forced_inner = &slow;
    ClusterInstance inst = random_cluster_instance(Model::Adjacency, rng, opts);
    WeightedGraph g = cartesian(inst.attached, complete(2));
    RealPureState xg = lift_state(inst, xh.vec());
    RealPureState yg = lift_state(inst, yh.vec());
    Eigen::VectorXd e0 = Eigen::VectorXd::Unit(2, 0);
    RealPureState x = RealPureState::general(kron(xg.vec(), e0));
    RealPureState y = RealPureState::general(kron(yg.vec(), e0));
    for (Model m : kAllModels) {
      TimedPst res = pst_at(decompose(g, m), x, y, kPi);
      add_case(rep, std::string("thm9.1/periodic-factor/") + to_string(m),
               "pair PST at pi with a periodic vertex factor",
               res.found && res.residual <= 1e-9, res.residual);
    }
  }

  // Coronas of P3 with C4 (Fig. 5) plus random bases; the phase inside the
  // copy matches C4's certificate after removing the cluster factor.
  auto corona_case = [&](const std::string& id, const WeightedGraph& g,
                         int copy_base, double z_sum) {
    for (Model m : kAllModels) {
      RealPureState x = pair_state(g, copy_base + 0, copy_base + 1);
      RealPureState y = pair_state(g, copy_base + 3, copy_base + 2);
      TimedPst res = pst_at(decompose(g, m), x, y, kHalfPi);
      bool pass = res.found && res.residual <= 1e-9;
      double resid = res.residual;
      if (pass) {
        Complex gamma_h = check_pst_at(decompose(c4, m), xh, yh, kHalfPi).gamma;
        Complex adj = adjusted_phase(res.gamma, m, kHalfPi, z_sum);
        resid = std::abs(adj - gamma_h);
        pass = resid <= 1e-8;
      }
      add_case(rep, id + "/" + to_string(m),
               "copy certificate matches C4 (time and shifted phase)", pass,
               resid);
    }
  };

  corona_case("thm9.2/P3oC4", vertex_corona(path(3), c4),
              corona_copy_index(3, 4, 0, 0), 1.0);
  corona_case("thm9.2/P3-edge-corona",  edge_corona(path(3), c4),
              corona_copy_index(3, 4, 0, 0), 2.0);
  corona_case("thm9.2/P3-nbhd-corona", neighborhood_corona(path(3), c4),
              corona_copy_index(3, 4, 0, 0), 1.0);
  for (int i = 0; i < 2; ++i) {
    int n = 2 + i;
    WeightedGraph base = random_graph(n, 0.7, rng, false, true);
    corona_case("thm9.2/random[" + std::to_string(i) + "]",
                vertex_corona(base, c4), corona_copy_index(n, 4, i, 0), 1.0);
  }

  // Blow-ups: the perturbed cluster carries C4's transfer.
  {
    WeightedGraph g =
        blow_up(path(3), 4, {cycle(4), empty_graph(4), empty_graph(4)});
    for (Model m : kAllModels) {
      RealPureState x = pair_state(g, 0, 1);
      RealPureState y = pair_state(g, 3, 2);
      TimedPst res = pst_at(decompose(g, m), x, y, kHalfPi);
      bool pass = res.found && res.residual <= 1e-9;
      double resid = res.residual;
      if (pass) {
        Complex gamma_h = check_pst_at(decompose(c4, m), xh, yh, kHalfPi).gamma;
        Complex adj = adjusted_phase(res.gamma, m, kHalfPi, 4.0);
        resid = std::abs(adj - gamma_h);
        pass = resid <= 1e-8;
      }
      add_case(rep, std::string("thm9.3/P3-blowup/") + to_string(m),
               "cluster certificate matches C4", pass, resid);
    }
  }
  for (int i = 0; i < 2; ++i) {
    int n = 2 + i;
    WeightedGraph base = random_graph(n, 0.8, rng, false, true);
    int j = std::uniform_int_distribution<int>(0, n - 1)(rng);
    std::vector<WeightedGraph> inner(n, empty_graph(4));
    inner[j] = cycle(4);
    WeightedGraph g = blow_up(base, 4, inner);
    double z_sum = 4.0 * base.neighbors(j).size();
    for (Model m : kAllModels) {
      RealPureState x = pair_state(g, 4 * j + 0, 4 * j + 1);
      RealPureState y = pair_state(g, 4 * j + 3, 4 * j + 2);
      TimedPst res = pst_at(decompose(g, m), x, y, kHalfPi);
      bool pass = res.found && res.residual <= 1e-9;
      double resid = res.residual;
      if (pass) {
        Complex gamma_h = check_pst_at(decompose(c4, m), xh, yh, kHalfPi).gamma;
        Complex adj = adjusted_phase(res.gamma, m, kHalfPi, z_sum);
        resid = std::abs(adj - gamma_h);
        pass = resid <= 1e-8;
      }
      add_case(rep, "thm9.3/random[" + std::to_string(i) + "]/" + to_string(m),
               "cluster certificate matches C4", pass, resid);
    }
  }

  // Lexicographic product: every cluster of P3[C4] carries the transfer.
  {
    WeightedGraph g = lexicographic(path(3), c4);
    for (Model m : kAllModels) {
      RealPureState x = pair_state(g, 0, 1);
      RealPureState y = pair_state(g, 3, 2);
      TimedPst res = pst_at(decompose(g, m), x, y, kHalfPi);
      add_case(rep, std::string("lex/P3[C4]/") + to_string(m),
               "pair PST at pi/2", res.found && res.residual <= 1e-9,
               res.residual);
    }
  }
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "cluster-lemma", "complement-lemma", "thm-3-1",    "thm-5-1",
      "prop-5-2",      "pgst-5-3",         "coherent-6", "seqjoin-7",
      "complement-8",  "products-9",
  };
  return names;
}

VerifySuiteReport run_suite(const std::string& name, unsigned long long seed) {
  if (name == "cluster-lemma") return suite_cluster_lemma(seed);
  if (name == "complement-lemma") return suite_complement_lemma(seed);
  if (name == "thm-3-1") return suite_thm_3_1(seed);
  if (name == "thm-5-1") return suite_thm_5_1();
  if (name == "prop-5-2") return suite_prop_5_2();
  if (name == "pgst-5-3") return suite_pgst_5_3(seed);
  if (name == "coherent-6") return suite_coherent_6();
  if (name == "seqjoin-7") return suite_seqjoin_7();
  if (name == "complement-8") return suite_complement_8(seed);
  if (name == "products-9") return suite_products_9(seed);
  if (name == "all") {
    VerifySuiteReport all{"all", {}};
    for (const std::string& n : suite_names()) {
      VerifySuiteReport r = run_suite(n, seed);
      for (VerifyCase& c : r.cases) {
        c.instance = n + "::" + c.instance;
        all.cases.push_back(std::move(c));
      }
    }
    return all;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace pairwalk
