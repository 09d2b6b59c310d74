// Acceptance suite: replays the constructive results end to end and prints
// one line per criterion. Exits non-zero if any criterion fails.

#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "pairwalk/coherent.hpp"
#include "pairwalk/constructions.hpp"
#include "pairwalk/expm.hpp"
#include "pairwalk/instances.hpp"
#include "pairwalk/spectral.hpp"
#include "pairwalk/transfer.hpp"
#include "pairwalk/verify.hpp"

using namespace pairwalk;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = kPi / 2;

int g_failures = 0;

void report(int criterion, const std::string& what, bool pass,
            const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL",
              criterion, what.c_str(), detail.empty() ? "" : " -- ",
              detail.c_str());
  if (!pass) ++g_failures;
}

std::string worst_of(const VerifySuiteReport& rep) {
  double worst = 0.0;
  for (const VerifyCase& c : rep.cases) worst = std::max(worst, c.residual);
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%d cases, worst residual %.3e",
                static_cast<int>(rep.cases.size()), worst);
  return buf;
}

bool suite_block(const VerifySuiteReport& rep) {
  for (const VerifyCase& c : rep.cases)
    if (!c.pass)
      std::printf("       failed case: %s (%s, residual %.3e)\n",
                  c.instance.c_str(), c.expected.c_str(), c.residual);
  return rep.all_passed() && !rep.cases.empty();
}

// Criterion 1: C4 pair states exchange with fidelity one at pi/2 under all
// three Hamiltonians.
void criterion_1() {
  WeightedGraph c4 = cycle(4);
  RealPureState x = pair_state(c4, 0, 1);
  RealPureState y = pair_state(c4, 3, 2);
  double worst = 1.0;
  bool pass = true;
  for (Model m : kAllModels) {
    double f = fidelity(decompose(c4, m), kHalfPi, x, y);
    worst = std::min(worst, f);
    pass = pass && f >= 1.0 - 1e-9;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "min fidelity %.12f", worst);
  report(1, "C4 pair PST at pi/2 for A, L, Q", pass, buf);
}

// Criterion 2: the Fig. 1 pendant-path families.
void criterion_2() {
  VerifySuiteReport suite = suite_seqjoin_7();
  VerifySuiteReport g1 = suite.filter("G1[");
  VerifySuiteReport g2 = suite.filter("G2[");
  bool pass = suite_block(g1) && suite_block(g2) &&
              g1.cases.size() == 18 && g2.cases.size() == 6;
  VerifySuiteReport both = g1;
  both.cases.insert(both.cases.end(), g2.cases.begin(), g2.cases.end());
  report(2, "pendant-path families transfer at pi/2 (G1: A,L,Q; G2: L)", pass,
         worst_of(both));
}

void criterion_3() {
  VerifySuiteReport rep = suite_thm_5_1();
  report(3, "complete graphs minus matchings transfer at pi/2 (A, L, Q)",
         suite_block(rep), worst_of(rep));
}

// This criterion asserts a claim that is mathematically false, so it is
// implemented faithfully and expected to stay red: the scan finds the
// strongly cospectral family (e_a - e_c, e_b - e_c) across the removed
// edge, and those states transfer perfectly at pi/2 (the complement is
// K_2 plus isolated vertices, whose transfer lifts back). The companion
// "counterexample" cases in the suite verify that behavior against the
// series oracle.
void criterion_4() {
  VerifySuiteReport suite = suite_prop_5_2();
  VerifySuiteReport scan = suite.filter("scan[");
  bool pass = suite_block(scan) && scan.cases.size() == 5;
  VerifySuiteReport counter = suite.filter("counterexample[");
  std::printf("       counterexample documentation: %d of %d cases verify "
              "PST at pi/2 across the removed edge\n",
              counter.passed(), static_cast<int>(counter.cases.size()));
  report(4, "K_n minus an edge: no Laplacian strongly cospectral pairs",
         pass, worst_of(scan));
}

void criterion_5() {
  VerifySuiteReport rep = suite_pgst_5_3(0);
  report(5, "K_n minus C_8: sampled fidelity > 0.9, nondecreasing window",
         suite_block(rep), worst_of(rep));
}

void criterion_6() {
  VerifySuiteReport rep = suite_cluster_lemma(0);
  bool pass = suite_block(rep) && rep.cases.size() == 50;
  report(6, "cluster overlay evolution identity vs series oracle (50 seeds)",
         pass, worst_of(rep));
}

void criterion_7() {
  VerifySuiteReport rep = suite_complement_lemma(0);
  bool pass = suite_block(rep) && rep.cases.size() == 50;
  report(7, "complement evolution identity vs series oracle (50 seeds)", pass,
         worst_of(rep));
}

void criterion_8() {
  VerifySuiteReport suite = suite_products_9(0);
  VerifySuiteReport a = suite.filter("thm9.1/C4vK1xK2");
  VerifySuiteReport b = suite.filter("thm9.1/K2vK1vK1xK2");
  bool pass = suite_block(a) && suite_block(b) && a.cases.size() == 3 &&
              b.cases.size() == 1;
  VerifySuiteReport both = a;
  both.cases.insert(both.cases.end(), b.cases.begin(), b.cases.end());
  report(8, "Cartesian products carry pair PST at pi/2", pass,
         worst_of(both));
}

void criterion_9() {
  VerifySuiteReport suite = suite_products_9(0);
  VerifySuiteReport corona = suite.filter("thm9.2/P3oC4");
  VerifySuiteReport blowup = suite.filter("thm9.3/P3-blowup");
  bool pass = suite_block(corona) && suite_block(blowup) &&
              corona.cases.size() == 3 && blowup.cases.size() == 3;
  VerifySuiteReport both = corona;
  both.cases.insert(both.cases.end(), blowup.cases.begin(),
                    blowup.cases.end());
  report(9, "corona and blow-up copies match the C4 certificate", pass,
         worst_of(both));
}

void criterion_10() {
  VerifySuiteReport suite = suite_coherent_6();
  VerifySuiteReport perm = suite.filter("perm/");
  VerifySuiteReport spair = suite.filter("spair/");
  bool pass = suite_block(perm) && suite_block(spair) && !perm.cases.empty() &&
              spair.cases.size() == 5;
  VerifySuiteReport both = perm;
  both.cases.insert(both.cases.end(), spair.cases.begin(), spair.cases.end());
  report(10, "C4 permutation extraction and s-pair transfers at pi/2", pass,
         worst_of(both));
}

void criterion_11() {
  VerifySuiteReport suite = suite_complement_8(0);
  VerifySuiteReport kmn = suite.filter("kmn[");
  VerifySuiteReport star = suite.filter("star+edge");
  bool pass = suite_block(kmn) && suite_block(star) &&
              kmn.cases.size() == 16 && star.cases.size() == 2;
  VerifySuiteReport both = kmn;
  both.cases.insert(both.cases.end(), star.cases.begin(), star.cases.end());
  report(11, "bipartite + matching and star + edge transfer at pi/2 (L)",
         pass, worst_of(both));
}

// Criterion 12: global dynamical properties over seeded random instances.
void criterion_12() {
  std::mt19937_64 rng(0);
  std::uniform_real_distribution<double> tdist(-10.0, 10.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  bool pass = true;
  double worst = 0.0;
  auto note = [&](bool ok, const char* what, double resid) {
    worst = std::max(worst, resid);
    if (!ok) {
      std::printf("       failed property: %s (residual %.3e)\n", what,
                  resid);
      pass = false;
    }
  };

  // Unitarity, group law, resolution of identity, oracle equivalence.
  for (int i = 0; i < 100; ++i) {
    int n = 2 + (i % 7);
    WeightedGraph g = random_graph(n, 0.55, rng, i % 2 == 0);
    Model m = kAllModels[i % 3];
    SpectralDecomposition dec = decompose(g, m);

    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < dec.size(); ++k) sum += dec.projection(k);
    double id_resid =
        (sum - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
    note(id_resid <= 1e-9, "sum of projections is the identity", id_resid);

    Eigen::VectorXd x(n);
    for (int k = 0; k < n; ++k) x[k] = gauss(rng);
    x.normalize();
    double t = tdist(rng), s = tdist(rng);

    Eigen::VectorXcd ut = dec.evolve(t, x);
    double unit_resid = std::abs(ut.norm() - 1.0);
    note(unit_resid <= 1e-9, "evolution preserves the norm", unit_resid);

    double group_resid =
        (dec.evolve(t + s, x) - dec.evolve(t, dec.evolve(s, x)))
            .cwiseAbs()
            .maxCoeff();
    note(group_resid <= 1e-8, "evolution group law", group_resid);

    if (n <= 8) {
      double oracle_resid =
          (ut - series_evolve(build_matrix(g, m), t, x)).cwiseAbs().maxCoeff();
      note(oracle_resid <= 1e-7, "spectral route matches series route",
           oracle_resid);
    }
  }

  // Transfer hygiene on instances that certify PST: strong cospectrality,
  // periodicity at twice the time, monogamy at the transfer time.
  WeightedGraph c4 = cycle(4);
  int positives = 0;
  for (int i = 0; i < 105; ++i) {
    Model m = kAllModels[i % 3];
    double w = 1.0 + (i % 2);
    WeightedGraph inner(4);
    for (int u = 0; u < 4; ++u) inner.add_edge(u, (u + 1) % 4, w);
    ClusterInstanceOptions opts;
    opts.forced_inner = &inner;
    ClusterInstance inst = random_cluster_instance(m, rng, opts);
    SpectralDecomposition dec = decompose(inst.attached, m);

    RealPureState x = lift_state(inst, RealPureState::pair(4, 0, 1).vec());
    RealPureState y = lift_state(inst, RealPureState::pair(4, 3, 2).vec());
    auto certs = find_pst(dec, x, y);
    if (certs.empty() || certs.front().verdict != Verdict::Pst) {
      note(false, "expected PST instance certifies", 1.0);
      continue;
    }
    ++positives;
    double tau = certs.front().tau;

    bool sc = strong_cospectral(dec, x, y).has_value();
    note(sc, "PST implies strong cospectrality", sc ? 0.0 : 1.0);

    TransferCertificate back = check_pst_at(dec, x, x, 2 * tau, 1e-8);
    note(back.verdict == Verdict::Periodic,
         "PST implies periodicity at twice the time", back.residual);

    const auto& mem = inst.cluster.members;
    for (size_t a = 0; a < mem.size(); ++a)
      for (size_t b = a + 1; b < mem.size(); ++b) {
        RealPureState z = pair_state(inst.attached, mem[a], mem[b]);
        TransferCertificate c = check_pst_at(dec, x, z, tau, 1e-9);
        if (c.verdict == Verdict::Pst) {
          double align = std::min((z.vec() - y.vec()).norm(),
                                  (z.vec() + y.vec()).norm());
          note(align <= 1e-6, "PST is monogamous at a fixed time", align);
        }
      }
  }
  note(positives >= 100, "at least 100 certifying instances",
       positives >= 100 ? 0.0 : 1.0);

  char buf[64];
  std::snprintf(buf, sizeof(buf), "worst residual %.3e", worst);
  report(12, "global properties on seeded random instances", pass, buf);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();

  std::printf("acceptance: %d of 12 criteria passed\n", 12 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
