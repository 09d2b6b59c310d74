#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "pairwalk/expm.hpp"
#include "pairwalk/instances.hpp"
#include "pairwalk/spectral.hpp"

using namespace pairwalk;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("eigendecomposition of K2, P3 and C4") {
  SpectralDecomposition k2 = decompose(complete(2), Model::Adjacency);
  REQUIRE(k2.size() == 2);
  CHECK(k2.eigenvalue(0) == doctest::Approx(-1.0));
  CHECK(k2.eigenvalue(1) == doctest::Approx(1.0));
  Eigen::MatrixXd swap(2, 2);
  swap << 0, 1, 1, 0;
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(2, 2);
  CHECK((k2.projection(0) - 0.5 * (id - swap)).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((k2.projection(1) - 0.5 * (id + swap)).cwiseAbs().maxCoeff() <= 1e-12);

  SpectralDecomposition p3 = decompose(path(3), Model::Laplacian);
  REQUIRE(p3.size() == 3);
  CHECK(p3.eigenvalue(0) == doctest::Approx(0.0));
  CHECK(p3.eigenvalue(1) == doctest::Approx(1.0));
  CHECK(p3.eigenvalue(2) == doctest::Approx(3.0));

  SpectralDecomposition c4 = decompose(cycle(4), Model::Adjacency);
  REQUIRE(c4.size() == 3);
  CHECK(c4.eigenvalue(0) == doctest::Approx(-2.0));
  CHECK(c4.eigenvalue(1) == doctest::Approx(0.0));
  CHECK(c4.eigenvalue(2) == doctest::Approx(2.0));
  CHECK(c4.multiplicity(1) == 2);
}

TEST_CASE("non-symmetric input is rejected") {
  Eigen::MatrixXd bad(2, 2);
  bad << 0, 1, 2, 0;
  CHECK_THROWS_AS(SpectralDecomposition(bad, Model::Adjacency),
                  std::invalid_argument);
}

TEST_CASE("projection resolution of identity and idempotence") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 20; ++i) {
    WeightedGraph g = random_graph(6 + i % 4, 0.5, rng, i % 2 == 0);
    SpectralDecomposition dec = decompose(g, kAllModels[i % 3]);
    int n = dec.dim();
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < dec.size(); ++k) {
      const Eigen::MatrixXd& e = dec.projection(k);
      sum += e;
      CHECK((e * e - e).cwiseAbs().maxCoeff() <= 1e-9);
      for (int l = 0; l < k; ++l)
        CHECK((e * dec.projection(l)).cwiseAbs().maxCoeff() <= 1e-9);
    }
    CHECK((sum - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <=
          1e-9);
    // Reconstruction.
    Eigen::MatrixXd recon = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < dec.size(); ++k)
      recon += dec.eigenvalue(k) * dec.projection(k);
    CHECK((recon - build_matrix(g, kAllModels[i % 3])).cwiseAbs().maxCoeff() <=
          1e-8 * std::max(1.0, dec.scale()));
  }
}

TEST_CASE("supports") {
  WeightedGraph c4 = cycle(4);
  SpectralDecomposition dec = decompose(c4, Model::Adjacency);
  Support s = support(dec, pair_state(c4, 0, 1));
  REQUIRE(s.indices.size() == 2);
  CHECK(dec.eigenvalue(s.indices[0]) == doctest::Approx(-2.0));
  CHECK(dec.eigenvalue(s.indices[1]) == doctest::Approx(0.0));
  double total = 0.0;
  for (double norm : s.norms) total += norm * norm;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-9));

  // An eigenvector has singleton support.
  WeightedGraph k5 = complete(5);
  SpectralDecomposition dec5 = decompose(k5, Model::Adjacency);
  Support sp = support(dec5, pair_state(k5, 1, 3));
  REQUIRE(sp.indices.size() == 1);
  CHECK(dec5.eigenvalue(sp.indices[0]) == doctest::Approx(-1.0));
  CHECK(is_fixed(dec5, pair_state(k5, 1, 3)));

  CHECK_FALSE(is_fixed(dec, pair_state(c4, 0, 1)));
  WeightedGraph p3 = path(3);
  RealPureState flat = RealPureState::general(Eigen::VectorXd::Ones(3));
  CHECK(is_fixed(decompose(p3, Model::Laplacian), flat));
}

TEST_CASE("borderline support components are flagged") {
  // Mix an eigenvector with a 3e-9 sliver of another one: the sliver sits
  // inside the decade around the 1e-8 threshold.
  WeightedGraph k2 = complete(2);
  SpectralDecomposition dec = decompose(k2, Model::Adjacency);
  Eigen::VectorXd v(2);
  double eps = 3e-9;
  v << 1.0 + eps, -1.0 + eps;  // (1,-1) plus eps*(1,1), then normalized
  Support s = support(dec, RealPureState::general(v));
  CHECK(s.indices.size() == 1);
  REQUIRE(s.borderline.size() == 1);
  CHECK(dec.eigenvalue(s.borderline.front()) == doctest::Approx(1.0));
}

TEST_CASE("evolve closed forms") {
  WeightedGraph k2 = complete(2);
  SpectralDecomposition dec = decompose(k2, Model::Adjacency);

  RealPureState e0 = vertex_state(k2, 0);
  CHECK((dec.evolve(0.0, e0) - e0.vec().cast<Complex>()).norm() <= 1e-14);

  Eigen::VectorXcd at = dec.evolve(kPi / 2, e0);
  CHECK(std::abs(at[0]) <= 1e-12);
  CHECK(std::abs(at[1] - Complex(0, 1)) <= 1e-12);

  WeightedGraph c4 = cycle(4);
  SpectralDecomposition dec4 = decompose(c4, Model::Adjacency);
  Eigen::VectorXcd moved = dec4.evolve(kPi / 2, pair_state(c4, 0, 1));
  Eigen::VectorXd expect = pair_state(c4, 3, 2).vec();
  CHECK((moved - expect.cast<Complex>()).norm() <= 1e-12);
  // Same point via the series exponential, summed independently.
  Eigen::VectorXcd via_series = series_evolve(
      build_matrix(c4, Model::Adjacency), kPi / 2, pair_state(c4, 0, 1).vec());
  CHECK((via_series - expect.cast<Complex>()).norm() <= 1e-12);
}

TEST_CASE("fidelity basics") {
  WeightedGraph c4 = cycle(4);
  SpectralDecomposition dec = decompose(c4, Model::Adjacency);
  RealPureState x = pair_state(c4, 0, 1);
  CHECK(fidelity(dec, 0.0, x, x) == doctest::Approx(1.0).epsilon(1e-12));
  // Time reversal swaps the roles of the two states.
  RealPureState y = pair_state(c4, 3, 2);
  CHECK(fidelity(dec, 1.3, x, y) ==
        doctest::Approx(fidelity(dec, -1.3, y, x)).epsilon(1e-12));
  CHECK(fidelity(dec, kPi / 2, x, y) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("unitarity and the group law on random instances") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> tdist(-10.0, 10.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int i = 0; i < 25; ++i) {
    WeightedGraph g = random_graph(5 + i % 4, 0.5, rng, true);
    SpectralDecomposition dec = decompose(g, kAllModels[i % 3]);
    Eigen::VectorXd x(g.order());
    for (int k = 0; k < g.order(); ++k) x[k] = gauss(rng);
    x.normalize();

    double t = tdist(rng), s = tdist(rng);
    Eigen::VectorXcd once = dec.evolve(t + s, x);
    CHECK(once.norm() == doctest::Approx(1.0).epsilon(1e-9));
    Eigen::VectorXcd twice = dec.evolve(t, dec.evolve(s, x));
    CHECK((once - twice).norm() <= 1e-8);
  }
}

TEST_CASE("spectral evolution agrees with the series exponential") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> tdist(-10.0, 10.0);
  for (int i = 0; i < 20; ++i) {
    WeightedGraph g = random_graph(3 + i % 6, 0.6, rng, true);
    Model m = kAllModels[i % 3];
    SpectralDecomposition dec = decompose(g, m);
    Eigen::MatrixXd mat = build_matrix(g, m);
    Eigen::VectorXd x = random_balanced_vector(g.order(), rng);
    double t = tdist(rng);
    CHECK((dec.evolve(t, x) - series_evolve(mat, t, x)).cwiseAbs().maxCoeff() <=
          1e-7);
  }
}

TEST_CASE("cluster overlay power identity") {
  // [M(G(H))]^k restricted to the cluster equals the lifted powers of
  // delta 1^T z I + M(H) on balanced vectors.
  std::mt19937_64 rng(59);
  for (int i = 0; i < 12; ++i) {
    Model m = kAllModels[i % 3];
    ClusterInstance inst = random_cluster_instance(m, rng);
    const auto& members = inst.cluster.members;
    int c = static_cast<int>(members.size());

    Eigen::VectorXd x = random_balanced_vector(c, rng);
    Eigen::VectorXd lifted = lift_state(inst, x).vec();

    Eigen::MatrixXd mg = build_matrix(inst.attached, m);
    Eigen::MatrixXd inner_block =
        delta(m) * inst.z_sum *
            Eigen::MatrixXd::Identity(c, c) +
        build_matrix(inst.inner, m);

    Eigen::VectorXd big = lifted;
    Eigen::VectorXd small = x;
    for (int k = 1; k <= 6; ++k) {
      big = mg * big;
      small = inner_block * small;
      for (int j = 0; j < c; ++j)
        CHECK(big[members[j]] ==
              doctest::Approx(small[j]).epsilon(1e-9).scale(
                  std::max(1.0, small.cwiseAbs().maxCoeff())));
    }
  }
}

TEST_CASE("cluster overlay shifts the support uniformly") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 9; ++i) {
    Model m = kAllModels[i % 3];
    ClusterInstance inst = random_cluster_instance(m, rng);
    int c = static_cast<int>(inst.cluster.members.size());
    Eigen::VectorXd x = random_balanced_vector(c, rng);

    SpectralDecomposition dec_h = decompose(inst.inner, m);
    SpectralDecomposition dec_g = decompose(inst.attached, m);
    Support sup_h = support(dec_h, RealPureState::general(x));
    Support sup_g = support(dec_g, lift_state(inst, x));

    REQUIRE(sup_h.indices.size() == sup_g.indices.size());
    double shift = delta(m) * inst.z_sum;
    for (size_t k = 0; k < sup_h.indices.size(); ++k) {
      double expect = shift + dec_h.eigenvalue(sup_h.indices[k]);
      CHECK(dec_g.eigenvalue(sup_g.indices[k]) ==
            doctest::Approx(expect).epsilon(1e-8));
    }
  }
}

TEST_CASE("Cartesian evolution factorizes") {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 6; ++i) {
    WeightedGraph g1 = random_graph(3, 0.7, rng, true);
    WeightedGraph g2 = random_graph(4, 0.6, rng, true);
    WeightedGraph prod = cartesian(g1, g2);
    Eigen::VectorXd u = random_balanced_vector(3, rng);
    Eigen::VectorXd v = random_balanced_vector(4, rng);
    double t = std::uniform_real_distribution<double>(-5.0, 5.0)(rng);

    Eigen::VectorXd uv(12);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 4; ++b) uv[product_index(a, b, 4)] = u[a] * v[b];

    for (Model m : kAllModels) {
      Eigen::VectorXcd left = decompose(prod, m).evolve(t, uv);
      Eigen::VectorXcd eu = decompose(g1, m).evolve(t, u);
      Eigen::VectorXcd ev = decompose(g2, m).evolve(t, v);
      Eigen::VectorXcd expect(12);
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 4; ++b)
          expect[product_index(a, b, 4)] = eu[a] * ev[b];
      CHECK((left - expect).cwiseAbs().maxCoeff() <= 1e-8);
    }
  }
}
