#include <doctest.h>

#include <cmath>

#include "pairwalk/graph.hpp"
#include "pairwalk/instances.hpp"
#include "pairwalk/states.hpp"

using namespace pairwalk;

TEST_CASE("graph invariants are enforced") {
  WeightedGraph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);  // duplicate pair
  CHECK_THROWS_AS(g.add_edge(0, 2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 2, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
  CHECK(g.has_edge(1, 0));
  CHECK(g.weight(0, 1) == 1.0);
  CHECK(g.weight(0, 2) == 0.0);
}

TEST_CASE("build_matrix on the one-edge graphs") {
  WeightedGraph k2 = complete(2);
  Eigen::MatrixXd a = build_matrix(k2, Model::Adjacency);
  CHECK(a(0, 0) == 0.0);
  CHECK(a(0, 1) == 1.0);
  CHECK(a(1, 0) == 1.0);

  WeightedGraph weighted(2);
  weighted.add_edge(0, 1, 2.5);
  Eigen::MatrixXd q = build_matrix(weighted, Model::SignlessLaplacian);
  CHECK(q(0, 0) == 2.5);
  CHECK(q(0, 1) == 2.5);
  CHECK(q(1, 1) == 2.5);
}

TEST_CASE("Laplacian of the 3-path") {
  Eigen::MatrixXd l = build_matrix(path(3), Model::Laplacian);
  Eigen::MatrixXd expect(3, 3);
  expect << 1, -1, 0, -1, 2, -1, 0, -1, 1;
  CHECK((l - expect).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("Hamiltonians are symmetric and the Laplacian annihilates ones") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    WeightedGraph g = random_graph(8, 0.5, rng, true);
    for (Model m : kAllModels) {
      Eigen::MatrixXd mat = build_matrix(g, m);
      CHECK((mat - mat.transpose()).cwiseAbs().maxCoeff() == 0.0);
    }
    Eigen::VectorXd ones = Eigen::VectorXd::Ones(8);
    CHECK((build_matrix(g, Model::Laplacian) * ones).cwiseAbs().maxCoeff() <=
          1e-12);
  }
}

TEST_CASE("zeta and delta triples") {
  CHECK(zeta(Model::Adjacency) == 1);
  CHECK(zeta(Model::Laplacian) == -1);
  CHECK(zeta(Model::SignlessLaplacian) == 1);
  CHECK(delta(Model::Adjacency) == 0);
  CHECK(delta(Model::Laplacian) == 1);
  CHECK(delta(Model::SignlessLaplacian) == 1);
}

TEST_CASE("cluster detection on bipartite families") {
  auto clusters = detect_clusters(complete_bipartite(2, 3));
  REQUIRE(clusters.size() == 2);
  CHECK(clusters[0].members == std::vector<int>{0, 1});
  CHECK(clusters[0].shared == std::vector<int>{2, 3, 4});
  CHECK(clusters[1].members == std::vector<int>{2, 3, 4});
  CHECK(clusters[1].weights.isOnes());

  CHECK(detect_clusters(complete(3)).empty());

  auto star = detect_clusters(complete_bipartite(1, 4));
  REQUIRE(star.size() == 1);
  CHECK(star[0].members == std::vector<int>{1, 2, 3, 4});
  CHECK(star[0].shared == std::vector<int>{0});
}

TEST_CASE("detected clusters re-validate against the definition") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 25; ++i) {
    ClusterInstance inst =
        random_cluster_instance(kAllModels[i % 3], rng);
    for (const Cluster& c : detect_clusters(inst.base))
      CHECK(validate_cluster(inst.base, c));
    // The planted cluster is among the detected ones.
    bool found = false;
    for (const Cluster& c : detect_clusters(inst.base))
      if (c.members == inst.cluster.members && c.shared == inst.cluster.shared)
        found = true;
    CHECK(found);
  }
}

TEST_CASE("cluster detection commutes with relabeling") {
  WeightedGraph g = complete_bipartite(2, 3);
  // Relabel by the permutation 0..4 -> 4..0.
  WeightedGraph relabeled(5);
  for (const Edge& e : g.edges()) relabeled.add_edge(4 - e.u, 4 - e.v, e.w);

  auto orig = detect_clusters(g);
  auto perm = detect_clusters(relabeled);
  REQUIRE(orig.size() == perm.size());
  for (const Cluster& c : orig) {
    std::vector<int> mapped;
    for (int v : c.members) mapped.push_back(4 - v);
    std::sort(mapped.begin(), mapped.end());
    bool found = false;
    for (const Cluster& p : perm) found = found || p.members == mapped;
    CHECK(found);
  }
}

TEST_CASE("pair states") {
  WeightedGraph g(4);
  RealPureState x = pair_state(g, 0, 1);
  CHECK(x.vec()[0] == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(x.vec()[1] == doctest::Approx(-1 / std::sqrt(2.0)));
  CHECK(x.vec()[2] == 0.0);
  CHECK(x.vec().norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((pair_state(g, 0, 1).vec() + pair_state(g, 1, 0).vec()).norm() == 0.0);
  CHECK_THROWS_AS(pair_state(g, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(pair_state(g, 0, 7), std::invalid_argument);
}

TEST_CASE("s-pair states") {
  WeightedGraph g3(3);
  RealPureState x = s_pair_state(g3, 0, 2, 2.0);
  CHECK(x.vec()[0] == doctest::Approx(1 / std::sqrt(5.0)));
  CHECK(x.vec()[2] == doctest::Approx(2 / std::sqrt(5.0)));

  WeightedGraph g2(2);
  RealPureState flat = s_pair_state(g2, 0, 1, 1.0);
  CHECK(flat.vec()[0] == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(flat.vec()[1] == doctest::Approx(1 / std::sqrt(2.0)));

  CHECK((s_pair_state(g2, 0, 1, -1.0).vec() - pair_state(g2, 0, 1).vec())
            .norm() == 0.0);
  CHECK_THROWS_AS(s_pair_state(g2, 0, 1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(s_pair_state(g2, 0, 0, 1.0), std::invalid_argument);
}
