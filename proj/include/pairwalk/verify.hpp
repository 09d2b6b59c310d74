#ifndef PAIRWALK_VERIFY_HPP
#define PAIRWALK_VERIFY_HPP

#include <string>
#include <vector>

namespace pairwalk {

struct VerifyCase {
  std::string instance;  // stable id, e.g. "G1[len=2]/A"
  std::string expected;
  bool pass = false;
  double residual = 0.0;
};

struct VerifySuiteReport {
  std::string suite;
  std::vector<VerifyCase> cases;

  int passed() const;
  int failed() const;
  bool all_passed() const { return failed() == 0; }
  /// Cases whose instance id starts with `prefix`.
  VerifySuiteReport filter(const std::string& prefix) const;
};

/// Suite names accepted by run_suite (excluding "all").
const std::vector<std::string>& suite_names();

/// Runs one named theorem suite (or "all"). Seed drives the randomized
/// instances; the named fixed instances do not move.
VerifySuiteReport run_suite(const std::string& name,
                            unsigned long long seed = 0);

VerifySuiteReport suite_cluster_lemma(unsigned long long seed);
VerifySuiteReport suite_complement_lemma(unsigned long long seed);
VerifySuiteReport suite_thm_3_1(unsigned long long seed);
VerifySuiteReport suite_thm_5_1();
VerifySuiteReport suite_prop_5_2();
VerifySuiteReport suite_pgst_5_3(unsigned long long seed);
VerifySuiteReport suite_coherent_6();
VerifySuiteReport suite_seqjoin_7();
VerifySuiteReport suite_complement_8(unsigned long long seed);
VerifySuiteReport suite_products_9(unsigned long long seed);

}  // namespace pairwalk

#endif
