#ifndef GRPD_TESTS_PROPERTIES_HPP_
#define GRPD_TESTS_PROPERTIES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "grpd/random.hpp"

// Seeded property suites shared by the test binaries and the fuzz subcommand.
namespace grpd::props {

struct Report {
  int instances = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Oracle equivalences: Galois criterion vs Gram system, invariants vs linear
// kernel, alpha-strong vs exhaustive search, subgroupoid enumeration vs brute
// force, partition meet vs span intersection.
Report run_oracle_suite(std::uint64_t seed, int count);

// Theorem-shaped properties: composition identities, globalization clauses,
// Galois preservation under orthogonalization/globalization, trace identity,
// separability/strength characterization, the three correspondence round
// trips and the join-invariance of similarity classes.
Report run_theorem_suite(std::uint64_t seed, int count);

}  // namespace grpd::props

#endif  // GRPD_TESTS_PROPERTIES_HPP_
