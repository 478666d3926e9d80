#ifndef GRPD_RANDOM_HPP_
#define GRPD_RANDOM_HPP_

#include <random>

#include "grpd/action.hpp"

namespace grpd {

// Knobs for the seeded instance generators used by the property suites.
struct RandomSpec {
  int max_groupoid = 16;        // cap on |G|
  int max_m = 8;                // cap on the idempotent count
  bool force_galois = false;    // fixed-point-free permutations
  bool force_orthogonal = false;
  bool global_only = false;     // skip the restriction step
  BaseRing base = BaseRing::rationals();
};

// Disjoint unions of coarse-times-group components with unique labels.
GroupoidPtr random_groupoid(std::mt19937_64& rng, int max_size);

// Global action assembled functorially: per connected component the isotropy
// group acts on cosets of a random subgroup (the regular representation when
// force_galois), transported to every object along random injections.
PartialAction random_global_action(std::mt19937_64& rng, const RandomSpec& spec);

// Standard restriction of a random global action to a random ideal (or the
// global action itself under global_only). Every output validates; under
// force_galois the output is Galois.
PartialAction random_action(std::mt19937_64& rng, const RandomSpec& spec);

}  // namespace grpd

#endif  // GRPD_RANDOM_HPP_
