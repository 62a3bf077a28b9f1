// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "taylor/taylor.hpp"

namespace pnet {

struct GenParams {
  std::uint64_t max_depth = 2;
  std::uint64_t max_boxes_per_level = 2;
  std::uint64_t max_cosize = 3;
  std::uint64_t max_ports = 30;
  bool allow_cuts = false;
  std::uint64_t seed = 0;
};

// Deterministic random PS within the stated bounds; nested boxes may route
// their doors through several levels.
Net random_net(const GenParams& params);

// Arbitrary pseudo-experiment with copy counts < max_copies (0 allowed).
PseudoExperiment random_pseudo(const Net& r, std::uint64_t max_copies, Rng& rng);

struct HetSample {
  Net r;
  std::uint64_t k = 0;
  PseudoExperiment e;
};

// Draw nets until make_k_heterogeneous at k = max(basis, k_floor) stays under
// the port cap; heterogeneous expansions grow double-exponentially with
// nesting, so sampling has to watch the width.
std::optional<HetSample> sample_feasible_het(GenParams params, std::uint64_t k_floor,
                                             std::uint64_t cap, std::uint64_t attempts);

}  // namespace pnet
