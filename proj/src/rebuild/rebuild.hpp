// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "taylor/taylor.hpp"

namespace pnet {

struct RebuildState {
  Net term;
  MnChain chain;
  std::size_t level = 0;
};

// One inversion step: recover the boxes of the current level from the digit
// chain, the critical ports and the class counts of the bounded components,
// producing the next partial expansion up to ==.
RebuildState rebuild_step(const RebuildState& state);

// Iterate from a fully expanded heterogeneous term back to the source net.
Net rebuild(const Net& term0, std::uint64_t k);

// Recover the admissible base from the measures of a single-copy expansion
// term, then rebuild from the heterogeneous term.
Net rebuild_from_pair(const Net& term_one_exp, const Net& term_khet);

// Smallest base >= floor that writes every co-contraction arity as k^j, j>0.
std::uint64_t recover_base(const Net& term_khet, std::uint64_t floor_basis);

}  // namespace pnet
