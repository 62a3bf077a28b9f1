// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/net.hpp"

namespace pnet {

// One copy-choice per box, recursively. Runs of identical children are stored
// with a repeat count, so flat boxes taken k^j times stay cheap to hold.
struct PseudoExperiment;

struct PseudoCopies {
  std::shared_ptr<const PseudoExperiment> child;
  std::uint64_t count = 1;
};

struct PseudoExperiment {
  std::map<PortId, std::vector<PseudoCopies>> per_box;

  static PseudoCopies copies(PseudoExperiment child, std::uint64_t count);
  bool operator==(const PseudoExperiment& o) const;
};

bool operator==(const PseudoCopies& a, const PseudoCopies& b);

std::uint64_t copy_count(const PseudoExperiment& e, const PortId& box);  // |e(o)|

// The profile e#: every box path gets the set of copy counts it receives.
using Profile = std::map<std::vector<PortId>, std::set<std::uint64_t>>;
Profile e_sharp(const Net& r, const PseudoExperiment& e);

PseudoExperiment make_uniform(const Net& r, std::uint64_t n);

// Deterministic heterogeneous pseudo-experiment: box sites get the counts
// k^1, k^2, ... depth-first, in a seed-rotated order, so all copy counts are
// distinct powers of k across the whole tree.
PseudoExperiment make_k_heterogeneous(const Net& r, std::uint64_t k, std::uint64_t seed);

// All copy counts are powers k^j (j > 0); distinct boxes and distinct sibling
// copies have disjoint profiles, hereditarily.
bool is_k_heterogeneous(const Net& r, const PseudoExperiment& e, std::uint64_t k);

// Number of shallow ports the expansion at this level would have.
std::optional<std::uint64_t> expansion_width(const Net& r, const PseudoExperiment& e,
                                             std::uint64_t level, std::uint64_t cap);

struct ExpansionTerm {
  Net term;
  std::map<PortPath, PortPath> kappa;  // copy provenance, total on ports of term
  std::uint64_t level = 0;
};

// Replace every box of content depth >= level by its chosen copies; doors of
// the replaced copies become wires or doors onto the original targets.
ExpansionTerm expand(const Net& r, const PseudoExperiment& e, std::uint64_t level);

// Closed form for the arity a shallow port of r gets in the expansion.
std::uint64_t predicted_arity(const Net& r, const PseudoExperiment& e, std::uint64_t level,
                              const PortId& p);

// Digit chain: M[0] is the starting exponent set; |M[i]| written in base k
// gives digits[i], M[i+1] collects the nonzero digit positions above 0, and
// N[i] = M[i] \ M[i+1]. The chain stops at the first empty set.
struct MnChain {
  std::uint64_t k = 0;
  std::vector<std::set<std::uint64_t>> M;          // M.back() is empty
  std::vector<std::set<std::uint64_t>> N;          // N.size() == M.size() - 1
  std::vector<std::vector<std::uint32_t>> digits;  // base-k digits of |M[i]|
  std::size_t levels() const { return N.size(); }
};

MnChain mn_chain_from_exponents(std::set<std::uint64_t> exponents, std::uint64_t k);
MnChain mn_chain(const Profile& profile, std::uint64_t k);  // values must be powers of k

std::vector<std::uint32_t> base_k_digits(std::uint64_t value, std::uint64_t k);

// Shallow bang non-box ports keyed by the exponent of their arity; arities
// must be pairwise distinct powers k^j with j > 0.
std::map<std::uint64_t, PortId> bang_map(const Net& term, std::uint64_t k);
std::map<std::uint64_t, PortId> cocontraction_arity_exponents(const Net& term, std::uint64_t k);

// Exponential shallow ports whose arity has a nonzero digit at position j.
std::set<PortId> critical_ports(const Net& term, std::uint64_t k, std::uint64_t j);
std::set<PortId> critical_ports(const Net& term, std::uint64_t k,
                                const std::set<std::uint64_t>& js);

std::uint64_t basis(const Net& r);

struct UnitTermMeasures {
  std::uint64_t cosize = 0;
  std::uint64_t n_boxes = 0;      // co-contractions of the depth-0 term
  std::uint64_t n_invisible = 0;  // conclusion-free components
};

// Read off a term of the single-copy expansion; equals the measures of the
// source net.
UnitTermMeasures measures_from_one_term(const Net& term);

}  // namespace pnet
