// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/net.hpp"

namespace pnet {

// Recursive isomorphism witness: a shallow bijection plus one witness per box.
struct IsoWitness {
  std::map<PortId, PortId> shallow;
  std::map<PortId, IsoWitness> boxes;

  PortPath map_path(const PortPath& p) const;
};

// Allowed images for selected port paths of the left net (used to pin door
// correspondences and the conclusion compatibility of iso_mod_box).
using PathConstraints = std::map<PortPath, std::set<PortPath>>;

// Backtracking search for a label/wire/axiom/cut/box/door preserving bijection.
// With fix_conclusions the shallow conclusions must map to themselves.
std::optional<IsoWitness> find_iso(const Net& a, const Net& b, bool fix_conclusions,
                                   const PathConstraints& constraints = {});

inline bool iso_check(const Net& a, const Net& b, bool fix_conclusions) {
  return find_iso(a, b, fix_conclusions).has_value();
}

// Field-by-field check that w really is an isomorphism a -> b.
bool verify_witness(const Net& a, const Net& b, const IsoWitness& w, bool fix_conclusions);

// U is matched against T with its shallow conclusions stripped; every
// conclusion of U must land on a port whose stripped target equals the
// corresponding door target of box o in S.
bool iso_mod_box(const Net& u, const Net& s, const PortId& o, const Net& t);

// Deterministic iso-invariant fingerprint (refinement-based); equal nets up to
// ~ (and up to == when fix_conclusions) get equal hashes.
std::uint64_t wl_hash(const Net& s, bool fix_conclusions);

// Compact deterministic serialization used as a sort key.
std::string structural_key(const Net& s);

}  // namespace pnet
