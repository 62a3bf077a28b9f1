// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/net.hpp"

namespace pnet {

// Drop every box whose content depth is >= level, keeping the bare bang port.
Net restrict_leq(const Net& s, std::uint64_t level);

// The unique substructure with shallow ports P, erasing through the ports of
// Q: wires out of Q-exponential ports and cuts touching them are severed.
// Returns nothing if the induced restriction is not a well-formed net.
std::optional<Net> substructure(const Net& s, const std::set<PortId>& P, const std::set<PortId>& Q);

// Disjoint union; nets may share only shallow quest conclusions.
Net glue(const std::vector<Net>& nets);

// Extend the target function: shallow conclusions become wires, nested
// conclusions become extra doors of their outermost box. Targets must be
// shallow exponential non-box ports and no wire cycle may appear.
Net add_wires(const Net& s, const std::map<PortPath, PortId>& t);

struct Stripped {
  Net net;
  std::map<PortPath, PortId> removed;  // freed conclusion -> its old target
};

// Remove the shallow conclusions (all must be exponential non-box ports);
// ports that pointed at them become conclusions and the old targets are
// reported, so that add_wires(glue(...), removed) undoes the operation.
Stripped strip_shallow(const Net& s);

// Reroute the auxiliary doors of box o to fresh quest conclusions inside its
// content; phi maps each contraction under o to the fresh name carrying it.
Net add_contractions(const Net& s, const PortId& o, const std::map<PortId, PortId>& phi);

// Rename shallow ports through a partial injection (identity elsewhere).
Net rename_shallow(const Net& s, const std::map<PortId, PortId>& phi);

// <a, S> with an ordinal: every shallow port p becomes Copy(a, ordinal, p).
Net tag_shallow(const PortId& a, std::uint64_t ordinal, const Net& s);

}  // namespace pnet
