// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/net.hpp"

namespace pnet {

// Weak connectedness at depth 0: axiom or cut partners, wire endpoints, and
// co-targets of one box's doors (the box port included via its principal).
bool coherent(const Net& s, const PortId& p, const PortId& q);

// Undirected adjacency realizing the relation above.
std::map<PortId, std::set<PortId>> coherence_graph(const Net& s);

struct Component {
  Net net;
  std::set<PortId> ports;     // shallow ports, boundary included
  std::set<PortId> interior;  // ports not in the boundary set
};

struct ComponentSet {
  std::vector<Component> members;  // sorted by structural key
  std::set<PortId> boundary;
  std::uint64_t k = 0;
};

// Components connected through ports not in q, with conclusions inside q and
// cosize < k; computed by flood fill from non-q seeds that never crosses q.
ComponentSet closed_components(const Net& s, const std::set<PortId>& q, std::uint64_t k);

// Plain connected components (q empty, no cosize bound); their glue is s.
std::vector<Net> connected_components(const Net& s);
Net component_of(const Net& s, const PortId& p);

// Conclusion-free components, summed over all box contents.
std::uint64_t nb_invisible(const Net& s);

// Partition under isomorphism fixing shallow conclusions. Classes are sorted
// by their least member key; members are sorted within a class.
std::vector<std::vector<Net>> partition_mod_equiv(const std::vector<Net>& nets);

}  // namespace pnet
