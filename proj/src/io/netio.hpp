// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/net.hpp"
#include "relsem/relsem.hpp"

namespace pnet {

// Textual form:
//   (net (ports (p label)*) (wires (src -> dst [:left])*)
//        (axioms (a b)*) (cuts (a b)*)
//        (boxes (box o <net> (doors (concl -> target)*))*))
// Copy ids print as box.ordinal.inner; nested door conclusions join their
// box chain with ':'. Output is canonical: fields are sorted.
Net parse_net(const std::string& text);
std::string serialize_net(const Net& s);

PortId parse_port_id(const std::string& token);
PortPath parse_port_path(const std::string& token);

std::string point_to_string(const Point& x);

}  // namespace pnet
