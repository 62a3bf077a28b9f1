// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <set>
#include <vector>

#include "core/base.hpp"

namespace pnet {

enum class Label : std::uint8_t { Tensor, Par, One, Bot, Bang, Quest, Ax };

const char* label_name(Label l);
std::optional<Label> label_from_name(const std::string& s);
inline bool is_multiplicative(Label l) { return l == Label::Tensor || l == Label::Par; }
inline bool is_exponential(Label l) { return l == Label::Bang || l == Label::Quest; }
inline bool is_constant(Label l) { return l == Label::One || l == Label::Bot; }

// The depth-0 layer of a net: labelled ports, wires (identified with their
// source port), left-premise marks, axiom pairs and cut pairs.
struct GroundNet {
  std::map<PortId, Label> labels;
  std::map<PortId, PortId> wires;  // source -> target
  std::set<PortId> lefts;
  std::set<PortPair> axioms;
  std::set<PortPair> cuts;

  bool has_port(const PortId& p) const { return labels.count(p) != 0; }
  Label label(const PortId& p) const;
  bool is_wire(const PortId& p) const { return wires.count(p) != 0; }
  std::set<PortId> conclusions() const;  // not a wire, not in a cut
  std::uint64_t arity(const PortId& p) const;
  std::vector<PortId> premises(const PortId& p) const;  // sorted wire sources
  bool acyclic() const;

  bool operator==(const GroundNet&) const = default;
};

// One carrier for ground-structures, (differential) in-PS's and PS's; which
// class a value belongs to is a matter of validation mode. A box is a shallow
// bang port with a content net; its doors map conclusions of the content
// (shallow or nested) to shallow targets here. The unique door whose target is
// the box itself is the principal one.
struct Net {
  GroundNet ground;
  std::map<PortId, Net> contents;                       // box -> content
  std::map<PortId, std::map<PortPath, PortId>> doors;   // box -> (content conclusion -> target)

  bool is_box(const PortId& p) const { return contents.count(p) != 0; }
  const Net& content(const PortId& box) const;
  bool operator==(const Net&) const = default;
};

// Accessors on the combined structure.

std::uint64_t arity(const Net& s, const PortId& p);  // wire premises + doors landing on p
std::uint64_t depth(const Net& s);
std::uint64_t cosize(const Net& s);
std::uint64_t box_count(const Net& s);  // boxes at all depths

std::set<PortId> shallow_conclusions(const Net& s);
std::vector<PortPath> conclusions(const Net& s);  // shallow + undoored nested ones, sorted
bool is_conclusion(const Net& s, const PortPath& path);

// Doors of one box: the content conclusions that are in the door map.
std::vector<PortPath> temporary_conclusions(const Net& s, const PortId& box);
// Principal door of a box, if well formed: the unique door with target == box.
std::optional<PortPath> principal_door(const Net& s, const PortId& box);
// Shallow targets of the auxiliary doors of a box (the box itself excluded).
std::set<PortId> contractions_under(const Net& s, const PortId& box);

std::vector<PortPath> all_port_paths(const Net& s);  // every port at every depth, sorted
const Net& net_at(const Net& s, const std::vector<PortId>& box_path);
bool has_port_path(const Net& s, const PortPath& p);
std::vector<std::vector<PortId>> box_paths(const Net& s);  // all boxes as paths, sorted
std::uint64_t content_depth(const Net& s, const PortId& box);
bool has_cuts(const Net& s);  // at any depth

// Ports of depth > level together with the deepest enclosing box of content
// depth >= level ("b^{>=level}"), as (port path, box path) pairs.
std::vector<std::pair<PortPath, std::vector<PortId>>> deep_ports_with_guard(const Net& s,
                                                                            std::uint64_t level);

enum class Mode { Ground, SimpleDiff, InPs, Ps, DiffPs };
const char* mode_name(Mode m);
std::optional<Mode> mode_from_name(const std::string& s);

struct ValidationReport {
  struct Item {
    std::string where;  // box path prefix, empty at depth 0
    std::string rule;
    std::string detail;
  };
  std::vector<Item> items;
  bool ok() const { return items.empty(); }
  std::string to_string() const;
};

ValidationReport validate(const Net& s, Mode mode);

struct Metrics {
  std::uint64_t depth = 0;
  std::uint64_t cosize = 0;
  std::uint64_t n_boxes = 0;
  std::set<PortId> shallow_conclusions;
  std::vector<PortPath> all_conclusions;
};

Metrics metrics(const Net& s);

}  // namespace pnet
