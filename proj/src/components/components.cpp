// SPDX-License-Identifier: Apache-2.0
#include "components/components.hpp"

#include <algorithm>

#include "core/iso.hpp"
#include "core/ops.hpp"

namespace pnet {

std::map<PortId, std::set<PortId>> coherence_graph(const Net& s) {
  std::map<PortId, std::set<PortId>> g;
  for (auto& [p, l] : s.ground.labels) {
    (void)l;
    g[p];
  }
  auto link = [&](const PortId& a, const PortId& b) {
    g[a].insert(b);
    g[b].insert(a);
  };
  for (auto& [w, t] : s.ground.wires) link(w, t);
  for (auto& a : s.ground.axioms) link(a.a, a.b);
  for (auto& c : s.ground.cuts) link(c.a, c.b);
  for (auto& [o, ds] : s.doors) {
    std::set<PortId> targets;
    for (auto& [path, tgt] : ds) {
      (void)path;
      targets.insert(tgt);
    }
    for (auto& x : targets)
      for (auto& y : targets)
        if (!(x == y)) link(x, y);
  }
  return g;
}

bool coherent(const Net& s, const PortId& p, const PortId& q) {
  if (s.ground.wires.count(p) && s.ground.wires.at(p) == q) return true;
  if (s.ground.wires.count(q) && s.ground.wires.at(q) == p) return true;
  PortPair pair = PortPair::make(p, q);
  if (s.ground.axioms.count(pair) || s.ground.cuts.count(pair)) return true;
  for (auto& [o, ds] : s.doors) {
    (void)o;
    bool has_p = false, has_q = false;
    for (auto& [path, tgt] : ds) {
      (void)path;
      if (tgt == p) has_p = true;
      if (tgt == q) has_q = true;
    }
    if (has_p && has_q) return true;
  }
  return false;
}

namespace {

// Flood-fill classes of non-q ports; q ports attach as boundary only.
std::vector<std::pair<std::set<PortId>, std::set<PortId>>> interior_classes(
    const Net& s, const std::set<PortId>& q) {
  auto g = coherence_graph(s);
  std::set<PortId> seen;
  std::vector<std::pair<std::set<PortId>, std::set<PortId>>> out;  // (interior, boundary)
  for (auto& [seed, nbrs] : g) {
    (void)nbrs;
    if (q.count(seed) || seen.count(seed)) continue;
    std::set<PortId> interior, boundary;
    std::vector<PortId> stack{seed};
    seen.insert(seed);
    interior.insert(seed);
    while (!stack.empty()) {
      PortId p = stack.back();
      stack.pop_back();
      for (auto& n : g.at(p)) {
        if (q.count(n)) {
          boundary.insert(n);
          continue;
        }
        if (seen.insert(n).second) {
          interior.insert(n);
          stack.push_back(n);
        }
      }
    }
    out.emplace_back(std::move(interior), std::move(boundary));
  }
  return out;
}

}  // namespace

ComponentSet closed_components(const Net& s, const std::set<PortId>& q, std::uint64_t k) {
  for (auto& p : q)
    if (!s.ground.has_port(p) || !is_exponential(s.ground.label(p)))
      throw Error(Err::Precondition, "boundary port is not an exponential shallow port: " + p.str());
  ComponentSet out;
  out.boundary = q;
  out.k = k;
  for (auto& [interior, boundary] : interior_classes(s, q)) {
    std::set<PortId> ports = interior;
    ports.insert(boundary.begin(), boundary.end());
    auto sub = substructure(s, ports, q);
    if (!sub) continue;
    if (cosize(*sub) >= k) continue;
    bool concl_ok = true;
    for (auto& c : sub->ground.conclusions())
      if (!q.count(c)) concl_ok = false;
    if (!concl_ok) continue;
    Component comp;
    comp.net = std::move(*sub);
    comp.ports = std::move(ports);
    comp.interior = interior;
    out.members.push_back(std::move(comp));
  }
  std::sort(out.members.begin(), out.members.end(), [](const Component& a, const Component& b) {
    return structural_key(a.net) < structural_key(b.net);
  });
  return out;
}

std::vector<Net> connected_components(const Net& s) {
  std::vector<Net> out;
  for (auto& [interior, boundary] : interior_classes(s, {})) {
    (void)boundary;
    auto sub = substructure(s, interior, {});
    if (!sub) throw Error(Err::Internal, "component restriction failed");
    out.push_back(std::move(*sub));
  }
  std::sort(out.begin(), out.end(),
            [](const Net& a, const Net& b) { return structural_key(a) < structural_key(b); });
  return out;
}

Net component_of(const Net& s, const PortId& p) {
  for (auto& c : connected_components(s))
    if (c.ground.has_port(p)) return c;
  throw Error(Err::UnknownPort, "no component contains " + p.str());
}

std::uint64_t nb_invisible(const Net& s) {
  std::uint64_t n = 0;
  for (auto& c : connected_components(s))
    if (conclusions(c).empty()) ++n;
  for (auto& [o, c] : s.contents) {
    (void)o;
    n += nb_invisible(c);
  }
  return n;
}

std::vector<std::vector<Net>> partition_mod_equiv(const std::vector<Net>& nets) {
  struct Bucket {
    std::vector<std::pair<std::string, const Net*>> reps;  // class representative keys
    std::vector<std::vector<const Net*>> classes;
  };
  std::map<std::pair<std::uint64_t, std::string>, Bucket> buckets;
  for (auto& n : nets) {
    std::string concl;
    for (auto& c : n.ground.conclusions()) concl += c.str() + ";";
    auto key = std::make_pair(wl_hash(n, true), concl);
    auto& bucket = buckets[key];
    bool placed = false;
    for (std::size_t i = 0; i < bucket.reps.size() && !placed; ++i) {
      if (iso_check(*bucket.reps[i].second, n, true)) {
        bucket.classes[i].push_back(&n);
        placed = true;
      }
    }
    if (!placed) {
      bucket.reps.emplace_back(structural_key(n), &n);
      bucket.classes.push_back({&n});
    }
  }
  std::vector<std::vector<Net>> out;
  for (auto& [key, bucket] : buckets) {
    (void)key;
    for (auto& cls : bucket.classes) {
      std::vector<Net> group;
      group.reserve(cls.size());
      for (auto* n : cls) group.push_back(*n);
      std::sort(group.begin(), group.end(), [](const Net& a, const Net& b) {
        return structural_key(a) < structural_key(b);
      });
      out.push_back(std::move(group));
    }
  }
  std::sort(out.begin(), out.end(), [](const std::vector<Net>& a, const std::vector<Net>& b) {
    return structural_key(a.front()) < structural_key(b.front());
  });
  return out;
}

}  // namespace pnet
