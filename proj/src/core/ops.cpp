// SPDX-License-Identifier: Apache-2.0
#include "core/ops.hpp"

#include <algorithm>

namespace pnet {

Net restrict_leq(const Net& s, std::uint64_t level) {
  Net out;
  out.ground = s.ground;
  for (auto& [o, c] : s.contents) {
    if (depth(c) < level) {
      out.contents.emplace(o, c);
      auto d = s.doors.find(o);
      if (d != s.doors.end()) out.doors.emplace(o, d->second);
    }
  }
  return out;
}

std::optional<Net> substructure(const Net& s, const std::set<PortId>& P,
                                const std::set<PortId>& Q) {
  Net out;
  const GroundNet& g = s.ground;
  auto erased = [&](const PortId& p) {
    return Q.count(p) && g.has_port(p) && is_exponential(g.label(p));
  };
  for (auto& p : P) {
    if (!g.has_port(p)) return std::nullopt;
    out.ground.labels.emplace(p, g.label(p));
  }
  for (auto& [w, t] : g.wires) {
    if (!P.count(w) || erased(w)) continue;
    if (!P.count(t)) continue;
    out.ground.wires.emplace(w, t);
    if (g.lefts.count(w)) out.ground.lefts.insert(w);
  }
  for (auto& a : g.axioms)
    if (P.count(a.a) && P.count(a.b)) out.ground.axioms.insert(a);
  for (auto& c : g.cuts)
    if (P.count(c.a) && !erased(c.a) && P.count(c.b) && !erased(c.b)) out.ground.cuts.insert(c);
  for (auto& [o, c] : s.contents) {
    if (!P.count(o)) continue;
    out.contents.emplace(o, c);
    auto d = s.doors.find(o);
    if (d != s.doors.end()) {
      for (auto& [path, tgt] : d->second)
        if (tgt != o && !P.count(tgt)) return std::nullopt;  // door would dangle
      out.doors.emplace(o, d->second);
    }
  }
  // The restriction must still be a pre-net: multiplicative ports keep both
  // premises and axiom endpoints keep their partner.
  for (auto& p : P) {
    Label l = g.label(p);
    if (is_multiplicative(l) && out.ground.arity(p) != 2) return std::nullopt;
    if (l == Label::Ax) {
      bool covered = false;
      for (auto& a : out.ground.axioms)
        if (a.contains(p)) covered = true;
      if (!covered) return std::nullopt;
    }
  }
  return out;
}

Net glue(const std::vector<Net>& nets) {
  for (std::size_t i = 0; i < nets.size(); ++i) {
    for (std::size_t j = i + 1; j < nets.size(); ++j) {
      const Net &a = nets[i], &b = nets[j];
      for (auto& [p, l] : a.ground.labels) {
        if (!b.ground.has_port(p)) continue;
        bool ok = l == Label::Quest && b.ground.label(p) == Label::Quest &&
                  a.ground.conclusions().count(p) && b.ground.conclusions().count(p) &&
                  !a.is_box(p) && !b.is_box(p);
        if (!ok) throw Error(Err::NotGluable, "shared port is not a shared quest conclusion: " + p.str());
      }
      for (auto& [p, l] : a.ground.labels) {
        (void)l;
        if (p.is_copy() && (b.is_box(p.box()) || (p.box().is_copy() && b.is_box(p.box().box()))))
          throw Error(Err::NotGluable, "copy tag captures a box of another part: " + p.str());
      }
      for (auto& [p, l] : b.ground.labels) {
        (void)l;
        if (p.is_copy() && (a.is_box(p.box()) || (p.box().is_copy() && a.is_box(p.box().box()))))
          throw Error(Err::NotGluable, "copy tag captures a box of another part: " + p.str());
      }
    }
  }
  Net out;
  for (auto& n : nets) {
    for (auto& [p, l] : n.ground.labels) out.ground.labels.emplace(p, l);
    for (auto& [w, t] : n.ground.wires) out.ground.wires.emplace(w, t);
    out.ground.lefts.insert(n.ground.lefts.begin(), n.ground.lefts.end());
    out.ground.axioms.insert(n.ground.axioms.begin(), n.ground.axioms.end());
    out.ground.cuts.insert(n.ground.cuts.begin(), n.ground.cuts.end());
    for (auto& [o, c] : n.contents) out.contents.emplace(o, c);
    for (auto& [o, d] : n.doors) out.doors.emplace(o, d);
  }
  return out;
}

Net add_wires(const Net& s, const std::map<PortPath, PortId>& t) {
  Net out = s;
  for (auto& [path, tgt] : t) {
    if (!is_conclusion(s, path))
      throw Error(Err::Precondition, "not a conclusion: " + path.str());
    if (!s.ground.has_port(tgt) || !is_exponential(s.ground.label(tgt)) || s.is_box(tgt))
      throw Error(Err::BadTarget, "target must be a shallow exponential non-box port: " + tgt.str());
    if (path.shallow())
      out.ground.wires.emplace(path.port, tgt);
    else
      out.doors[path.boxes.front()].emplace(path.tail(), tgt);
  }
  if (!out.ground.acyclic()) throw Error(Err::Cycle, "adding wires would close a cycle");
  return out;
}

Stripped strip_shallow(const Net& s) {
  Stripped out;
  std::set<PortId> removed_ports;
  for (auto& c : s.ground.conclusions()) {
    if (!is_exponential(s.ground.label(c)) || s.is_box(c))
      throw Error(Err::Precondition, "shallow conclusion is not an exponential non-box port: " + c.str());
    removed_ports.insert(c);
  }
  Net& n = out.net;
  for (auto& [p, l] : s.ground.labels)
    if (!removed_ports.count(p)) n.ground.labels.emplace(p, l);
  for (auto& [w, t] : s.ground.wires) {
    if (removed_ports.count(t)) {
      out.removed.emplace(PortPath(w), t);
      continue;
    }
    n.ground.wires.emplace(w, t);
    if (s.ground.lefts.count(w)) n.ground.lefts.insert(w);
  }
  n.ground.axioms = s.ground.axioms;
  n.ground.cuts = s.ground.cuts;
  n.contents = s.contents;
  for (auto& [o, ds] : s.doors) {
    for (auto& [path, tgt] : ds) {
      if (removed_ports.count(tgt))
        out.removed.emplace(path.prefixed(o), tgt);
      else
        n.doors[o].emplace(path, tgt);
    }
  }
  return out;
}

Net add_contractions(const Net& s, const PortId& o, const std::map<PortId, PortId>& phi) {
  if (!s.is_box(o)) throw Error(Err::Precondition, "not a box: " + o.str());
  auto under = contractions_under(s, o);
  for (auto& c : under)
    if (!phi.count(c)) throw Error(Err::Precondition, "phi misses a contraction: " + c.str());
  const Net& content = s.content(o);
  std::set<PortId> fresh;
  for (auto& [c, q] : phi) {
    if (!under.count(c)) throw Error(Err::Precondition, "phi domain too large: " + c.str());
    if (content.ground.has_port(q)) throw Error(Err::NameClash, "fresh id already used: " + q.str());
    if (!fresh.insert(q).second) throw Error(Err::NameClash, "phi is not injective: " + q.str());
  }

  Net inner = content;
  for (auto& q : fresh) inner.ground.labels.emplace(q, Label::Quest);

  auto principal = principal_door(s, o);
  std::map<PortPath, PortId> reroute;
  for (auto& [path, tgt] : s.doors.at(o)) {
    if (principal && path == *principal) continue;
    reroute.emplace(path, phi.at(tgt));
  }
  inner = add_wires(inner, reroute);

  Net out = s;
  out.contents.at(o) = std::move(inner);
  auto& ds = out.doors.at(o);
  for (auto it = ds.begin(); it != ds.end();)
    it = (principal && it->first == *principal) ? std::next(it) : ds.erase(it);
  return out;
}

namespace {
PortId apply(const std::map<PortId, PortId>& phi, const PortId& p) {
  auto it = phi.find(p);
  return it == phi.end() ? p : it->second;
}
}  // namespace

Net rename_shallow(const Net& s, const std::map<PortId, PortId>& phi) {
  std::set<PortId> image;
  for (auto& [from, to] : phi) {
    (void)from;
    if (!image.insert(to).second) throw Error(Err::NameClash, "renaming is not injective: " + to.str());
  }
  for (auto& [p, l] : s.ground.labels) {
    (void)l;
    if (!phi.count(p) && image.count(p))
      throw Error(Err::NameClash, "renaming captures existing port: " + p.str());
  }
  Net out;
  for (auto& [p, l] : s.ground.labels) out.ground.labels.emplace(apply(phi, p), l);
  for (auto& [w, t] : s.ground.wires) out.ground.wires.emplace(apply(phi, w), apply(phi, t));
  for (auto& w : s.ground.lefts) out.ground.lefts.insert(apply(phi, w));
  for (auto& a : s.ground.axioms)
    out.ground.axioms.insert(PortPair::make(apply(phi, a.a), apply(phi, a.b)));
  for (auto& c : s.ground.cuts)
    out.ground.cuts.insert(PortPair::make(apply(phi, c.a), apply(phi, c.b)));
  for (auto& [o, c] : s.contents) out.contents.emplace(apply(phi, o), c);
  for (auto& [o, ds] : s.doors) {
    auto& nds = out.doors[apply(phi, o)];
    for (auto& [path, tgt] : ds) nds.emplace(path, apply(phi, tgt));
  }
  return out;
}

Net tag_shallow(const PortId& a, std::uint64_t ordinal, const Net& s) {
  std::map<PortId, PortId> phi;
  for (auto& [p, l] : s.ground.labels) {
    (void)l;
    phi.emplace(p, PortId::copy(a, ordinal, p));
  }
  return rename_shallow(s, phi);
}

}  // namespace pnet
