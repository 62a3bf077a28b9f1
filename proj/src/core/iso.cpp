// SPDX-License-Identifier: Apache-2.0
#include "core/iso.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "core/ops.hpp"

namespace pnet {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 12) + (h >> 7);
  return h * 0x2545f4914f6cdd1dULL;
}

std::uint64_t hash_str(const std::string& s) { return std::hash<std::string>{}(s); }

struct Shape {
  Label label;
  bool is_wire = false, is_left = false, is_box = false, is_concl = false;
  int target_label = -1;
  std::uint64_t premises = 0, doors_in = 0;
  bool in_axiom = false, in_cut = false;
  std::uint64_t content_sig = 0;
  std::uint64_t pinned = 0;  // conclusion name when conclusions are fixed

  std::uint64_t hash() const {
    std::uint64_t h = 0x51ab;
    h = mix(h, (std::uint64_t)label);
    h = mix(h, (is_wire << 0) | (is_left << 1) | (is_box << 2) | (is_concl << 3) |
                   (in_axiom << 4) | (in_cut << 5));
    h = mix(h, (std::uint64_t)(target_label + 1));
    h = mix(h, premises);
    h = mix(h, doors_in);
    h = mix(h, content_sig);
    h = mix(h, pinned);
    return h;
  }
  bool operator==(const Shape&) const = default;
};

std::map<PortId, Shape> port_shapes(const Net& s, bool fix) {
  std::map<PortId, Shape> out;
  auto concl = s.ground.conclusions();
  std::map<PortId, std::uint64_t> doors_in;
  for (auto& [o, ds] : s.doors) {
    (void)o;
    for (auto& [path, tgt] : ds) {
      (void)path;
      doors_in[tgt]++;
    }
  }
  for (auto& [p, l] : s.ground.labels) {
    Shape sh;
    sh.label = l;
    sh.is_wire = s.ground.is_wire(p);
    sh.is_left = s.ground.lefts.count(p) != 0;
    sh.is_box = s.is_box(p);
    sh.is_concl = concl.count(p) != 0;
    if (sh.is_wire) sh.target_label = (int)s.ground.label(s.ground.wires.at(p));
    sh.premises = s.ground.arity(p);
    sh.doors_in = doors_in.count(p) ? doors_in.at(p) : 0;
    for (auto& a : s.ground.axioms)
      if (a.contains(p)) sh.in_axiom = true;
    for (auto& c : s.ground.cuts)
      if (c.contains(p)) sh.in_cut = true;
    if (sh.is_box) sh.content_sig = wl_hash(s.content(p), false);
    if (fix && sh.is_concl) sh.pinned = hash_str(p.str());
    out.emplace(p, sh);
  }
  return out;
}

// Undirected typed edges used by the refinement.
enum EdgeKind : std::uint64_t { EWireOut = 1, EWireIn, EAxiom, ECut, EDoorOut, EDoorIn };

std::multimap<PortId, std::pair<std::uint64_t, PortId>> edges_of(const Net& s) {
  std::multimap<PortId, std::pair<std::uint64_t, PortId>> e;
  for (auto& [w, t] : s.ground.wires) {
    e.emplace(w, std::make_pair((std::uint64_t)EWireOut, t));
    e.emplace(t, std::make_pair((std::uint64_t)EWireIn, w));
  }
  for (auto& a : s.ground.axioms) {
    e.emplace(a.a, std::make_pair((std::uint64_t)EAxiom, a.b));
    e.emplace(a.b, std::make_pair((std::uint64_t)EAxiom, a.a));
  }
  for (auto& c : s.ground.cuts) {
    e.emplace(c.a, std::make_pair((std::uint64_t)ECut, c.b));
    e.emplace(c.b, std::make_pair((std::uint64_t)ECut, c.a));
  }
  for (auto& [o, ds] : s.doors) {
    for (auto& [path, tgt] : ds) {
      (void)path;
      e.emplace(o, std::make_pair((std::uint64_t)EDoorOut, tgt));
      e.emplace(tgt, std::make_pair((std::uint64_t)EDoorIn, o));
    }
  }
  return e;
}

}  // namespace

std::uint64_t wl_hash(const Net& s, bool fix) {
  auto shapes = port_shapes(s, fix);
  std::map<PortId, std::uint64_t> color;
  for (auto& [p, sh] : shapes) color[p] = sh.hash();
  auto edges = edges_of(s);
  std::size_t rounds = std::min<std::size_t>(shapes.size(), 6);
  for (std::size_t r = 0; r < rounds; ++r) {
    std::map<PortId, std::uint64_t> next;
    for (auto& [p, c] : color) {
      std::vector<std::uint64_t> nb;
      auto range = edges.equal_range(p);
      for (auto it = range.first; it != range.second; ++it)
        nb.push_back(mix(it->second.first, color.at(it->second.second)));
      std::sort(nb.begin(), nb.end());
      std::uint64_t h = c;
      for (auto v : nb) h = mix(h, v);
      next[p] = h;
    }
    color = std::move(next);
  }
  std::vector<std::uint64_t> all;
  for (auto& [p, c] : color) {
    (void)p;
    all.push_back(c);
  }
  std::sort(all.begin(), all.end());
  std::uint64_t h = mix(0xabcd, s.ground.labels.size());
  h = mix(h, s.ground.wires.size());
  h = mix(h, s.ground.axioms.size());
  h = mix(h, s.ground.cuts.size());
  h = mix(h, s.contents.size());
  for (auto v : all) h = mix(h, v);
  return h;
}

PortPath IsoWitness::map_path(const PortPath& p) const {
  if (p.shallow()) return PortPath(shallow.at(p.port));
  const PortId& o = p.boxes.front();
  PortPath sub = boxes.at(o).map_path(p.tail());
  return sub.prefixed(shallow.at(o));
}

namespace {

struct Search {
  const Net& a;
  const Net& b;
  bool fix;
  std::map<PortId, std::vector<PortId>> cands;
  // Deferred constraints per box of a: tail path -> (b-box -> allowed tails).
  std::map<PortId, std::vector<std::pair<PortPath, std::map<PortId, std::set<PortPath>>>>> deferred;
  std::map<PortId, PortId> fwd, bwd;
  std::map<PortId, PortId> ax_a, ax_b, cut_a, cut_b;  // partner maps
  std::vector<PortId> order;

  bool prepare(const PathConstraints& constraints) {
    if (a.ground.labels.size() != b.ground.labels.size()) return false;
    if (a.ground.wires.size() != b.ground.wires.size()) return false;
    if (a.ground.axioms.size() != b.ground.axioms.size()) return false;
    if (a.ground.cuts.size() != b.ground.cuts.size()) return false;
    if (a.contents.size() != b.contents.size()) return false;
    auto sa = port_shapes(a, fix), sb = port_shapes(b, fix);
    if (fix) {
      auto ca = a.ground.conclusions(), cb = b.ground.conclusions();
      if (ca != cb) return false;
    }
    for (auto& x : a.ground.axioms) {
      ax_a[x.a] = x.b;
      ax_a[x.b] = x.a;
    }
    for (auto& x : b.ground.axioms) {
      ax_b[x.a] = x.b;
      ax_b[x.b] = x.a;
    }
    for (auto& x : a.ground.cuts) {
      cut_a[x.a] = x.b;
      cut_a[x.b] = x.a;
    }
    for (auto& x : b.ground.cuts) {
      cut_b[x.a] = x.b;
      cut_b[x.b] = x.a;
    }

    std::map<PortId, std::set<PortId>> shallow_allowed;
    for (auto& [path, allowed] : constraints) {
      if (path.shallow()) {
        std::set<PortId> ok;
        for (auto& q : allowed)
          if (q.shallow()) ok.insert(q.port);
        shallow_allowed[path.port] = std::move(ok);
      } else {
        const PortId& o = path.boxes.front();
        std::map<PortId, std::set<PortPath>> per_box;
        for (auto& q : allowed)
          if (!q.shallow()) per_box[q.boxes.front()].insert(q.tail());
        deferred[o].emplace_back(path.tail(), std::move(per_box));
        auto& sa_o = shallow_allowed[o];
        for (auto& [qb, tails] : per_box) {
          (void)tails;
          sa_o.insert(qb);
        }
        // Narrow the box candidates below; per_box recorded already.
      }
    }

    for (auto& [p, sh] : sa) {
      std::vector<PortId> cs;
      if (fix && sh.is_concl) {
        if (sb.count(p) && sb.at(p) == sh) cs.push_back(p);
      } else {
        for (auto& [q, shb] : sb)
          if (shb == sh) cs.push_back(q);
      }
      if (auto it = shallow_allowed.find(p); it != shallow_allowed.end()) {
        std::vector<PortId> filtered;
        for (auto& q : cs)
          if (it->second.count(q)) filtered.push_back(q);
        cs = std::move(filtered);
      }
      if (cs.empty()) return false;
      cands.emplace(p, std::move(cs));
    }
    for (auto& [p, cs] : cands) order.push_back(p);
    std::sort(order.begin(), order.end(), [&](const PortId& x, const PortId& y) {
      auto nx = cands.at(x).size(), ny = cands.at(y).size();
      if (nx != ny) return nx < ny;
      return x < y;
    });
    return true;
  }

  bool locally_ok(const PortId& p, const PortId& q) const {
    if (a.ground.is_wire(p)) {
      const PortId& ta = a.ground.wires.at(p);
      const PortId& tb = b.ground.wires.at(q);
      if (auto it = fwd.find(ta); it != fwd.end() && it->second != tb) return false;
    }
    // Premises already assigned must point at q.
    for (auto& [w, t] : a.ground.wires) {
      if (t != p) continue;
      if (auto it = fwd.find(w); it != fwd.end() && b.ground.wires.at(it->second) != q)
        return false;
    }
    if (auto it = ax_a.find(p); it != ax_a.end()) {
      auto jt = ax_b.find(q);
      if (jt == ax_b.end()) return false;
      if (auto k = fwd.find(it->second); k != fwd.end() && k->second != jt->second) return false;
    }
    if (auto it = cut_a.find(p); it != cut_a.end()) {
      auto jt = cut_b.find(q);
      if (jt == cut_b.end()) return false;
      if (auto k = fwd.find(it->second); k != fwd.end() && k->second != jt->second) return false;
    }
    return true;
  }

  bool ground_complete_ok() const {
    for (auto& [w, t] : a.ground.wires) {
      auto it = b.ground.wires.find(fwd.at(w));
      if (it == b.ground.wires.end() || it->second != fwd.at(t)) return false;
      if (a.ground.lefts.count(w) != b.ground.lefts.count(fwd.at(w))) return false;
    }
    for (auto& x : a.ground.axioms)
      if (!b.ground.axioms.count(PortPair::make(fwd.at(x.a), fwd.at(x.b)))) return false;
    for (auto& x : a.ground.cuts)
      if (!b.ground.cuts.count(PortPair::make(fwd.at(x.a), fwd.at(x.b)))) return false;
    return true;
  }

  bool match_boxes(std::map<PortId, IsoWitness>& out) const {
    for (auto& [o, c] : a.contents) {
      const PortId& ob = fwd.at(o);
      if (!b.is_box(ob)) return false;
      const Net& cb = b.content(ob);
      auto da = a.doors.count(o) ? a.doors.at(o) : std::map<PortPath, PortId>{};
      auto db = b.doors.count(ob) ? b.doors.at(ob) : std::map<PortPath, PortId>{};
      if (da.size() != db.size()) return false;
      PathConstraints cc;
      for (auto& [path, tgt] : da) {
        PortId want = tgt == o ? ob : fwd.at(tgt);
        std::set<PortPath> allowed;
        for (auto& [pb, tb] : db)
          if (tb == want) allowed.insert(pb);
        if (allowed.empty()) return false;
        cc[path] = std::move(allowed);
      }
      if (auto it = deferred.find(o); it != deferred.end()) {
        for (auto& [tail, per_box] : it->second) {
          auto jt = per_box.find(ob);
          if (jt == per_box.end()) return false;
          auto& slot = cc[tail];
          if (slot.empty())
            slot = jt->second;
          else {
            std::set<PortPath> inter;
            for (auto& x : slot)
              if (jt->second.count(x)) inter.insert(x);
            slot = std::move(inter);
          }
          if (slot.empty()) return false;
        }
      }
      auto sub = find_iso(c, cb, false, cc);
      if (!sub) return false;
      out.emplace(o, std::move(*sub));
    }
    return true;
  }

  std::optional<IsoWitness> run(std::size_t idx, std::set<PortId>& used) {
    if (idx == order.size()) {
      if (!ground_complete_ok()) return std::nullopt;
      IsoWitness w;
      w.shallow = fwd;
      if (!match_boxes(w.boxes)) return std::nullopt;
      return w;
    }
    const PortId& p = order[idx];
    for (auto& q : cands.at(p)) {
      if (used.count(q) || !locally_ok(p, q)) continue;
      fwd.emplace(p, q);
      used.insert(q);
      if (auto w = run(idx + 1, used)) return w;
      fwd.erase(p);
      used.erase(q);
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<IsoWitness> find_iso(const Net& a, const Net& b, bool fix_conclusions,
                                   const PathConstraints& constraints) {
  Search s{a, b, fix_conclusions};
  if (!s.prepare(constraints)) return std::nullopt;
  std::set<PortId> used;
  return s.run(0, used);
}

bool verify_witness(const Net& a, const Net& b, const IsoWitness& w, bool fix_conclusions) {
  if (w.shallow.size() != a.ground.labels.size() || a.ground.labels.size() != b.ground.labels.size())
    return false;
  std::set<PortId> image;
  for (auto& [p, q] : w.shallow) {
    if (!a.ground.has_port(p) || !b.ground.has_port(q)) return false;
    if (!image.insert(q).second) return false;
    if (a.ground.label(p) != b.ground.label(q)) return false;
  }
  for (auto& [wp, t] : a.ground.wires) {
    auto it = b.ground.wires.find(w.shallow.at(wp));
    if (it == b.ground.wires.end() || it->second != w.shallow.at(t)) return false;
  }
  if (a.ground.wires.size() != b.ground.wires.size()) return false;
  for (auto& x : a.ground.lefts)
    if (!b.ground.lefts.count(w.shallow.at(x))) return false;
  if (a.ground.lefts.size() != b.ground.lefts.size()) return false;
  for (auto& x : a.ground.axioms)
    if (!b.ground.axioms.count(PortPair::make(w.shallow.at(x.a), w.shallow.at(x.b)))) return false;
  if (a.ground.axioms.size() != b.ground.axioms.size()) return false;
  for (auto& x : a.ground.cuts)
    if (!b.ground.cuts.count(PortPair::make(w.shallow.at(x.a), w.shallow.at(x.b)))) return false;
  if (a.ground.cuts.size() != b.ground.cuts.size()) return false;
  if (fix_conclusions)
    for (auto& c : a.ground.conclusions())
      if (w.shallow.at(c) != c) return false;
  if (a.contents.size() != b.contents.size()) return false;
  for (auto& [o, c] : a.contents) {
    const PortId& ob = w.shallow.at(o);
    if (!b.is_box(ob)) return false;
    auto it = w.boxes.find(o);
    if (it == w.boxes.end()) return false;
    if (!verify_witness(c, b.content(ob), it->second, false)) return false;
    auto da = a.doors.count(o) ? a.doors.at(o) : std::map<PortPath, PortId>{};
    auto db = b.doors.count(ob) ? b.doors.at(ob) : std::map<PortPath, PortId>{};
    if (da.size() != db.size()) return false;
    for (auto& [path, tgt] : da) {
      PortPath pb = it->second.map_path(path);
      auto jt = db.find(pb);
      if (jt == db.end()) return false;
      PortId want = tgt == o ? ob : w.shallow.at(tgt);
      if (jt->second != want) return false;
    }
  }
  return true;
}

bool iso_mod_box(const Net& u, const Net& s, const PortId& o, const Net& t) {
  if (!s.is_box(o)) throw Error(Err::Precondition, "not a box: " + o.str());
  auto doors = s.doors.at(o);
  PathConstraints cc;
  for (auto& c : conclusions(u)) {
    auto it = doors.find(c);
    if (it == doors.end())
      throw Error(Err::Precondition, "conclusion of U is not a door of the box: " + c.str());
    cc[c] = {};
  }
  Stripped st = strip_shallow(t);
  for (auto& [path, want] : cc) {
    const PortId& target = doors.at(path);
    std::set<PortPath> allowed;
    for (auto& [freed, tgt] : st.removed)
      if (tgt == target) allowed.insert(freed);
    if (allowed.empty()) return false;
    want = std::move(allowed);
  }
  return find_iso(u, st.net, false, cc).has_value();
}

std::string structural_key(const Net& s) {
  std::ostringstream out;
  out << "(";
  for (auto& [p, l] : s.ground.labels) out << p.str() << ":" << label_name(l) << ";";
  out << "|";
  for (auto& [w, t] : s.ground.wires)
    out << w.str() << ">" << t.str() << (s.ground.lefts.count(w) ? "L" : "") << ";";
  out << "|";
  for (auto& a : s.ground.axioms) out << a.a.str() << "~" << a.b.str() << ";";
  out << "|";
  for (auto& c : s.ground.cuts) out << c.a.str() << "#" << c.b.str() << ";";
  out << "|";
  for (auto& [o, c] : s.contents) {
    out << o.str() << "=" << structural_key(c) << "{";
    if (s.doors.count(o))
      for (auto& [path, tgt] : s.doors.at(o)) out << path.str() << ">" << tgt.str() << ";";
    out << "}";
  }
  out << ")";
  return out.str();
}

}  // namespace pnet
