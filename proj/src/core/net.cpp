// SPDX-License-Identifier: Apache-2.0
#include "core/net.hpp"

#include <algorithm>
#include <functional>

namespace pnet {

const char* label_name(Label l) {
  switch (l) {
    case Label::Tensor: return "tensor";
    case Label::Par: return "par";
    case Label::One: return "one";
    case Label::Bot: return "bot";
    case Label::Bang: return "bang";
    case Label::Quest: return "quest";
    case Label::Ax: return "ax";
  }
  return "?";
}

std::optional<Label> label_from_name(const std::string& s) {
  if (s == "tensor") return Label::Tensor;
  if (s == "par") return Label::Par;
  if (s == "one") return Label::One;
  if (s == "bot") return Label::Bot;
  if (s == "bang") return Label::Bang;
  if (s == "quest") return Label::Quest;
  if (s == "ax") return Label::Ax;
  return std::nullopt;
}

Label GroundNet::label(const PortId& p) const {
  auto it = labels.find(p);
  if (it == labels.end()) throw Error(Err::UnknownPort, "no such port: " + p.str());
  return it->second;
}

std::set<PortId> GroundNet::conclusions() const {
  std::set<PortId> out;
  for (auto& [p, l] : labels) {
    (void)l;
    if (wires.count(p)) continue;
    bool in_cut = false;
    for (auto& c : cuts)
      if (c.contains(p)) { in_cut = true; break; }
    if (!in_cut) out.insert(p);
  }
  return out;
}

std::uint64_t GroundNet::arity(const PortId& p) const {
  std::uint64_t n = 0;
  for (auto& [w, t] : wires) {
    (void)w;
    if (t == p) ++n;
  }
  return n;
}

std::vector<PortId> GroundNet::premises(const PortId& p) const {
  std::vector<PortId> out;
  for (auto& [w, t] : wires)
    if (t == p) out.push_back(w);
  return out;
}

bool GroundNet::acyclic() const {
  // Follow wires from every source; the graph is functional so a walk either
  // terminates or loops.
  std::map<PortId, int> state;  // 0 new, 1 open, 2 done
  std::function<bool(const PortId&)> walk = [&](const PortId& p) -> bool {
    auto& st = state[p];
    if (st == 2) return true;
    if (st == 1) return false;
    st = 1;
    auto it = wires.find(p);
    if (it != wires.end() && !walk(it->second)) return false;
    st = 2;
    return true;
  };
  for (auto& [w, t] : wires) {
    (void)t;
    if (!walk(w)) return false;
  }
  return true;
}

const Net& Net::content(const PortId& box) const {
  auto it = contents.find(box);
  if (it == contents.end()) throw Error(Err::UnknownPort, "not a box: " + box.str());
  return it->second;
}

std::uint64_t arity(const Net& s, const PortId& p) {
  if (!s.ground.has_port(p)) throw Error(Err::UnknownPort, "no such shallow port: " + p.str());
  std::uint64_t n = s.ground.arity(p);
  for (auto& [o, ds] : s.doors) {
    (void)o;
    for (auto& [path, tgt] : ds)
      if (tgt == p) ++n;
  }
  return n;
}

std::uint64_t depth(const Net& s) {
  std::uint64_t d = 0;
  for (auto& [o, c] : s.contents) {
    (void)o;
    d = std::max(d, depth(c) + 1);
  }
  return d;
}

std::uint64_t cosize(const Net& s) {
  std::uint64_t m = 0;
  for (auto& [p, l] : s.ground.labels) {
    (void)l;
    m = std::max(m, arity(s, p));
  }
  for (auto& [o, c] : s.contents) {
    (void)o;
    m = std::max(m, cosize(c));
  }
  return m;
}

std::uint64_t box_count(const Net& s) {
  std::uint64_t n = s.contents.size();
  for (auto& [o, c] : s.contents) {
    (void)o;
    n += box_count(c);
  }
  return n;
}

std::set<PortId> shallow_conclusions(const Net& s) { return s.ground.conclusions(); }

std::vector<PortPath> conclusions(const Net& s) {
  std::vector<PortPath> out;
  for (auto& p : s.ground.conclusions()) out.emplace_back(p);
  for (auto& [o, c] : s.contents) {
    auto doored = s.doors.find(o);
    for (auto& sub : conclusions(c)) {
      bool is_door = doored != s.doors.end() && doored->second.count(sub);
      if (!is_door) out.push_back(sub.prefixed(o));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_conclusion(const Net& s, const PortPath& path) {
  if (path.shallow()) return s.ground.conclusions().count(path.port) != 0;
  const PortId& o = path.boxes.front();
  if (!s.is_box(o)) return false;
  auto sub = path.tail();
  auto doored = s.doors.find(o);
  if (doored != s.doors.end() && doored->second.count(sub)) return false;
  return is_conclusion(s.content(o), sub);
}

std::vector<PortPath> temporary_conclusions(const Net& s, const PortId& box) {
  std::vector<PortPath> out;
  auto it = s.doors.find(box);
  if (it == s.doors.end()) return out;
  for (auto& [path, tgt] : it->second) {
    (void)tgt;
    out.push_back(path);
  }
  return out;
}

std::optional<PortPath> principal_door(const Net& s, const PortId& box) {
  std::optional<PortPath> found;
  auto it = s.doors.find(box);
  if (it == s.doors.end()) return std::nullopt;
  for (auto& [path, tgt] : it->second) {
    if (tgt == box) {
      if (found) return std::nullopt;  // not unique
      found = path;
    }
  }
  return found;
}

std::set<PortId> contractions_under(const Net& s, const PortId& box) {
  std::set<PortId> out;
  auto it = s.doors.find(box);
  if (it == s.doors.end()) return out;
  for (auto& [path, tgt] : it->second) {
    (void)path;
    if (tgt != box) out.insert(tgt);
  }
  return out;
}

std::vector<PortPath> all_port_paths(const Net& s) {
  std::vector<PortPath> out;
  for (auto& [p, l] : s.ground.labels) {
    (void)l;
    out.emplace_back(p);
  }
  for (auto& [o, c] : s.contents)
    for (auto& sub : all_port_paths(c)) out.push_back(sub.prefixed(o));
  std::sort(out.begin(), out.end());
  return out;
}

const Net& net_at(const Net& s, const std::vector<PortId>& box_path) {
  const Net* cur = &s;
  for (auto& o : box_path) cur = &cur->content(o);
  return *cur;
}

bool has_port_path(const Net& s, const PortPath& p) {
  const Net* cur = &s;
  for (auto& o : p.boxes) {
    auto it = cur->contents.find(o);
    if (it == cur->contents.end()) return false;
    cur = &it->second;
  }
  return cur->ground.has_port(p.port);
}

std::vector<std::vector<PortId>> box_paths(const Net& s) {
  std::vector<std::vector<PortId>> out;
  for (auto& [o, c] : s.contents) {
    out.push_back({o});
    for (auto& sub : box_paths(c)) {
      std::vector<PortId> path{o};
      path.insert(path.end(), sub.begin(), sub.end());
      out.push_back(std::move(path));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t content_depth(const Net& s, const PortId& box) { return depth(s.content(box)); }

bool has_cuts(const Net& s) {
  if (!s.ground.cuts.empty()) return true;
  for (auto& [o, c] : s.contents) {
    (void)o;
    if (has_cuts(c)) return true;
  }
  return false;
}

std::vector<std::pair<PortPath, std::vector<PortId>>> deep_ports_with_guard(const Net& s,
                                                                            std::uint64_t level) {
  std::vector<std::pair<PortPath, std::vector<PortId>>> out;
  for (auto& [o, c] : s.contents) {
    if (content_depth(s, o) < level) continue;
    auto inner = deep_ports_with_guard(c, level);
    std::set<PortPath> deeper;
    for (auto& in : inner) {
      deeper.insert(in.first);
      std::vector<PortId> guard{o};
      guard.insert(guard.end(), in.second.begin(), in.second.end());
      out.emplace_back(in.first.prefixed(o), std::move(guard));
    }
    // Ports of the content at depth <= level are guarded by o itself.
    for (auto& path : all_port_paths(c))
      if (!deeper.count(path)) out.emplace_back(path.prefixed(o), std::vector<PortId>{o});
  }
  std::sort(out.begin(), out.end());
  return out;
}

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::Ground: return "ground";
    case Mode::SimpleDiff: return "simple-diff";
    case Mode::InPs: return "in-ps";
    case Mode::Ps: return "ps";
    case Mode::DiffPs: return "diff-ps";
  }
  return "?";
}

std::optional<Mode> mode_from_name(const std::string& s) {
  if (s == "ground") return Mode::Ground;
  if (s == "simple-diff") return Mode::SimpleDiff;
  if (s == "in-ps") return Mode::InPs;
  if (s == "ps") return Mode::Ps;
  if (s == "diff-ps") return Mode::DiffPs;
  return std::nullopt;
}

std::string ValidationReport::to_string() const {
  std::string out;
  for (auto& it : items) {
    out += it.rule;
    if (!it.where.empty()) out += " at " + it.where;
    if (!it.detail.empty()) out += ": " + it.detail;
    out += "\n";
  }
  return out;
}

namespace {

void check_level(const Net& s, Mode mode, bool top, const std::string& where,
                 ValidationReport& rep) {
  auto add = [&](const std::string& rule, const std::string& detail) {
    rep.items.push_back({where, rule, detail});
  };
  const GroundNet& g = s.ground;

  for (auto& [w, t] : g.wires) {
    if (!g.has_port(w)) add("wire-source-unknown", w.str());
    if (!g.has_port(t)) {
      add("wire-target-unknown", t.str());
      continue;
    }
    Label lt = g.label(t);
    if (lt == Label::One || lt == Label::Bot || lt == Label::Ax)
      add("wire-into-nullary", w.str() + " -> " + t.str());
  }
  for (auto& w : g.lefts) {
    auto it = g.wires.find(w);
    if (it == g.wires.end()) {
      add("left-not-a-wire", w.str());
      continue;
    }
    if (!g.has_port(it->second) || !is_multiplicative(g.label(it->second)))
      add("left-into-non-multiplicative", w.str());
  }
  for (auto& [p, l] : g.labels) {
    if (!is_multiplicative(l)) continue;
    std::uint64_t prem = g.arity(p), left = 0;
    for (auto& w : g.lefts) {
      auto it = g.wires.find(w);
      if (it != g.wires.end() && it->second == p) ++left;
    }
    if (prem != 2) add("tensor-needs-2-premises", p.str());
    if (left != 1) add("needs-one-left-premise", p.str());
  }

  // Axioms partition the ax-labelled ports.
  {
    std::map<PortId, int> seen;
    for (auto& a : g.axioms) {
      if (a.a == a.b) add("axiom-pair-degenerate", a.a.str());
      for (auto& p : {a.a, a.b}) {
        if (!g.has_port(p) || g.label(p) != Label::Ax)
          add("axiom-endpoint-not-ax", p.str());
        else
          seen[p]++;
      }
    }
    for (auto& [p, l] : g.labels)
      if (l == Label::Ax && seen[p] != 1) add("ax-port-not-in-one-axiom", p.str());
    for (auto& [p, n] : seen)
      if (n > 1) add("ax-port-in-two-axioms", p.str());
  }

  {
    std::map<PortId, int> seen;
    for (auto& c : g.cuts) {
      if (c.a == c.b) add("cut-pair-degenerate", c.a.str());
      for (auto& p : {c.a, c.b}) {
        if (!g.has_port(p))
          add("cut-endpoint-unknown", p.str());
        else if (g.is_wire(p))
          add("cut-endpoint-is-wire", p.str());
        if (++seen[p] > 1) add("cut-pairs-overlap", p.str());
      }
    }
  }

  if (!g.acyclic()) add("acyclic", "wire cycle at depth 0");

  bool ground_mode = mode == Mode::Ground || mode == Mode::InPs || mode == Mode::Ps;
  if (ground_mode) {
    for (auto& [w, t] : g.wires) {
      if (g.has_port(t) && g.label(t) == Label::Bang)
        add("wire-into-bang", w.str() + " -> " + t.str());
    }
  }

  if ((mode == Mode::Ground || mode == Mode::SimpleDiff) && !s.contents.empty())
    add("depth-0-mode-has-boxes", "");

  // Box layer.
  std::set<PortId> bang_ports;
  for (auto& [p, l] : g.labels)
    if (l == Label::Bang) bang_ports.insert(p);

  for (auto& [o, c] : s.contents) {
    (void)c;
    if (!g.has_port(o) || g.label(o) != Label::Bang) add("box-not-a-bang-port", o.str());
  }
  if (mode == Mode::InPs || mode == Mode::Ps) {
    for (auto& p : bang_ports)
      if (!s.is_box(p)) add("bang-port-not-a-box", p.str());
  }
  if (mode == Mode::SimpleDiff || mode == Mode::DiffPs) {
    for (auto& [o, c] : s.contents) {
      (void)c;
      if (g.has_port(o) && g.arity(o) != 0) add("box-with-wire-premise", o.str());
    }
  }

  // Copy-tagged shallow ports must not capture a box name.
  for (auto& [p, l] : g.labels) {
    (void)l;
    if (!p.is_copy()) continue;
    if (s.is_box(p.box())) add("copy-tag-captures-box", p.str());
    if (p.box().is_copy() && s.is_box(p.box().box())) add("copy-tag-captures-box", p.str());
  }

  for (auto& [o, ds] : s.doors) {
    if (!s.is_box(o)) {
      add("doors-without-box", o.str());
      continue;
    }
    const Net& c = s.content(o);
    int principal = 0;
    for (auto& [path, tgt] : ds) {
      if (!has_port_path(c, path) || !is_conclusion(c, path))
        add("door-not-a-content-conclusion", o.str() + " / " + path.str());
      if (tgt == o) {
        ++principal;
        if (!path.shallow())
          add("principal-door-not-shallow", o.str() + " / " + path.str());
      } else {
        if (!g.has_port(tgt))
          add("door-target-unknown", tgt.str());
        else if (s.is_box(tgt))
          add("door-into-foreign-box", path.str() + " -> " + tgt.str());
        else if (g.label(tgt) != Label::Quest)
          add("door-target-not-quest", path.str() + " -> " + tgt.str());
      }
    }
    if (principal != 1) add("principal-door-not-unique", o.str());
  }
  for (auto& [o, c] : s.contents) {
    (void)c;
    if (!s.doors.count(o) || s.doors.at(o).empty()) add("box-without-doors", o.str());
  }

  if (top && (mode == Mode::Ps || mode == Mode::DiffPs)) {
    for (auto& c : conclusions(s))
      if (!c.shallow()) add("conclusion-not-shallow", c.str());
  }

  // Contents are in-PS's in every boxed mode.
  for (auto& [o, c] : s.contents) {
    std::string sub_where = where.empty() ? o.str() : where + "/" + o.str();
    check_level(c, Mode::InPs, false, sub_where, rep);
  }
}

}  // namespace

ValidationReport validate(const Net& s, Mode mode) {
  ValidationReport rep;
  check_level(s, mode, true, "", rep);
  return rep;
}

Metrics metrics(const Net& s) {
  Metrics m;
  m.depth = depth(s);
  m.cosize = cosize(s);
  m.n_boxes = box_count(s);
  m.shallow_conclusions = shallow_conclusions(s);
  m.all_conclusions = conclusions(s);
  return m;
}

}  // namespace pnet
