// SPDX-License-Identifier: Apache-2.0
#include "relsem/relsem.hpp"

#include <algorithm>
#include <functional>

namespace pnet {

namespace {

void check_seed_shape(const Net& s, const ExperimentSeed& seed) {
  if (seed.axiom_values.size() != s.ground.axioms.size())
    throw Error(Err::Shape, "seed does not label every axiom once");
  for (auto& [pair, v] : seed.axiom_values) {
    (void)v;
    if (!s.ground.axioms.count(pair))
      throw Error(Err::Shape, "seed labels a non-axiom: " + pair.a.str());
  }
  if (seed.box_seeds.size() != s.contents.size())
    throw Error(Err::Shape, "seed does not cover every box");
  for (auto& [o, subs] : seed.box_seeds) {
    if (!s.is_box(o)) throw Error(Err::Shape, "seed names a non-box: " + o.str());
    for (auto& sub : subs) check_seed_shape(s.content(o), sub);
  }
}

std::vector<PortId> topo_order(const GroundNet& g) {
  // Wire sources before their targets.
  std::map<PortId, std::uint64_t> pending;  // unprocessed premises
  for (auto& [p, l] : g.labels) {
    (void)l;
    pending[p] = g.arity(p);
  }
  std::vector<PortId> ready, order;
  for (auto& [p, n] : pending)
    if (n == 0) ready.push_back(p);
  while (!ready.empty()) {
    PortId p = ready.back();
    ready.pop_back();
    order.push_back(p);
    auto it = g.wires.find(p);
    if (it != g.wires.end() && --pending.at(it->second) == 0) ready.push_back(it->second);
  }
  if (order.size() != g.labels.size()) throw Error(Err::Validation, "wire graph has a cycle");
  return order;
}

std::optional<Experiment> build_rec(const Net& s, const ExperimentSeed& seed) {
  Experiment e;
  for (auto& [o, subs] : seed.box_seeds) {
    const Net& content = s.content(o);
    auto& built = e.per_box[o];
    for (auto& sub : subs) {
      auto be = build_rec(content, sub);
      if (!be) return std::nullopt;
      built.push_back(std::move(*be));
    }
  }
  // Deep labels: every port of a content collects the values of its copies.
  for (auto& [o, built] : e.per_box) {
    const Net& content = s.content(o);
    for (auto& [p, l] : content.ground.labels) {
      (void)l;
      std::vector<Value> bag;
      for (auto& be : built) bag.push_back(be.shallow.at(p));
      std::sort(bag.begin(), bag.end());
      e.deep[PortPath(p).prefixed(o)] = std::move(bag);
    }
    for (auto& be : built)
      for (auto& [path, vals] : be.deep) {
        auto& bag = e.deep[path.prefixed(o)];
        bag.insert(bag.end(), vals.begin(), vals.end());
      }
    for (auto& [path, bag] : e.deep) {
      (void)path;
      std::sort(bag.begin(), bag.end());
    }
  }

  // Doors landing on each shallow port, by target.
  std::map<PortId, std::vector<PortPath>> doors_in;
  for (auto& [o, ds] : s.doors)
    for (auto& [path, tgt] : ds) doors_in[tgt].push_back(path.prefixed(o));

  for (auto& p : topo_order(s.ground)) {
    Label l = s.ground.label(p);
    switch (l) {
      case Label::One: e.shallow.emplace(p, Value::star(true)); break;
      case Label::Bot: e.shallow.emplace(p, Value::star(false)); break;
      case Label::Ax: {
        for (auto& a : s.ground.axioms) {
          if (!a.contains(p)) continue;
          const Value& v = seed.axiom_values.at(a);
          e.shallow.emplace(p, p == a.a ? v : dual(v));
          break;
        }
        break;
      }
      case Label::Tensor:
      case Label::Par: {
        PortId left, right;
        for (auto& [w, t] : s.ground.wires) {
          if (t != p) continue;
          (s.ground.lefts.count(w) ? left : right) = w;
        }
        e.shallow.emplace(
            p, Value::pair(l == Label::Tensor, e.shallow.at(left), e.shallow.at(right)));
        break;
      }
      case Label::Bang:
      case Label::Quest: {
        std::vector<Value> bag;
        for (auto& [w, t] : s.ground.wires)
          if (t == p) bag.push_back(e.shallow.at(w));
        if (auto it = doors_in.find(p); it != doors_in.end())
          for (auto& path : it->second) {
            auto& vals = e.deep.at(path);
            bag.insert(bag.end(), vals.begin(), vals.end());
          }
        e.shallow.emplace(p, Value::bag(l == Label::Bang, std::move(bag)));
        break;
      }
    }
  }

  for (auto& c : s.ground.cuts)
    if (!(e.shallow.at(c.a) == dual(e.shallow.at(c.b)))) return std::nullopt;
  return e;
}

}  // namespace

std::optional<Experiment> build_experiment(const Net& s, const ExperimentSeed& seed) {
  check_seed_shape(s, seed);
  return build_rec(s, seed);
}

Point result_point(const Net& s, const Experiment& e) {
  Point x;
  for (auto& c : conclusions(s)) {
    if (c.shallow())
      x.singles.emplace(c, e.shallow.at(c.port));
    else
      x.bags.emplace(c, e.deep.at(c));
  }
  return x;
}

namespace {
void forbid_cuts(const Net& s) {
  if (has_cuts(s)) throw Error(Err::CutPresent, "net has cuts");
}
}  // namespace

ExperimentSeed fresh_atomic_seed(const Net& s, const PseudoExperiment& p, AtomSupply& atoms) {
  forbid_cuts(s);
  e_sharp(s, p);  // shape check
  ExperimentSeed seed;
  for (auto& a : s.ground.axioms) seed.axiom_values.emplace(a, Value::atom(true, atoms.fresh()));
  for (auto& [o, copies] : p.per_box) {
    auto& subs = seed.box_seeds[o];
    for (auto& group : copies)
      for (std::uint64_t t = 0; t < group.count; ++t)
        subs.push_back(fresh_atomic_seed(s.content(o), *group.child, atoms));
  }
  return seed;
}

PseudoExperiment induced_pseudo(const ExperimentSeed& seed) {
  PseudoExperiment p;
  for (auto& [o, subs] : seed.box_seeds) {
    auto& copies = p.per_box[o];
    for (auto& sub : subs) copies.push_back(PseudoExperiment::copies(induced_pseudo(sub), 1));
  }
  return p;
}

ExperimentSeed expansion_seed(const Net& r, const ExperimentSeed& seed) {
  check_seed_shape(r, seed);
  ExperimentSeed out;
  out.axiom_values = seed.axiom_values;
  for (auto& [o, subs] : seed.box_seeds) {
    const Net& content = r.content(o);
    std::uint64_t ordinal = 0;
    for (auto& sub : subs) {
      ExperimentSeed flat = expansion_seed(content, sub);
      for (auto& [pair, v] : flat.axiom_values) {
        PortPair tagged = PortPair::make(PortId::copy(o, ordinal, pair.a),
                                         PortId::copy(o, ordinal, pair.b));
        // Tagging keeps the order of the endpoints, so the value stays put.
        bool flipped = !(PortId::copy(o, ordinal, pair.a) == tagged.a);
        out.axiom_values.emplace(tagged, flipped ? dual(v) : v);
      }
      ++ordinal;
    }
  }
  return out;
}

namespace {

void count_signed_atoms(const Value& v, std::map<std::pair<bool, std::string>, std::uint64_t>& out) {
  switch (v.kind()) {
    case Value::Kind::Atom: out[{v.positive(), v.atom_name()}]++; return;
    case Value::Kind::Star: return;
    case Value::Kind::Pair:
      count_signed_atoms(v.left(), out);
      count_signed_atoms(v.right(), out);
      return;
    case Value::Kind::Bag:
      for (auto& x : v.items()) count_signed_atoms(x, out);
      return;
  }
}

void collect_positive_bag_sizes(const Value& v, std::vector<std::uint64_t>& out) {
  switch (v.kind()) {
    case Value::Kind::Atom:
    case Value::Kind::Star: return;
    case Value::Kind::Pair:
      collect_positive_bag_sizes(v.left(), out);
      collect_positive_bag_sizes(v.right(), out);
      return;
    case Value::Kind::Bag:
      if (v.positive()) out.push_back(v.items().size());
      for (auto& x : v.items()) collect_positive_bag_sizes(x, out);
      return;
  }
}

bool value_uniform(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Atom:
    case Value::Kind::Star: return true;
    case Value::Kind::Pair: return value_uniform(v.left()) && value_uniform(v.right());
    case Value::Kind::Bag: {
      for (std::size_t i = 1; i < v.items().size(); ++i)
        if (value_height(v.items()[i]) != value_height(v.items()[0])) return false;
      for (auto& x : v.items())
        if (!value_uniform(x)) return false;
      return true;
    }
  }
  return false;
}

}  // namespace

PointAnalysis analyze_point(const Point& x, std::uint64_t k) {
  PointAnalysis a;
  std::vector<Value> all;
  for (auto& [p, v] : x.singles) {
    (void)p;
    all.push_back(v);
  }
  for (auto& [p, bag] : x.bags) {
    (void)p;
    all.insert(all.end(), bag.begin(), bag.end());
  }

  std::map<std::pair<bool, std::string>, std::uint64_t> counts;
  for (auto& v : all) count_signed_atoms(v, counts);
  a.injective = true;
  for (auto& [key, n] : counts) {
    (void)key;
    if (n > 1) a.injective = false;
  }
  a.balanced = true;
  std::set<std::string> names;
  for (auto& [key, n] : counts) {
    (void)n;
    names.insert(key.second);
  }
  for (auto& g : names) {
    std::uint64_t pos = counts.count({true, g}) ? counts.at({true, g}) : 0;
    std::uint64_t neg = counts.count({false, g}) ? counts.at({false, g}) : 0;
    if (pos != neg) a.balanced = false;
  }

  std::vector<std::uint64_t> bag_sizes;
  for (auto& v : all) collect_positive_bag_sizes(v, bag_sizes);
  a.k_heterogeneous = k >= 2;
  std::set<std::uint64_t> seen_sizes;
  for (auto s : bag_sizes) {
    auto j = int_log(k, s);
    if (!j || *j == 0 || !seen_sizes.insert(s).second) a.k_heterogeneous = false;
  }

  a.uniform = true;
  for (auto& v : all)
    if (!value_uniform(v)) a.uniform = false;
  for (auto& v : all) {
    a.height = std::max(a.height, value_height(v));
    a.size += value_size(v);
  }
  return a;
}

Point apply_renaming(const Renaming& sigma, const Point& x) {
  Point out;
  for (auto& [p, v] : x.singles) out.singles.emplace(p, apply_renaming(sigma, v));
  for (auto& [p, bag] : x.bags) {
    std::vector<Value> nb;
    nb.reserve(bag.size());
    for (auto& v : bag) nb.push_back(apply_renaming(sigma, v));
    std::sort(nb.begin(), nb.end());
    out.bags.emplace(p, std::move(nb));
  }
  return out;
}

}  // namespace pnet
