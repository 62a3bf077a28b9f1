// SPDX-License-Identifier: Apache-2.0
#include "relsem/typed.hpp"

namespace pnet {

MellType MellType::make(Node n) {
  MellType t;
  t.node_ = std::make_shared<const Node>(std::move(n));
  return t;
}
MellType MellType::var(std::string name) { return make({Kind::Var, std::move(name), {}}); }
MellType MellType::nvar(std::string name) { return make({Kind::NVar, std::move(name), {}}); }
MellType MellType::one() { return make({Kind::One, "", {}}); }
MellType MellType::bot() { return make({Kind::Bot, "", {}}); }
MellType MellType::tensor(MellType a, MellType b) {
  return make({Kind::Tensor, "", {std::move(a), std::move(b)}});
}
MellType MellType::par(MellType a, MellType b) {
  return make({Kind::Par, "", {std::move(a), std::move(b)}});
}
MellType MellType::bang(MellType a) { return make({Kind::Bang, "", {std::move(a)}}); }
MellType MellType::quest(MellType a) { return make({Kind::Quest, "", {std::move(a)}}); }

MellType MellType::dual() const {
  switch (kind()) {
    case Kind::Var: return nvar(var_name());
    case Kind::NVar: return var(var_name());
    case Kind::One: return bot();
    case Kind::Bot: return one();
    case Kind::Tensor: return par(left().dual(), right().dual());
    case Kind::Par: return tensor(left().dual(), right().dual());
    case Kind::Bang: return quest(arg().dual());
    case Kind::Quest: return bang(arg().dual());
  }
  throw Error(Err::Internal, "bad type");
}

std::string MellType::str() const {
  switch (kind()) {
    case Kind::Var: return var_name();
    case Kind::NVar: return var_name() + "^";
    case Kind::One: return "1";
    case Kind::Bot: return "bot";
    case Kind::Tensor: return "(" + left().str() + " x " + right().str() + ")";
    case Kind::Par: return "(" + left().str() + " par " + right().str() + ")";
    case Kind::Bang: return "!" + arg().str();
    case Kind::Quest: return "?" + arg().str();
  }
  return "?";
}

bool MellType::operator==(const MellType& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind() || node_->name != o.node_->name ||
      node_->args.size() != o.node_->args.size())
    return false;
  for (std::size_t i = 0; i < node_->args.size(); ++i)
    if (!(node_->args[i] == o.node_->args[i])) return false;
  return true;
}

namespace {

void typecheck_level(const Net& s, const std::map<PortPath, MellType>& types,
                     std::vector<PortId>& prefix, ValidationReport& rep) {
  std::string where;
  for (auto& b : prefix) where += b.str() + "/";
  auto add = [&](const std::string& rule, const std::string& detail) {
    rep.items.push_back({where, rule, detail});
  };
  auto type_of = [&](const PortId& p) -> const MellType* {
    auto it = types.find(PortPath(std::vector<PortId>(prefix), p));
    return it == types.end() ? nullptr : &it->second;
  };
  const GroundNet& g = s.ground;
  for (auto& [p, l] : g.labels) {
    const MellType* t = type_of(p);
    if (!t) {
      add("port-untyped", p.str());
      continue;
    }
    switch (l) {
      case Label::One:
        if (t->kind() != MellType::Kind::One) add("constant-type-mismatch", p.str());
        break;
      case Label::Bot:
        if (t->kind() != MellType::Kind::Bot) add("constant-type-mismatch", p.str());
        break;
      case Label::Tensor:
      case Label::Par: {
        auto want = l == Label::Tensor ? MellType::Kind::Tensor : MellType::Kind::Par;
        if (t->kind() != want) {
          add("connective-type-mismatch", p.str() + " : " + t->str());
          break;
        }
        for (auto& [w, tgt] : g.wires) {
          if (tgt != p) continue;
          const MellType* tw = type_of(w);
          if (!tw) continue;
          const MellType& want_side = g.lefts.count(w) ? t->left() : t->right();
          if (!(*tw == want_side)) add("premise-type-mismatch", w.str() + " : " + tw->str());
        }
        break;
      }
      case Label::Bang:
      case Label::Quest: {
        auto want = l == Label::Bang ? MellType::Kind::Bang : MellType::Kind::Quest;
        if (t->kind() != want) {
          add("connective-type-mismatch", p.str() + " : " + t->str());
          break;
        }
        for (auto& [w, tgt] : g.wires) {
          if (tgt != p) continue;
          const MellType* tw = type_of(w);
          if (tw && !(*tw == t->arg())) add("premise-type-mismatch", w.str() + " : " + tw->str());
        }
        break;
      }
      case Label::Ax: break;
    }
  }
  for (auto& a : g.axioms) {
    const MellType *ta = type_of(a.a), *tb = type_of(a.b);
    if (!ta || !tb) continue;
    bool var_pair = (ta->kind() == MellType::Kind::Var || ta->kind() == MellType::Kind::NVar);
    if (!var_pair || !(*tb == ta->dual()))
      add("axiom-not-dual-variables", a.a.str() + ", " + a.b.str());
  }
  for (auto& c : g.cuts) {
    const MellType *ta = type_of(c.a), *tb = type_of(c.b);
    if (ta && tb && !(*tb == ta->dual())) add("cut-not-dual", c.a.str() + ", " + c.b.str());
  }
  for (auto& [o, ds] : s.doors) {
    const MellType* to = type_of(o);
    for (auto& [path, tgt] : ds) {
      std::vector<PortId> inner_prefix = prefix;
      inner_prefix.push_back(o);
      inner_prefix.insert(inner_prefix.end(), path.boxes.begin(), path.boxes.end());
      auto it = types.find(PortPath(inner_prefix, path.port));
      if (it == types.end()) {
        add("door-untyped", path.str());
        continue;
      }
      const MellType& inner = it->second;
      const MellType* tt = tgt == o ? to : type_of(tgt);
      if (!tt) continue;
      bool ok = (tt->kind() == MellType::Kind::Bang || tt->kind() == MellType::Kind::Quest) &&
                tt->arg() == inner;
      if (!ok) add("door-type-mismatch", path.str() + " -> " + tgt.str());
    }
  }
  for (auto& [o, c] : s.contents) {
    prefix.push_back(o);
    typecheck_level(c, types, prefix, rep);
    prefix.pop_back();
  }
}

}  // namespace

ValidationReport typecheck(const TypedNet& tn) {
  ValidationReport rep;
  std::vector<PortId> prefix;
  typecheck_level(tn.net, tn.types, prefix, rep);
  return rep;
}

bool value_in_type(const UValue& v, const MellType& t) {
  switch (t.kind()) {
    case MellType::Kind::Var:
    case MellType::Kind::NVar: return v.kind() == UValue::Kind::Atom;
    case MellType::Kind::One:
    case MellType::Kind::Bot: return v.kind() == UValue::Kind::Star;
    case MellType::Kind::Tensor:
    case MellType::Kind::Par:
      return v.kind() == UValue::Kind::Pair && value_in_type(v.left(), t.left()) &&
             value_in_type(v.right(), t.right());
    case MellType::Kind::Bang:
    case MellType::Kind::Quest: {
      if (v.kind() != UValue::Kind::Bag) return false;
      for (auto& x : v.items())
        if (!value_in_type(x, t.arg())) return false;
      return true;
    }
  }
  return false;
}

}  // namespace pnet
