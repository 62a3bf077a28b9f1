// SPDX-License-Identifier: Apache-2.0
#include "relsem/value.hpp"

#include <algorithm>

namespace pnet {

namespace {
std::size_t mix(std::size_t h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}
}  // namespace

Value Value::make(Node n) {
  std::size_t h = mix(0x11, (std::size_t)n.kind);
  h = mix(h, n.positive);
  h = mix(h, std::hash<std::string>{}(n.name));
  for (auto& v : n.items) h = mix(h, v.node_->hash);
  n.hash = h;
  Value v;
  v.node_ = std::make_shared<const Node>(std::move(n));
  return v;
}

Value Value::atom(bool positive, std::string name) {
  return make(Node{Kind::Atom, positive, std::move(name), {}, 0});
}
Value Value::star(bool positive) { return make(Node{Kind::Star, positive, "", {}, 0}); }
Value Value::pair(bool positive, Value left, Value right) {
  return make(Node{Kind::Pair, positive, "", {std::move(left), std::move(right)}, 0});
}
Value Value::bag(bool positive, std::vector<Value> items) {
  std::sort(items.begin(), items.end());
  return make(Node{Kind::Bag, positive, "", std::move(items), 0});
}

bool Value::operator==(const Value& o) const {
  if (node_ == o.node_) return true;
  if (!node_ || !o.node_) return false;
  if (node_->hash != o.node_->hash) return false;
  return (*this <=> o) == 0;
}

std::strong_ordering Value::operator<=>(const Value& o) const {
  if (node_ == o.node_) return std::strong_ordering::equal;
  if (!node_) return std::strong_ordering::less;
  if (!o.node_) return std::strong_ordering::greater;
  if (auto c = node_->kind <=> o.node_->kind; c != 0) return c;
  if (auto c = node_->positive <=> o.node_->positive; c != 0) return c;
  if (auto c = node_->name <=> o.node_->name; c != 0) return c;
  if (auto c = node_->items.size() <=> o.node_->items.size(); c != 0) return c;
  for (std::size_t i = 0; i < node_->items.size(); ++i)
    if (auto c = node_->items[i] <=> o.node_->items[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Value::str() const {
  std::string sign = positive() ? "+" : "-";
  switch (kind()) {
    case Kind::Atom: return "(" + sign + " " + atom_name() + ")";
    case Kind::Star: return "(" + sign + " *)";
    case Kind::Pair: return "(" + sign + " " + left().str() + " " + right().str() + ")";
    case Kind::Bag: {
      std::string s = "(" + sign + " [";
      bool first = true;
      for (auto& v : items()) {
        if (!first) s += " ";
        s += v.str();
        first = false;
      }
      return s + "])";
    }
  }
  return "?";
}

Value dual(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Atom: return Value::atom(!v.positive(), v.atom_name());
    case Value::Kind::Star: return Value::star(!v.positive());
    case Value::Kind::Pair: return Value::pair(!v.positive(), dual(v.left()), dual(v.right()));
    case Value::Kind::Bag: {
      std::vector<Value> items;
      items.reserve(v.items().size());
      for (auto& x : v.items()) items.push_back(dual(x));
      return Value::bag(!v.positive(), std::move(items));
    }
  }
  throw Error(Err::Internal, "bad value");
}

std::uint64_t value_height(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Atom:
    case Value::Kind::Star: return 0;
    case Value::Kind::Pair:
      return 1 + std::max(value_height(v.left()), value_height(v.right()));
    case Value::Kind::Bag: {
      std::uint64_t h = 0;
      for (auto& x : v.items()) h = std::max(h, value_height(x));
      return 1 + (v.items().empty() ? 0 : h);
    }
  }
  return 0;
}

std::uint64_t value_size(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Atom:
    case Value::Kind::Star: return 1;
    case Value::Kind::Pair: return 1 + value_size(v.left()) + value_size(v.right());
    case Value::Kind::Bag: {
      std::uint64_t s = 1;
      for (auto& x : v.items()) s += value_size(x);
      return s;
    }
  }
  return 0;
}

void collect_atoms(const Value& v, std::set<std::string>& out) {
  switch (v.kind()) {
    case Value::Kind::Atom: out.insert(v.atom_name()); return;
    case Value::Kind::Star: return;
    case Value::Kind::Pair:
      collect_atoms(v.left(), out);
      collect_atoms(v.right(), out);
      return;
    case Value::Kind::Bag:
      for (auto& x : v.items()) collect_atoms(x, out);
      return;
  }
}

Value apply_renaming(const Renaming& sigma, const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Atom: {
      auto it = sigma.find(v.atom_name());
      if (it == sigma.end()) return v;
      return v.positive() ? it->second : dual(it->second);
    }
    case Value::Kind::Star: return v;
    case Value::Kind::Pair:
      return Value::pair(v.positive(), apply_renaming(sigma, v.left()),
                         apply_renaming(sigma, v.right()));
    case Value::Kind::Bag: {
      std::vector<Value> items;
      items.reserve(v.items().size());
      for (auto& x : v.items()) items.push_back(apply_renaming(sigma, x));
      return Value::bag(v.positive(), std::move(items));
    }
  }
  throw Error(Err::Internal, "bad value");
}

Renaming compose(const Renaming& sigma, const Renaming& tau) {
  Renaming out;
  for (auto& [g, v] : tau) out.emplace(g, apply_renaming(sigma, v));
  for (auto& [g, v] : sigma)
    if (!out.count(g)) out.emplace(g, v);
  return out;
}

UValue UValue::make(Node n) {
  UValue v;
  v.node_ = std::make_shared<const Node>(std::move(n));
  return v;
}
UValue UValue::atom(std::string name) { return make(Node{Kind::Atom, std::move(name), {}}); }
UValue UValue::star() { return make(Node{Kind::Star, "", {}}); }
UValue UValue::pair(UValue l, UValue r) {
  return make(Node{Kind::Pair, "", {std::move(l), std::move(r)}});
}
UValue UValue::bag(std::vector<UValue> items) {
  std::sort(items.begin(), items.end());
  return make(Node{Kind::Bag, "", std::move(items)});
}

bool UValue::operator==(const UValue& o) const { return (*this <=> o) == 0; }

std::strong_ordering UValue::operator<=>(const UValue& o) const {
  if (node_ == o.node_) return std::strong_ordering::equal;
  if (auto c = node_->kind <=> o.node_->kind; c != 0) return c;
  if (auto c = node_->name <=> o.node_->name; c != 0) return c;
  if (auto c = node_->items.size() <=> o.node_->items.size(); c != 0) return c;
  for (std::size_t i = 0; i < node_->items.size(); ++i)
    if (auto c = node_->items[i] <=> o.node_->items[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string UValue::str() const {
  switch (kind()) {
    case Kind::Atom: return atom_name();
    case Kind::Star: return "*";
    case Kind::Pair: return "(" + left().str() + " " + right().str() + ")";
    case Kind::Bag: {
      std::string s = "[";
      bool first = true;
      for (auto& v : items()) {
        if (!first) s += " ";
        s += v.str();
        first = false;
      }
      return s + "]";
    }
  }
  return "?";
}

UValue erase_signs(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Atom: return UValue::atom(v.atom_name());
    case Value::Kind::Star: return UValue::star();
    case Value::Kind::Pair: return UValue::pair(erase_signs(v.left()), erase_signs(v.right()));
    case Value::Kind::Bag: {
      std::vector<UValue> items;
      items.reserve(v.items().size());
      for (auto& x : v.items()) items.push_back(erase_signs(x));
      return UValue::bag(std::move(items));
    }
  }
  throw Error(Err::Internal, "bad value");
}

}  // namespace pnet
