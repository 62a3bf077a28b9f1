// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <set>
#include <vector>

#include "core/base.hpp"

namespace pnet {

// Signed trees over atoms, *, pairs and finite multisets: the relational
// domain. Bags are kept sorted, so structural equality is multiset equality.
class Value {
 public:
  enum class Kind : std::uint8_t { Atom, Star, Pair, Bag };

  static Value atom(bool positive, std::string name);
  static Value star(bool positive);
  static Value pair(bool positive, Value left, Value right);
  static Value bag(bool positive, std::vector<Value> items);

  bool valid() const { return node_ != nullptr; }
  Kind kind() const { return node_->kind; }
  bool positive() const { return node_->positive; }
  const std::string& atom_name() const { return node_->name; }
  const Value& left() const { return node_->items[0]; }
  const Value& right() const { return node_->items[1]; }
  const std::vector<Value>& items() const { return node_->items; }

  std::string str() const;

  bool operator==(const Value& o) const;
  std::strong_ordering operator<=>(const Value& o) const;

 private:
  struct Node {
    Kind kind;
    bool positive;
    std::string name;
    std::vector<Value> items;
    std::size_t hash = 0;
  };
  std::shared_ptr<const Node> node_;
  static Value make(Node n);
};

Value dual(const Value& v);
std::uint64_t value_height(const Value& v);
std::uint64_t value_size(const Value& v);
void collect_atoms(const Value& v, std::set<std::string>& out);

// sigma maps atoms to values; missing atoms act as identity. The action flips
// through negative atoms and is homomorphic elsewhere.
using Renaming = std::map<std::string, Value>;
Value apply_renaming(const Renaming& sigma, const Value& v);
Renaming compose(const Renaming& sigma, const Renaming& tau);  // sigma . tau

// Unsigned values (the image of the forgetful erasure).
class UValue {
 public:
  enum class Kind : std::uint8_t { Atom, Star, Pair, Bag };
  static UValue atom(std::string name);
  static UValue star();
  static UValue pair(UValue left, UValue right);
  static UValue bag(std::vector<UValue> items);

  Kind kind() const { return node_->kind; }
  const std::string& atom_name() const { return node_->name; }
  const UValue& left() const { return node_->items[0]; }
  const UValue& right() const { return node_->items[1]; }
  const std::vector<UValue>& items() const { return node_->items; }
  std::string str() const;
  bool operator==(const UValue& o) const;
  std::strong_ordering operator<=>(const UValue& o) const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<UValue> items;
  };
  std::shared_ptr<const Node> node_;
  static UValue make(Node n);
};

UValue erase_signs(const Value& v);

}  // namespace pnet
