// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "relsem/value.hpp"
#include "core/net.hpp"

namespace pnet {

class MellType {
 public:
  enum class Kind : std::uint8_t { Var, NVar, One, Bot, Tensor, Par, Bang, Quest };

  static MellType var(std::string name);
  static MellType nvar(std::string name);
  static MellType one();
  static MellType bot();
  static MellType tensor(MellType a, MellType b);
  static MellType par(MellType a, MellType b);
  static MellType bang(MellType a);
  static MellType quest(MellType a);

  Kind kind() const { return node_->kind; }
  const std::string& var_name() const { return node_->name; }
  const MellType& left() const { return node_->args[0]; }
  const MellType& right() const { return node_->args[1]; }
  const MellType& arg() const { return node_->args[0]; }

  MellType dual() const;
  std::string str() const;
  bool operator==(const MellType& o) const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<MellType> args;
  };
  std::shared_ptr<const Node> node_;
  static MellType make(Node n);
};

// Types for every port at every depth, addressed from the root.
struct TypedNet {
  Net net;
  std::map<PortPath, MellType> types;
};

ValidationReport typecheck(const TypedNet& tn);

// Shape of an unsigned value against a type, atoms standing for variable
// inhabitants.
bool value_in_type(const UValue& v, const MellType& t);

}  // namespace pnet
