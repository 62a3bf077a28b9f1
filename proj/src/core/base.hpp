// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pnet {

enum class Err {
  Parse,
  Validation,
  NotGluable,
  Cycle,
  BadTarget,
  Precondition,
  NameClash,
  Shape,
  NonPower,
  DuplicateArity,
  DigitMismatch,
  BasisViolation,
  CutPresent,
  TooLarge,
  UnknownPort,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Err kind, std::string msg) : std::runtime_error(std::move(msg)), kind(kind) {}
  Err kind;
};

const char* err_name(Err e);

// A port identifier: either a named atom or a copy tag (box, ordinal, inner)
// produced when a box is expanded. The two constructors never collide, so
// fresh names for copies need no global counter.
class PortId {
 public:
  PortId() = default;

  static PortId atom(std::string name);
  static PortId copy(PortId box, std::uint64_t ordinal, PortId inner);

  bool valid() const { return node_ != nullptr; }
  bool is_atom() const;
  bool is_copy() const;

  const std::string& name() const;
  const PortId& box() const;
  std::uint64_t ordinal() const;
  const PortId& inner() const;

  std::string str() const;  // dotted form, e.g. o.3.q
  std::size_t hash() const;

  bool operator==(const PortId& o) const;
  std::strong_ordering operator<=>(const PortId& o) const;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct PortId::Node {
  bool is_copy = false;
  std::string name;
  PortId box;
  std::uint64_t ordinal = 0;
  PortId inner;
  std::size_t hash = 0;
};

inline bool PortId::is_atom() const { return node_ && !node_->is_copy; }
inline bool PortId::is_copy() const { return node_ && node_->is_copy; }
inline const std::string& PortId::name() const { return node_->name; }
inline const PortId& PortId::box() const { return node_->box; }
inline std::uint64_t PortId::ordinal() const { return node_->ordinal; }
inline const PortId& PortId::inner() const { return node_->inner; }
inline std::size_t PortId::hash() const { return node_ ? node_->hash : 0; }

// An unordered pair of ports, stored with a < b.
struct PortPair {
  PortId a, b;

  static PortPair make(PortId x, PortId y);
  bool contains(const PortId& p) const { return p == a || p == b; }
  const PortId& other(const PortId& p) const { return p == a ? b : a; }

  bool operator==(const PortPair&) const = default;
  std::strong_ordering operator<=>(const PortPair&) const = default;
};

// Address of a port anywhere in a net: the chain of boxes entered, then the
// port at that level. An empty chain addresses a shallow port.
struct PortPath {
  std::vector<PortId> boxes;
  PortId port;

  PortPath() = default;
  explicit PortPath(PortId p) : port(std::move(p)) {}
  PortPath(std::vector<PortId> bs, PortId p) : boxes(std::move(bs)), port(std::move(p)) {}

  bool shallow() const { return boxes.empty(); }
  PortPath tail() const;                     // drop the first box
  PortPath prefixed(const PortId& o) const;  // prepend box o
  std::string str() const;

  bool operator==(const PortPath&) const = default;
  std::strong_ordering operator<=>(const PortPath&) const = default;
};

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp);
std::optional<std::uint64_t> int_log(std::uint64_t base, std::uint64_t value);  // value = base^j

// Deterministic 64-bit mix/stream (splitmix64), used everywhere randomness is
// needed so runs are reproducible from a single seed.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t n);  // uniform in [0, n)
  Rng split();                           // independent stream
};

}  // namespace pnet
