// SPDX-License-Identifier: Apache-2.0
#include "core/base.hpp"

namespace pnet {

const char* err_name(Err e) {
  switch (e) {
    case Err::Parse: return "parse";
    case Err::Validation: return "validation";
    case Err::NotGluable: return "not-gluable";
    case Err::Cycle: return "cycle-introduced";
    case Err::BadTarget: return "bad-target";
    case Err::Precondition: return "precondition";
    case Err::NameClash: return "name-clash";
    case Err::Shape: return "shape-mismatch";
    case Err::NonPower: return "non-power";
    case Err::DuplicateArity: return "duplicate-arity";
    case Err::DigitMismatch: return "digit-mismatch";
    case Err::BasisViolation: return "basis-violation";
    case Err::CutPresent: return "cut-present";
    case Err::TooLarge: return "too-large";
    case Err::UnknownPort: return "unknown-port";
    case Err::Internal: return "internal";
  }
  return "unknown";
}

namespace {
std::size_t mix(std::size_t h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}
}  // namespace

PortId PortId::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->is_copy = false;
  n->name = std::move(name);
  n->hash = mix(0x1234, std::hash<std::string>{}(n->name));
  PortId p;
  p.node_ = std::move(n);
  return p;
}

PortId PortId::copy(PortId box, std::uint64_t ordinal, PortId inner) {
  auto n = std::make_shared<Node>();
  n->is_copy = true;
  n->box = std::move(box);
  n->ordinal = ordinal;
  n->inner = std::move(inner);
  n->hash = mix(mix(mix(0x777, n->box.hash()), std::hash<std::uint64_t>{}(ordinal)), n->inner.hash());
  PortId p;
  p.node_ = std::move(n);
  return p;
}

bool PortId::operator==(const PortId& o) const {
  if (node_ == o.node_) return true;
  if (!node_ || !o.node_) return false;
  if (node_->hash != o.node_->hash || node_->is_copy != o.node_->is_copy) return false;
  if (!node_->is_copy) return node_->name == o.node_->name;
  return node_->ordinal == o.node_->ordinal && node_->box == o.node_->box && node_->inner == o.node_->inner;
}

std::strong_ordering PortId::operator<=>(const PortId& o) const {
  if (node_ == o.node_) return std::strong_ordering::equal;
  if (!node_) return std::strong_ordering::less;
  if (!o.node_) return std::strong_ordering::greater;
  if (node_->is_copy != o.node_->is_copy)
    return node_->is_copy ? std::strong_ordering::greater : std::strong_ordering::less;
  if (!node_->is_copy) return node_->name <=> o.node_->name;
  if (auto c = node_->box <=> o.node_->box; c != 0) return c;
  if (auto c = node_->ordinal <=> o.node_->ordinal; c != 0) return c;
  return node_->inner <=> o.node_->inner;
}

std::string PortId::str() const {
  if (!valid()) return "<none>";
  if (is_atom()) return name();
  std::string b = box().is_atom() ? box().str() : "(" + box().str() + ")";
  return b + "." + std::to_string(ordinal()) + "." + inner().str();
}

PortPair PortPair::make(PortId x, PortId y) {
  if (y < x) std::swap(x, y);
  return PortPair{std::move(x), std::move(y)};
}

PortPath PortPath::tail() const {
  PortPath t;
  t.boxes.assign(boxes.begin() + 1, boxes.end());
  t.port = port;
  return t;
}

PortPath PortPath::prefixed(const PortId& o) const {
  PortPath t;
  t.boxes.reserve(boxes.size() + 1);
  t.boxes.push_back(o);
  t.boxes.insert(t.boxes.end(), boxes.begin(), boxes.end());
  t.port = port;
  return t;
}

std::string PortPath::str() const {
  std::string s;
  for (const auto& b : boxes) s += b.str() + ":";
  s += port.str();
  return s;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  while (exp--) {
    if (base != 0 && r > UINT64_MAX / base) return std::nullopt;
    r *= base;
  }
  return r;
}

std::optional<std::uint64_t> int_log(std::uint64_t base, std::uint64_t value) {
  if (base < 2 || value == 0) return std::nullopt;
  std::uint64_t j = 0, v = 1;
  while (v < value) {
    if (v > UINT64_MAX / base) return std::nullopt;
    v *= base;
    ++j;
  }
  if (v != value) return std::nullopt;
  return j;
}

std::uint64_t Rng::next() {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) return 0;
  return next() % n;
}

Rng Rng::split() { return Rng(next() ^ 0xd1b54a32d192ed03ULL); }

}  // namespace pnet
