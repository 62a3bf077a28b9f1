// SPDX-License-Identifier: Apache-2.0
#include <algorithm>

#include "taylor/taylor.hpp"

namespace pnet {

PseudoCopies PseudoExperiment::copies(PseudoExperiment child, std::uint64_t count) {
  return PseudoCopies{std::make_shared<const PseudoExperiment>(std::move(child)), count};
}

bool operator==(const PseudoCopies& a, const PseudoCopies& b) {
  return a.count == b.count && *a.child == *b.child;
}

bool PseudoExperiment::operator==(const PseudoExperiment& o) const { return per_box == o.per_box; }

std::uint64_t copy_count(const PseudoExperiment& e, const PortId& box) {
  std::uint64_t n = 0;
  auto it = e.per_box.find(box);
  if (it == e.per_box.end()) return 0;
  for (auto& c : it->second) n += c.count;
  return n;
}

namespace {

void check_shape(const Net& r, const PseudoExperiment& e) {
  if (e.per_box.size() != r.contents.size())
    throw Error(Err::Shape, "pseudo-experiment does not cover the boxes");
  for (auto& [o, copies] : e.per_box) {
    if (!r.is_box(o)) throw Error(Err::Shape, "pseudo-experiment names a non-box: " + o.str());
    for (auto& c : copies) check_shape(r.content(o), *c.child);
  }
}

void profile_into(const Net& r, const PseudoExperiment& e, std::vector<PortId>& prefix,
                  Profile& out) {
  for (auto& [o, copies] : e.per_box) {
    prefix.push_back(o);
    out[prefix].insert(copy_count(e, o));
    for (auto& c : copies) profile_into(r.content(o), *c.child, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Profile e_sharp(const Net& r, const PseudoExperiment& e) {
  check_shape(r, e);
  Profile out;
  std::vector<PortId> prefix;
  profile_into(r, e, prefix, out);
  return out;
}

PseudoExperiment make_uniform(const Net& r, std::uint64_t n) {
  PseudoExperiment e;
  for (auto& [o, c] : r.contents) {
    if (n > 0)
      e.per_box[o] = {PseudoExperiment::copies(make_uniform(c, n), n)};
    else
      e.per_box[o] = {};
  }
  return e;
}

namespace {

PseudoExperiment make_het(const Net& r, std::uint64_t k, std::uint64_t& counter, Rng& rot) {
  PseudoExperiment e;
  std::vector<PortId> boxes;
  for (auto& [o, c] : r.contents) {
    (void)c;
    boxes.push_back(o);
  }
  if (!boxes.empty())
    std::rotate(boxes.begin(), boxes.begin() + (rot.below(boxes.size())), boxes.end());
  for (auto& o : boxes) {
    std::uint64_t j = counter++;
    auto count = checked_pow(k, j);
    if (!count) throw Error(Err::TooLarge, "copy count k^" + std::to_string(j) + " overflows");
    const Net& content = r.content(o);
    auto& copies = e.per_box[o];
    if (content.contents.empty()) {
      copies.push_back(PseudoExperiment::copies(PseudoExperiment{}, *count));
    } else {
      if (*count > (1u << 20))
        throw Error(Err::TooLarge, "heterogeneous assignment needs " + std::to_string(*count) +
                                       " distinct sub-assignments");
      for (std::uint64_t m = 0; m < *count; ++m)
        copies.push_back(PseudoExperiment::copies(make_het(content, k, counter, rot), 1));
    }
  }
  // Unmentioned boxes would be a shape error; contents covered above.
  return e;
}

}  // namespace

PseudoExperiment make_k_heterogeneous(const Net& r, std::uint64_t k, std::uint64_t seed) {
  if (k < 2) throw Error(Err::Precondition, "base must be at least 2");
  std::uint64_t counter = 1;
  Rng rot(seed ^ 0x5eedULL);
  return make_het(r, k, counter, rot);
}

namespace {

bool heterogeneous_rec(const Net& r, const PseudoExperiment& e, std::uint64_t k) {
  for (auto& [o, copies] : e.per_box) {
    const Net& content = r.content(o);
    bool content_has_boxes = !content.contents.empty();
    // Sibling copies must have pairwise disjoint profiles below.
    std::vector<Profile> profiles;
    for (auto& c : copies) {
      if (c.count >= 2 && content_has_boxes) return false;  // duplicated sub-assignment
      profiles.push_back(e_sharp(content, *c.child));
      if (!heterogeneous_rec(content, *c.child, k)) return false;
    }
    for (std::size_t i = 0; i < profiles.size(); ++i)
      for (std::size_t j = i + 1; j < profiles.size(); ++j)
        for (auto& [path, vals] : profiles[i]) {
          auto it = profiles[j].find(path);
          if (it == profiles[j].end()) continue;
          for (auto v : vals)
            if (it->second.count(v)) return false;
        }
  }
  return true;
}

}  // namespace

bool is_k_heterogeneous(const Net& r, const PseudoExperiment& e, std::uint64_t k) {
  if (k < 2) return false;
  Profile prof = e_sharp(r, e);
  for (auto& [path, vals] : prof) {
    (void)path;
    for (auto v : vals) {
      auto j = int_log(k, v);
      if (!j || *j == 0) return false;
    }
  }
  // Distinct boxes never share a copy count.
  std::map<std::uint64_t, const std::vector<PortId>*> owner;
  for (auto& [path, vals] : prof)
    for (auto v : vals) {
      auto [it, fresh] = owner.emplace(v, &path);
      if (!fresh && *it->second != path) return false;
    }
  return heterogeneous_rec(r, e, k);
}

namespace {
std::uint64_t total_ports(const Net& s) {
  std::uint64_t n = s.ground.labels.size();
  for (auto& [o, c] : s.contents) {
    (void)o;
    n += total_ports(c);
  }
  return n;
}
}  // namespace

std::optional<std::uint64_t> expansion_width(const Net& r, const PseudoExperiment& e,
                                             std::uint64_t level, std::uint64_t cap) {
  std::uint64_t total = r.ground.labels.size();
  if (total > cap) return std::nullopt;
  for (auto& [o, copies] : e.per_box) {
    const Net& content = r.content(o);
    if (depth(content) < level) {
      std::uint64_t add = total_ports(content);
      if (total > cap - std::min(add, cap)) return std::nullopt;
      total += add;
      continue;
    }
    for (auto& c : copies) {
      auto sub = expansion_width(content, *c.child, level, cap);
      if (!sub) return std::nullopt;
      if (*sub != 0 && c.count > cap / *sub) return std::nullopt;
      std::uint64_t add = *sub * c.count;
      if (total > cap - add) return std::nullopt;
      total += add;
    }
  }
  return total;
}

}  // namespace pnet
