// SPDX-License-Identifier: Apache-2.0
#include "core/ops.hpp"
#include "taylor/taylor.hpp"

namespace pnet {

namespace {

void merge_into(Net& dst, const Net& part) {
  for (auto& [p, l] : part.ground.labels) dst.ground.labels.emplace(p, l);
  for (auto& [w, t] : part.ground.wires) dst.ground.wires.emplace(w, t);
  dst.ground.lefts.insert(part.ground.lefts.begin(), part.ground.lefts.end());
  dst.ground.axioms.insert(part.ground.axioms.begin(), part.ground.axioms.end());
  dst.ground.cuts.insert(part.ground.cuts.begin(), part.ground.cuts.end());
  for (auto& [o, c] : part.contents) dst.contents.emplace(o, c);
  for (auto& [o, d] : part.doors) dst.doors.emplace(o, d);
}

ExpansionTerm expand_rec(const Net& r, const PseudoExperiment& e, std::uint64_t level) {
  ExpansionTerm out;
  out.level = level;

  // Kept part: the whole ground plus boxes of content depth < level.
  out.term = restrict_leq(r, level);
  for (auto& path : all_port_paths(out.term)) out.kappa.emplace(path, path);

  for (auto& [o, copies] : e.per_box) {
    const Net& content = r.content(o);
    if (depth(content) < level) continue;
    const auto& door_map = r.doors.at(o);
    std::uint64_t ordinal = 0;
    for (auto& group : copies) {
      for (std::uint64_t rep = 0; rep < group.count; ++rep, ++ordinal) {
        ExpansionTerm sub = expand_rec(content, *group.child, level);
        Net tagged = tag_shallow(o, ordinal, sub.term);
        merge_into(out.term, tagged);

        auto tag_path = [&](const PortPath& p) {
          if (p.shallow()) return PortPath(PortId::copy(o, ordinal, p.port));
          PortPath q = p;
          q.boxes.front() = PortId::copy(o, ordinal, q.boxes.front());
          return q;
        };
        for (auto& [p, src] : sub.kappa) out.kappa.emplace(tag_path(p), src.prefixed(o));

        // Conclusions of the copy whose source was a door of o pick up the
        // original door targets: shallow ones as wires, nested ones as doors.
        for (auto& c : conclusions(sub.term)) {
          const PortPath& src = sub.kappa.at(c);
          auto door = door_map.find(src);
          if (door == door_map.end()) continue;
          PortPath here = tag_path(c);
          if (here.shallow())
            out.term.ground.wires.emplace(here.port, door->second);
          else
            out.term.doors[here.boxes.front()].emplace(here.tail(), door->second);
        }
      }
    }
  }
  return out;
}

}  // namespace

ExpansionTerm expand(const Net& r, const PseudoExperiment& e, std::uint64_t level) {
  // Shape check up front; the recursion then trusts the structure.
  e_sharp(r, e);
  return expand_rec(r, e, level);
}

std::uint64_t predicted_arity(const Net& r, const PseudoExperiment& e, std::uint64_t level,
                              const PortId& p) {
  if (!r.ground.has_port(p)) throw Error(Err::UnknownPort, "no such shallow port: " + p.str());
  Net trunc = restrict_leq(r, level);
  std::uint64_t total = arity(trunc, p);
  Profile prof = e_sharp(r, e);

  // Each door path landing on p from inside a box of content depth >= level
  // contributes the summed profile of the deepest such box around it.
  for (auto& [path, guard] : deep_ports_with_guard(r, level)) {
    // Only door sources matter: a deep port contributes iff it is a door of
    // its outermost box chain with final target p. Doors are conclusions of
    // contents, addressed from the top as (box, content path).
    if (path.boxes.empty()) continue;
    const PortId& top_box = path.boxes.front();
    auto ds = r.doors.find(top_box);
    if (ds == r.doors.end()) continue;
    auto door = ds->second.find(path.tail());
    if (door == ds->second.end() || door->second != p) continue;
    std::uint64_t add = 0;
    for (auto v : prof.at(guard)) add += v;
    total += add;
  }
  return total;
}

std::vector<std::uint32_t> base_k_digits(std::uint64_t value, std::uint64_t k) {
  std::vector<std::uint32_t> digits;
  while (value) {
    digits.push_back((std::uint32_t)(value % k));
    value /= k;
  }
  return digits;
}

MnChain mn_chain_from_exponents(std::set<std::uint64_t> exponents, std::uint64_t k) {
  if (k < 2) throw Error(Err::Precondition, "base must be at least 2");
  MnChain chain;
  chain.k = k;
  chain.M.push_back(std::move(exponents));
  while (!chain.M.back().empty()) {
    auto digits = base_k_digits(chain.M.back().size(), k);
    std::set<std::uint64_t> next;
    for (std::uint64_t j = 1; j < digits.size(); ++j)
      if (digits[j]) next.insert(j);
    chain.digits.push_back(std::move(digits));
    std::set<std::uint64_t> n;
    for (auto j : chain.M.back())
      if (!next.count(j)) n.insert(j);
    chain.N.push_back(std::move(n));
    chain.M.push_back(std::move(next));
  }
  return chain;
}

MnChain mn_chain(const Profile& profile, std::uint64_t k) {
  std::set<std::uint64_t> exponents;
  for (auto& [path, vals] : profile) {
    (void)path;
    for (auto v : vals) {
      auto j = int_log(k, v);
      if (!j || *j == 0)
        throw Error(Err::NonPower, "copy count " + std::to_string(v) + " is not a power of " +
                                       std::to_string(k));
      exponents.insert(*j);
    }
  }
  return mn_chain_from_exponents(std::move(exponents), k);
}

std::map<std::uint64_t, PortId> cocontraction_arity_exponents(const Net& term, std::uint64_t k) {
  std::map<std::uint64_t, PortId> out;
  for (auto& [p, l] : term.ground.labels) {
    if (l != Label::Bang || term.is_box(p)) continue;
    std::uint64_t a = arity(term, p);
    auto j = int_log(k, a);
    if (!j || *j == 0)
      throw Error(Err::NonPower,
                  "co-contraction arity " + std::to_string(a) + " is not a positive power of " +
                      std::to_string(k) + ": " + p.str());
    auto [it, fresh] = out.emplace(*j, p);
    if (!fresh)
      throw Error(Err::DuplicateArity,
                  "two co-contractions of arity " + std::to_string(a) + ": " + it->second.str() +
                      ", " + p.str());
  }
  return out;
}

std::map<std::uint64_t, PortId> bang_map(const Net& term, std::uint64_t k) {
  return cocontraction_arity_exponents(term, k);
}

std::set<PortId> critical_ports(const Net& term, std::uint64_t k, std::uint64_t j) {
  std::set<PortId> out;
  for (auto& [p, l] : term.ground.labels) {
    if (!is_exponential(l)) continue;
    auto digits = base_k_digits(arity(term, p), k);
    if (j < digits.size() && digits[j]) out.insert(p);
  }
  return out;
}

std::set<PortId> critical_ports(const Net& term, std::uint64_t k,
                                const std::set<std::uint64_t>& js) {
  std::set<PortId> out;
  for (auto j : js) {
    auto part = critical_ports(term, k, j);
    out.insert(part.begin(), part.end());
  }
  return out;
}

}  // namespace pnet
