// SPDX-License-Identifier: Apache-2.0
#include "rebuild/rebuild.hpp"

#include <algorithm>

#include "components/components.hpp"
#include "core/iso.hpp"
#include "core/ops.hpp"

namespace pnet {

namespace {

struct ClassedComponent {
  Component comp;
  std::set<std::uint64_t> member_of;  // levels j whose boundary admitted it
};

}  // namespace

RebuildState rebuild_step(const RebuildState& state) {
  const std::uint64_t k = state.chain.k;
  if (state.level >= state.chain.levels()) return state;

  RebuildState next = state;
  next.level = state.level + 1;
  const auto& N = state.chain.N[state.level];
  if (N.empty()) return next;

  const Net& term = state.term;
  auto bangs = cocontraction_arity_exponents(term, k);
  for (auto j : state.chain.M[state.level])
    if (!bangs.count(j))
      throw Error(Err::DigitMismatch,
                  "term has no co-contraction of arity k^" + std::to_string(j));

  // Bounded components per level, deduplicated across levels.
  std::map<std::string, ClassedComponent> by_key;
  std::map<std::uint64_t, std::set<PortId>> crit;
  for (auto j : N) {
    crit[j] = critical_ports(term, k, j);
    for (auto& comp : closed_components(term, crit[j], k).members) {
      std::string key = structural_key(comp.net);
      auto [it, fresh] = by_key.emplace(key, ClassedComponent{comp, {}});
      it->second.member_of.insert(j);
      (void)fresh;
    }
  }

  std::vector<const ClassedComponent*> all;
  for (auto& [key, cc] : by_key) {
    (void)key;
    all.push_back(&cc);
  }

  // Group by iso fixing conclusions; the shared boundary names make the class
  // of a member determine its level memberships.
  std::vector<std::vector<const ClassedComponent*>> classes;
  {
    std::map<std::pair<std::uint64_t, std::string>, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < all.size(); ++i) {
      std::string concl;
      for (auto& c : all[i]->comp.net.ground.conclusions()) concl += c.str() + ";";
      buckets[{wl_hash(all[i]->comp.net, true), concl}].push_back(i);
    }
    for (auto& [key, idxs] : buckets) {
      (void)key;
      std::vector<std::vector<const ClassedComponent*>> local;
      for (auto i : idxs) {
        bool placed = false;
        for (auto& cls : local) {
          if (iso_check(cls.front()->comp.net, all[i]->comp.net, true)) {
            cls.push_back(all[i]);
            placed = true;
            break;
          }
        }
        if (!placed) local.push_back({all[i]});
      }
      for (auto& cls : local) classes.push_back(std::move(cls));
    }
  }

  std::set<PortId> removed_interior;
  std::map<std::uint64_t, std::vector<const Component*>> box_pieces;  // j -> contents
  for (auto& cls : classes) {
    std::sort(cls.begin(), cls.end(), [](const ClassedComponent* a, const ClassedComponent* b) {
      return structural_key(a->comp.net) < structural_key(b->comp.net);
    });
    for (auto* m : cls)
      if (m->member_of != cls.front()->member_of)
        throw Error(Err::DigitMismatch, "equivalent components with different boundaries");
    auto digits = base_k_digits(cls.size(), k);
    std::uint64_t remove = 0;
    for (auto j : N) {
      std::uint32_t dj = j < digits.size() ? digits[j] : 0;
      if (dj == 0) continue;
      if (!cls.front()->member_of.count(j))
        throw Error(Err::DigitMismatch, "class digit names a level the boundary excludes");
      auto pow = checked_pow(k, j);
      if (!pow || remove + dj * *pow > cls.size())
        throw Error(Err::DigitMismatch, "class smaller than its digit decomposition");
      remove += dj * *pow;
      for (std::uint32_t t = 0; t < dj; ++t)
        box_pieces[j].push_back(&cls[t]->comp);
    }
    // Digits at positions outside the current level set must belong to the
    // remaining chain; anything else signals a non-heterogeneous input.
    for (std::uint64_t j = 1; j < digits.size(); ++j) {
      if (!digits[j]) continue;
      if (!state.chain.M[state.level].count(j))
        throw Error(Err::DigitMismatch,
                    "class count has a digit at k^" + std::to_string(j) +
                        " outside the current exponent set");
    }
    for (std::uint64_t t = 0; t < remove; ++t)
      removed_interior.insert(cls[t]->comp.interior.begin(), cls[t]->comp.interior.end());
  }

  // Surviving depth-0 part. Old boxes and their doors ride along.
  std::set<PortId> keep;
  for (auto& [p, l] : term.ground.labels) {
    (void)l;
    if (!removed_interior.count(p)) keep.insert(p);
  }
  auto restricted = substructure(term, keep, {});
  if (!restricted)
    throw Error(Err::DigitMismatch, "surviving ports do not form a well-formed net");
  Net out = std::move(*restricted);

  // Close the new boxes.
  for (auto j : N) {
    const PortId& box = bangs.at(j);
    if (!keep.count(box))
      throw Error(Err::DigitMismatch, "co-contraction of the new box was consumed");
    std::vector<Net> pieces;
    for (auto* c : box_pieces[j]) pieces.push_back(c->net);
    Net inside = glue(pieces);
    Stripped stripped = strip_shallow(inside);
    std::size_t principal = 0;
    for (auto& [path, tgt] : stripped.removed)
      if (tgt == box) ++principal;
    if (principal != 1)
      throw Error(Err::DigitMismatch, "principal door of " + box.str() + " is not unique");
    if (out.ground.arity(box) != 0)
      throw Error(Err::DigitMismatch, "premises of " + box.str() + " were not absorbed");
    out.contents.emplace(box, std::move(stripped.net));
    out.doors.emplace(box, std::move(stripped.removed));
  }

  next.term = std::move(out);
  return next;
}

Net rebuild(const Net& term0, std::uint64_t k) {
  std::set<std::uint64_t> exponents;
  for (auto& [j, p] : cocontraction_arity_exponents(term0, k)) {
    (void)p;
    exponents.insert(j);
  }
  RebuildState state{term0, mn_chain_from_exponents(std::move(exponents), k), 0};
  while (state.level < state.chain.levels()) state = rebuild_step(state);
  return state.term;
}

std::uint64_t recover_base(const Net& term_khet, std::uint64_t floor_basis) {
  std::vector<std::uint64_t> arities;
  for (auto& [p, l] : term_khet.ground.labels)
    if (l == Label::Bang && !term_khet.is_box(p)) arities.push_back(arity(term_khet, p));
  if (arities.empty())
    throw Error(Err::Precondition, "term has no co-contractions");
  std::sort(arities.begin(), arities.end());
  std::uint64_t a0 = arities.front();
  if (a0 < 2) throw Error(Err::NonPower, "co-contraction of arity " + std::to_string(a0));
  // Candidate bases are the integer roots of the smallest arity, smallest
  // first; every arity must then be a positive power.
  std::vector<std::uint64_t> candidates;
  for (std::uint64_t m = 63; m >= 1; --m) {
    std::uint64_t lo = 2, hi = a0, root = 0;
    while (lo <= hi) {
      std::uint64_t mid = lo + (hi - lo) / 2;
      auto p = checked_pow(mid, m);
      if (p && *p == a0) {
        root = mid;
        break;
      }
      if (!p || *p > a0)
        hi = mid - 1;
      else
        lo = mid + 1;
    }
    if (root) candidates.push_back(root);
  }
  for (auto k : candidates) {
    if (k < floor_basis) continue;
    bool ok = true;
    for (auto a : arities) {
      auto j = int_log(k, a);
      if (!j || *j == 0) {
        ok = false;
        break;
      }
    }
    if (ok) return k;
  }
  std::uint64_t best = candidates.empty() ? 0 : candidates.back();
  throw Error(Err::BasisViolation,
              "no admissible base >= " + std::to_string(floor_basis) +
                  " (largest consistent base: " + std::to_string(best) + ")");
}

Net rebuild_from_pair(const Net& term_one_exp, const Net& term_khet) {
  if (depth(term_one_exp) != 0)
    throw Error(Err::Precondition, "measure term must be fully expanded");
  bool any_cocontraction = false;
  for (auto& [p, l] : term_khet.ground.labels)
    if (l == Label::Bang && !term_khet.is_box(p)) any_cocontraction = true;
  (void)any_cocontraction;
  UnitTermMeasures m = measures_from_one_term(term_one_exp);
  std::uint64_t floor_basis =
      std::max<std::uint64_t>({m.cosize, m.n_boxes, m.n_invisible, 1}) + 1;
  if (m.n_boxes == 0) return term_khet;  // the source had depth 0
  std::uint64_t k = recover_base(term_khet, floor_basis);
  return rebuild(term_khet, k);
}

}  // namespace pnet
