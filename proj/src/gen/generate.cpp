// SPDX-License-Identifier: Apache-2.0
#include "gen/generate.hpp"

#include <algorithm>

namespace pnet {

namespace {

struct Builder {
  const GenParams& params;
  Rng rng;
  std::uint64_t names = 0;
  std::uint64_t ports_left;

  Builder(const GenParams& p) : params(p), rng(p.seed), ports_left(p.max_ports) {}

  PortId fresh() { return PortId::atom("p" + std::to_string(names++)); }

  bool take_port() {
    if (ports_left == 0) return false;
    --ports_left;
    return true;
  }

  // Returns a net whose shallow conclusions are all usable as premises; nested
  // conclusions may be left undoored when deferring is allowed.
  Net build(std::uint64_t depth_budget, bool allow_defer) {
    Net net;
    std::vector<PortId> outputs;  // shallow ports usable as wire sources

    auto add_port = [&](Label l) -> std::optional<PortId> {
      if (!take_port()) return std::nullopt;
      PortId p = fresh();
      net.ground.labels.emplace(p, l);
      return p;
    };

    std::uint64_t n_ax = rng.below(3);
    for (std::uint64_t i = 0; i < n_ax; ++i) {
      auto a = add_port(Label::Ax), b = add_port(Label::Ax);
      if (!a || !b) break;
      net.ground.axioms.insert(PortPair::make(*a, *b));
      outputs.push_back(*a);
      outputs.push_back(*b);
    }
    std::uint64_t n_const = rng.below(3);
    for (std::uint64_t i = 0; i < n_const; ++i) {
      auto p = add_port(rng.below(2) ? Label::One : Label::Bot);
      if (!p) break;
      outputs.push_back(*p);
    }

    // Quest pool: contraction targets shared by doors and wires.
    std::vector<PortId> quests;
    std::map<PortId, std::uint64_t> quest_arity;
    auto some_quest = [&]() -> std::optional<PortId> {
      if (!quests.empty() && rng.below(2)) {
        PortId q = quests[rng.below(quests.size())];
        if (quest_arity[q] < params.max_cosize) return q;
      }
      auto q = add_port(Label::Quest);
      if (!q) return std::nullopt;
      quests.push_back(*q);
      return q;
    };

    if (depth_budget > 0) {
      std::uint64_t n_boxes = rng.below(params.max_boxes_per_level + 1);
      for (std::uint64_t i = 0; i < n_boxes; ++i) {
        if (ports_left < 4) break;
        std::uint64_t sub_budget = rng.below(depth_budget) + (rng.below(3) == 0 ? 1 : 0);
        sub_budget = std::min(sub_budget, depth_budget - 1);
        Net content = build(sub_budget, true);
        auto shallow = content.ground.conclusions();
        if (shallow.empty()) continue;
        auto o = add_port(Label::Bang);
        if (!o) break;
        std::vector<PortPath> concl = conclusions(content);
        // Principal door: a shallow conclusion.
        PortId principal = *shallow.begin();
        std::map<PortPath, PortId> doors;
        doors.emplace(PortPath(principal), *o);
        bool ok = true;
        for (auto& c : concl) {
          if (c == PortPath(principal)) continue;
          if (allow_defer && rng.below(3) == 0) continue;
          std::optional<PortId> q = some_quest();
          if (q && quest_arity[*q] >= params.max_cosize) q.reset();
          if (!q) {
            for (auto& cand : quests)
              if (quest_arity[cand] < params.max_cosize) q = cand;
          }
          if (!q) {
            if (allow_defer) continue;
            ok = false;
            break;
          }
          doors.emplace(c, *q);
          quest_arity[*q]++;
        }
        if (!ok) {
          net.ground.labels.erase(*o);
          continue;
        }
        net.contents.emplace(*o, std::move(content));
        net.doors.emplace(*o, std::move(doors));
        outputs.push_back(*o);
      }
    }

    // Multiplicatives over available outputs; wires always point at the newer
    // port, so no cycle can close.
    auto mult_pass = [&]() {
      if (params.max_cosize < 2) return;
      std::uint64_t n_mult = rng.below(3);
      for (std::uint64_t i = 0; i < n_mult && outputs.size() >= 2; ++i) {
        auto p = add_port(rng.below(2) ? Label::Tensor : Label::Par);
        if (!p) break;
        std::uint64_t ia = rng.below(outputs.size());
        PortId a = outputs[ia];
        outputs.erase(outputs.begin() + ia);
        std::uint64_t ib = rng.below(outputs.size());
        PortId b = outputs[ib];
        outputs.erase(outputs.begin() + ib);
        net.ground.wires.emplace(a, *p);
        net.ground.wires.emplace(b, *p);
        net.ground.lefts.insert(a);
        outputs.push_back(*p);
      }
    };
    mult_pass();

    // Wire some outputs into quests.
    std::uint64_t n_into_quest = rng.below(3);
    for (std::uint64_t i = 0; i < n_into_quest && !outputs.empty(); ++i) {
      auto q = some_quest();
      if (!q) break;
      if (quest_arity[*q] >= params.max_cosize) continue;
      std::uint64_t ia = rng.below(outputs.size());
      PortId a = outputs[ia];
      if (a == *q) continue;
      outputs.erase(outputs.begin() + ia);
      net.ground.wires.emplace(a, *q);
      quest_arity[*q]++;
    }
    for (auto& q : quests)
      if (!net.ground.is_wire(q)) outputs.push_back(q);
    mult_pass();

    if (params.allow_cuts && outputs.size() >= 2 && rng.below(3) == 0) {
      std::uint64_t ia = rng.below(outputs.size());
      PortId a = outputs[ia];
      outputs.erase(outputs.begin() + ia);
      std::uint64_t ib = rng.below(outputs.size());
      PortId b = outputs[ib];
      outputs.erase(outputs.begin() + ib);
      net.ground.cuts.insert(PortPair::make(a, b));
    }

    if (net.ground.conclusions().empty()) {
      if (auto p = add_port(Label::Bot); p) (void)p;
    }
    return net;
  }
};

}  // namespace

Net random_net(const GenParams& params) {
  Builder b(params);
  Net net = b.build(params.max_depth, false);
  if (net.ground.labels.empty()) {
    net.ground.labels.emplace(PortId::atom("p0"), Label::Bot);
  }
  return net;
}

PseudoExperiment random_pseudo(const Net& r, std::uint64_t max_copies, Rng& rng) {
  PseudoExperiment e;
  for (auto& [o, c] : r.contents) {
    std::uint64_t n = rng.below(max_copies + 1);
    auto& copies = e.per_box[o];
    std::uint64_t done = 0;
    while (done < n) {
      std::uint64_t run = c.contents.empty() ? n - done : 1;
      copies.push_back(PseudoExperiment::copies(random_pseudo(c, max_copies, rng), run));
      done += run;
    }
  }
  return e;
}

std::optional<HetSample> sample_feasible_het(GenParams params, std::uint64_t k_floor,
                                             std::uint64_t cap, std::uint64_t attempts) {
  Rng seeds(params.seed);
  for (std::uint64_t i = 0; i < attempts; ++i) {
    GenParams p = params;
    p.seed = seeds.next();
    Net r = random_net(p);
    std::uint64_t k = std::max(basis(r), k_floor);
    PseudoExperiment e;
    try {
      e = make_k_heterogeneous(r, k, p.seed);
    } catch (const Error&) {
      continue;
    }
    if (!expansion_width(r, e, 0, cap)) continue;
    return HetSample{std::move(r), k, std::move(e)};
  }
  return std::nullopt;
}

}  // namespace pnet
