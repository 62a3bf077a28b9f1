// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "relsem/value.hpp"
#include "taylor/taylor.hpp"

namespace pnet {

// Everything an experiment chooses freely: one value per axiom pair, and a
// list of sub-seeds per box (one per copy). All port labels are derived.
struct ExperimentSeed {
  std::map<PortPair, Value> axiom_values;
  std::map<PortId, std::vector<ExperimentSeed>> box_seeds;
};

struct Experiment {
  std::map<PortId, Value> shallow;
  std::map<PortPath, std::vector<Value>> deep;  // sorted multisets
  std::map<PortId, std::vector<Experiment>> per_box;
};

// Derive all labels bottom-up; nothing is returned when a cut constraint
// fails (the expansion of such a net reduces to zero in the semantics).
std::optional<Experiment> build_experiment(const Net& s, const ExperimentSeed& seed);

struct Point {
  std::map<PortPath, Value> singles;            // shallow conclusions
  std::map<PortPath, std::vector<Value>> bags;  // nested conclusions
  bool operator==(const Point&) const = default;
};

Point result_point(const Net& s, const Experiment& e);

// Fresh atoms g<n> drawn from a counter; every axiom copy gets its own.
struct AtomSupply {
  std::uint64_t next = 0;
  std::string fresh() { return "g" + std::to_string(next++); }
};

// An atomic experiment whose induced pseudo-experiment matches p; requires a
// cut-free net. The result is injective by construction.
ExperimentSeed fresh_atomic_seed(const Net& s, const PseudoExperiment& p, AtomSupply& atoms);

PseudoExperiment induced_pseudo(const ExperimentSeed& seed);

// Transport an experiment onto the full expansion driven by its induced
// pseudo-experiment; the results agree on conclusions.
ExperimentSeed expansion_seed(const Net& r, const ExperimentSeed& seed);

struct PointAnalysis {
  bool injective = false;
  bool balanced = false;
  bool k_heterogeneous = false;
  bool uniform = false;
  std::uint64_t height = 0;
  std::uint64_t size = 0;
};

PointAnalysis analyze_point(const Point& x, std::uint64_t k);

Point apply_renaming(const Renaming& sigma, const Point& x);

}  // namespace pnet
