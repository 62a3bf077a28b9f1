// SPDX-License-Identifier: Apache-2.0
#include "pnet.h"

#include <cstring>
#include <new>

#include "core/iso.hpp"
#include "gen/generate.hpp"
#include "io/netio.hpp"
#include "rebuild/rebuild.hpp"
#include "relsem/relsem.hpp"

using namespace pnet;

struct pn_net {
  Net net;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
}

pn_status status_of(const Error& e) {
  switch (e.kind) {
    case Err::Parse: return PN_ERR_PARSE;
    case Err::Validation: return PN_ERR_INVALID;
    case Err::TooLarge: return PN_ERR_TOO_LARGE;
    case Err::NonPower:
    case Err::DuplicateArity:
    case Err::DigitMismatch:
    case Err::BasisViolation: return PN_ERR_REBUILD;
    case Err::Internal: return PN_ERR_INTERNAL;
    default: return PN_ERR_PRECONDITION;
  }
}

template <typename F>
pn_status guarded(char** err, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    set_err(err, std::string(err_name(e.kind)) + ": " + e.what());
    return status_of(e);
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return PN_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

void pn_net_free(pn_net* net) { delete net; }
void pn_string_free(char* s) { delete[] s; }

pn_status pn_net_parse(const char* text, pn_net** out, char** err) {
  if (!text || !out) return PN_ERR_PRECONDITION;
  return guarded(err, [&] {
    *out = new pn_net{parse_net(text)};
    return PN_OK;
  });
}

pn_status pn_net_serialize(const pn_net* net, char** out) {
  if (!net || !out) return PN_ERR_PRECONDITION;
  return guarded(nullptr, [&] {
    *out = dup_string(serialize_net(net->net));
    return PN_OK;
  });
}

pn_status pn_net_clone(const pn_net* net, pn_net** out) {
  if (!net || !out) return PN_ERR_PRECONDITION;
  *out = new pn_net{net->net};
  return PN_OK;
}

pn_status pn_net_equal(const pn_net* a, const pn_net* b, int* eq) {
  if (!a || !b || !eq) return PN_ERR_PRECONDITION;
  *eq = a->net == b->net ? 1 : 0;
  return PN_OK;
}

pn_status pn_net_validate(const pn_net* net, const char* mode, char** report) {
  if (!net || !mode) return PN_ERR_PRECONDITION;
  return guarded(report, [&]() -> pn_status {
    auto m = mode_from_name(mode);
    if (!m) throw Error(Err::Precondition, std::string("unknown mode: ") + mode);
    auto rep = validate(net->net, *m);
    if (rep.ok()) return PN_OK;
    if (report) *report = dup_string(rep.to_string());
    return PN_ERR_INVALID;
  });
}

pn_status pn_net_metrics(const pn_net* net, uint64_t* d, uint64_t* cs, uint64_t* nb) {
  if (!net) return PN_ERR_PRECONDITION;
  auto m = metrics(net->net);
  if (d) *d = m.depth;
  if (cs) *cs = m.cosize;
  if (nb) *nb = m.n_boxes;
  return PN_OK;
}

pn_status pn_net_basis(const pn_net* net, uint64_t* out) {
  if (!net || !out) return PN_ERR_PRECONDITION;
  return guarded(nullptr, [&] {
    *out = basis(net->net);
    return PN_OK;
  });
}

pn_status pn_net_expand_uniform(const pn_net* net, uint64_t n, uint32_t level, uint64_t max_ports,
                                pn_net** out, char** err) {
  if (!net || !out) return PN_ERR_PRECONDITION;
  return guarded(err, [&] {
    auto e = make_uniform(net->net, n);
    if (!expansion_width(net->net, e, level, max_ports ? max_ports : UINT64_MAX))
      throw Error(Err::TooLarge, "expansion exceeds the port cap");
    *out = new pn_net{expand(net->net, e, level).term};
    return PN_OK;
  });
}

pn_status pn_net_expand_heterogeneous(const pn_net* net, uint64_t k, uint64_t seed, uint32_t level,
                                      uint64_t max_ports, pn_net** out, char** err) {
  if (!net || !out) return PN_ERR_PRECONDITION;
  return guarded(err, [&] {
    auto e = make_k_heterogeneous(net->net, k, seed);
    if (!expansion_width(net->net, e, level, max_ports ? max_ports : UINT64_MAX))
      throw Error(Err::TooLarge, "expansion exceeds the port cap");
    *out = new pn_net{expand(net->net, e, level).term};
    return PN_OK;
  });
}

pn_status pn_net_iso(const pn_net* a, const pn_net* b, int fix_conclusions, int* found) {
  if (!a || !b || !found) return PN_ERR_PRECONDITION;
  return guarded(nullptr, [&] {
    *found = iso_check(a->net, b->net, fix_conclusions != 0) ? 1 : 0;
    return PN_OK;
  });
}

pn_status pn_net_rebuild_pair(const pn_net* term_khet, const pn_net* term_one_exp, pn_net** out,
                              char** err) {
  if (!term_khet || !term_one_exp || !out) return PN_ERR_PRECONDITION;
  return guarded(err, [&] {
    *out = new pn_net{rebuild_from_pair(term_one_exp->net, term_khet->net)};
    return PN_OK;
  });
}

pn_status pn_net_generate(uint64_t max_depth, uint64_t max_boxes, uint64_t max_cosize,
                          uint64_t max_ports, int allow_cuts, uint64_t seed, pn_net** out) {
  if (!out) return PN_ERR_PRECONDITION;
  return guarded(nullptr, [&] {
    GenParams p;
    p.max_depth = max_depth;
    p.max_boxes_per_level = max_boxes;
    p.max_cosize = max_cosize;
    p.max_ports = max_ports;
    p.allow_cuts = allow_cuts != 0;
    p.seed = seed;
    *out = new pn_net{random_net(p)};
    return PN_OK;
  });
}

pn_status pn_net_experiment_point(const pn_net* net, uint64_t k, uint64_t seed, char** point,
                                  char** err) {
  if (!net || !point) return PN_ERR_PRECONDITION;
  return guarded(err, [&] {
    auto e = make_k_heterogeneous(net->net, k, seed);
    AtomSupply atoms;
    auto exp_seed = fresh_atomic_seed(net->net, e, atoms);
    auto built = build_experiment(net->net, exp_seed);
    if (!built) throw Error(Err::Internal, "atomic experiment failed to label the net");
    *point = dup_string(point_to_string(result_point(net->net, *built)));
    return PN_OK;
  });
}

}  // extern "C"
