/* SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the proof-net toolkit. Nets are opaque handles created from
 * their textual form or by the generator; every function returns PN_OK or an
 * error code, with details available through the out-parameters. Strings
 * returned through char** are owned by the caller and released with
 * pn_string_free.
 */
#ifndef PNET_H
#define PNET_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pn_net pn_net;

typedef enum pn_status {
  PN_OK = 0,
  PN_ERR_PARSE = 1,
  PN_ERR_INVALID = 2,
  PN_ERR_PRECONDITION = 3,
  PN_ERR_REBUILD = 4,
  PN_ERR_TOO_LARGE = 5,
  PN_ERR_UNSUPPORTED = 6,
  PN_ERR_INTERNAL = 7
} pn_status;

void pn_net_free(pn_net* net);
void pn_string_free(char* s);

/* Parse the s-expression form; on failure *err carries a message. */
pn_status pn_net_parse(const char* text, pn_net** out, char** err);
/* Canonical s-expression form. */
pn_status pn_net_serialize(const pn_net* net, char** out);
pn_status pn_net_clone(const pn_net* net, pn_net** out);
/* Structural equality (port names included). */
pn_status pn_net_equal(const pn_net* a, const pn_net* b, int* eq);

/* mode: ground | simple-diff | in-ps | ps | diff-ps.
 * Returns PN_OK when valid; PN_ERR_INVALID leaves the report in *report. */
pn_status pn_net_validate(const pn_net* net, const char* mode, char** report);

pn_status pn_net_metrics(const pn_net* net, uint64_t* depth, uint64_t* cosize, uint64_t* n_boxes);
pn_status pn_net_basis(const pn_net* net, uint64_t* basis);

/* Fully expanded (level 0) or partially expanded Taylor terms. The
 * heterogeneous variant uses copy counts k^1, k^2, ... in a seed-rotated
 * order; max_ports caps the materialized size. */
pn_status pn_net_expand_uniform(const pn_net* net, uint64_t n, uint32_t level, uint64_t max_ports,
                                pn_net** out, char** err);
pn_status pn_net_expand_heterogeneous(const pn_net* net, uint64_t k, uint64_t seed, uint32_t level,
                                      uint64_t max_ports, pn_net** out, char** err);

/* found = 1 when an isomorphism exists (fix_conclusions pins shallow
 * conclusion names). */
pn_status pn_net_iso(const pn_net* a, const pn_net* b, int fix_conclusions, int* found);

/* Rebuild the source net from a heterogeneous expansion term, the admissible
 * base being bounded below by the measures of a single-copy expansion term. */
pn_status pn_net_rebuild_pair(const pn_net* term_khet, const pn_net* term_one_exp, pn_net** out,
                              char** err);

/* Deterministic random PS within the given bounds. */
pn_status pn_net_generate(uint64_t max_depth, uint64_t max_boxes, uint64_t max_cosize,
                          uint64_t max_ports, int allow_cuts, uint64_t seed, pn_net** out);

/* Result point of an injective atomic experiment driven by the heterogeneous
 * pseudo-experiment with base k; the net must be cut-free. */
pn_status pn_net_experiment_point(const pn_net* net, uint64_t k, uint64_t seed, char** point,
                                  char** err);

#ifdef __cplusplus
}
#endif

#endif /* PNET_H */
