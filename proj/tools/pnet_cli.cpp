// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end; everything goes through the C API.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pnet.h"

namespace {

constexpr std::uint64_t kDefaultPortCap = 200000;

struct NetHandle {
  pn_net* net = nullptr;
  ~NetHandle() { pn_net_free(net); }
  NetHandle() = default;
  NetHandle(const NetHandle&) = delete;
  NetHandle& operator=(const NetHandle&) = delete;
};

struct StringHandle {
  char* s = nullptr;
  ~StringHandle() { pn_string_free(s); }
};

int fail(const char* what, const StringHandle& err) {
  std::cerr << what;
  if (err.s) std::cerr << ": " << err.s;
  std::cerr << "\n";
  return 2;
}

bool load_net(const std::string& path, NetHandle& out, std::string& err_msg) {
  std::ifstream in(path);
  if (!in) {
    err_msg = "cannot open " + path;
    return false;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  StringHandle err;
  if (pn_net_parse(buf.str().c_str(), &out.net, &err.s) != PN_OK) {
    err_msg = path + ": " + (err.s ? err.s : "parse error");
    return false;
  }
  return true;
}

bool write_net(const std::string& path, pn_net* net, std::string& err_msg) {
  StringHandle text;
  if (pn_net_serialize(net, &text.s) != PN_OK) {
    err_msg = "serialization failed";
    return false;
  }
  if (path == "-") {
    std::cout << text.s;
    return true;
  }
  std::ofstream out(path);
  if (!out) {
    err_msg = "cannot write " + path;
    return false;
  }
  out << text.s;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MELL proof-structure toolkit"};
  app.require_subcommand(1);

  // validate FILE [--mode M]
  std::string v_file, v_mode = "ps";
  auto* validate = app.add_subcommand("validate", "check well-formedness");
  validate->add_option("file", v_file)->required();
  validate->add_option("--mode", v_mode, "ground|simple-diff|in-ps|ps|diff-ps");

  // expand FILE (--k K | --uniform N) [--level I] [--seed S] -o OUT
  std::string e_file, e_out = "-";
  std::uint64_t e_k = 0, e_uniform = 0, e_seed = 0, e_cap = kDefaultPortCap;
  std::uint32_t e_level = 0;
  auto* expand = app.add_subcommand("expand", "Taylor expansion term");
  expand->add_option("file", e_file)->required();
  expand->add_option("--k", e_k, "heterogeneous base");
  expand->add_option("--uniform", e_uniform, "uniform copy count");
  expand->add_option("--level", e_level);
  expand->add_option("--seed", e_seed);
  expand->add_option("--max-ports", e_cap);
  expand->add_option("-o,--out", e_out);

  // rebuild TERM0 TERM1EXP -o OUT
  std::string r_term0, r_term1, r_out = "-";
  auto* rebuild = app.add_subcommand("rebuild", "invert a heterogeneous expansion");
  rebuild->add_option("term0", r_term0, "heterogeneous expansion term")->required();
  rebuild->add_option("term1exp", r_term1, "single-copy expansion term")->required();
  rebuild->add_option("-o,--out", r_out);

  // iso A B [--fix-conclusions]
  std::string i_a, i_b;
  bool i_fix = false;
  auto* iso = app.add_subcommand("iso", "isomorphism check");
  iso->add_option("a", i_a)->required();
  iso->add_option("b", i_b)->required();
  iso->add_flag("--fix-conclusions", i_fix);

  // experiment FILE --k K --seed S
  std::string x_file;
  std::uint64_t x_k = 2, x_seed = 0;
  auto* experiment = app.add_subcommand("experiment", "print the point of an injective atomic experiment");
  experiment->add_option("file", x_file)->required();
  experiment->add_option("--k", x_k)->required();
  experiment->add_option("--seed", x_seed);

  // gen --depth D --boxes B --cosize C [--cuts] --seed S
  std::uint64_t g_depth = 2, g_boxes = 2, g_cosize = 3, g_ports = 40, g_seed = 0;
  bool g_cuts = false;
  std::string g_out = "-";
  auto* gen = app.add_subcommand("gen", "random proof-structure");
  gen->add_option("--depth", g_depth);
  gen->add_option("--boxes", g_boxes);
  gen->add_option("--cosize", g_cosize);
  gen->add_option("--ports", g_ports);
  gen->add_flag("--cuts", g_cuts);
  gen->add_option("--seed", g_seed)->required();
  gen->add_option("-o,--out", g_out);

  // roundtrip --trials N --seed S [--depth D]
  std::uint64_t t_trials = 50, t_seed = 0, t_depth = 2;
  auto* roundtrip = app.add_subcommand("roundtrip", "generate, expand, rebuild, compare");
  roundtrip->add_option("--trials", t_trials);
  roundtrip->add_option("--seed", t_seed)->required();
  roundtrip->add_option("--depth", t_depth);

  CLI11_PARSE(app, argc, argv);
  std::string err_msg;

  if (*validate) {
    NetHandle net;
    if (!load_net(v_file, net, err_msg)) {
      std::cerr << err_msg << "\n";
      return 2;
    }
    StringHandle report;
    pn_status st = pn_net_validate(net.net, v_mode.c_str(), &report.s);
    if (st == PN_OK) {
      std::cout << "ok\n";
      return 0;
    }
    if (st == PN_ERR_INVALID) {
      std::cout << (report.s ? report.s : "invalid\n");
      return 1;
    }
    return fail("validate failed", report);
  }

  if (*expand) {
    if ((e_k == 0) == (e_uniform == 0 && !expand->count("--uniform"))) {
      std::cerr << "expand: exactly one of --k or --uniform is required\n";
      return 2;
    }
    NetHandle net;
    if (!load_net(e_file, net, err_msg)) {
      std::cerr << err_msg << "\n";
      return 2;
    }
    NetHandle term;
    StringHandle err;
    pn_status st =
        e_k ? pn_net_expand_heterogeneous(net.net, e_k, e_seed, e_level, e_cap, &term.net, &err.s)
            : pn_net_expand_uniform(net.net, e_uniform, e_level, e_cap, &term.net, &err.s);
    if (st != PN_OK) return fail("expand failed", err);
    if (!write_net(e_out, term.net, err_msg)) {
      std::cerr << err_msg << "\n";
      return 2;
    }
    return 0;
  }

  if (*rebuild) {
    NetHandle khet, one;
    if (!load_net(r_term0, khet, err_msg) || !load_net(r_term1, one, err_msg)) {
      std::cerr << err_msg << "\n";
      return 2;
    }
    NetHandle out;
    StringHandle err;
    if (pn_net_rebuild_pair(khet.net, one.net, &out.net, &err.s) != PN_OK)
      return fail("rebuild failed", err);
    if (!write_net(r_out, out.net, err_msg)) {
      std::cerr << err_msg << "\n";
      return 2;
    }
    return 0;
  }

  if (*iso) {
    NetHandle a, b;
    if (!load_net(i_a, a, err_msg) || !load_net(i_b, b, err_msg)) {
      std::cerr << err_msg << "\n";
      return 2;
    }
    int found = 0;
    if (pn_net_iso(a.net, b.net, i_fix ? 1 : 0, &found) != PN_OK) {
      std::cerr << "iso failed\n";
      return 2;
    }
    std::cout << (found ? "iso\n" : "not-iso\n");
    return found ? 0 : 1;
  }

  if (*experiment) {
    NetHandle net;
    if (!load_net(x_file, net, err_msg)) {
      std::cerr << err_msg << "\n";
      return 2;
    }
    StringHandle point, err;
    if (pn_net_experiment_point(net.net, x_k, x_seed, &point.s, &err.s) != PN_OK)
      return fail("experiment failed", err);
    std::cout << point.s << "\n";
    return 0;
  }

  if (*gen) {
    NetHandle net;
    if (pn_net_generate(g_depth, g_boxes, g_cosize, g_ports, g_cuts ? 1 : 0, g_seed, &net.net) !=
        PN_OK) {
      std::cerr << "gen failed\n";
      return 2;
    }
    if (!write_net(g_out, net.net, err_msg)) {
      std::cerr << err_msg << "\n";
      return 2;
    }
    return 0;
  }

  if (*roundtrip) {
    std::uint64_t passed = 0;
    for (std::uint64_t i = 0; i < t_trials; ++i) {
      // Fresh seeds per trial; skip draws whose heterogeneous expansion would
      // not fit the cap.
      std::uint64_t trial_seed = t_seed + i * 0x9e3779b9ULL;
      NetHandle r;
      pn_net* candidate = nullptr;
      std::uint64_t sub = 0;
      std::uint64_t k = 0;
      for (; sub < 64; ++sub) {
        if (pn_net_generate(t_depth, 2, 3, 40, 0, trial_seed + sub, &candidate) != PN_OK) continue;
        uint64_t b = 0;
        if (pn_net_basis(candidate, &b) != PN_OK) {
          pn_net_free(candidate);
          continue;
        }
        NetHandle probe;
        StringHandle err;
        if (pn_net_expand_heterogeneous(candidate, b, trial_seed, 0, 20000, &probe.net, &err.s) ==
            PN_OK) {
          r.net = candidate;
          k = b;
          break;
        }
        pn_net_free(candidate);
      }
      if (!r.net) continue;
      NetHandle khet, one, out;
      StringHandle err;
      if (pn_net_expand_heterogeneous(r.net, k, t_seed + i, 0, 20000, &khet.net, &err.s) != PN_OK)
        continue;
      if (pn_net_expand_uniform(r.net, 1, 0, 20000, &one.net, &err.s) != PN_OK) continue;
      if (pn_net_rebuild_pair(khet.net, one.net, &out.net, &err.s) != PN_OK) {
        std::cout << "trial " << i << ": rebuild error: " << (err.s ? err.s : "?") << "\n";
        continue;
      }
      int found = 0;
      if (pn_net_iso(out.net, r.net, 1, &found) == PN_OK && found) ++passed;
    }
    std::cout << passed << "/" << t_trials << " ==\n";
    return passed == t_trials ? 0 : 1;
  }

  return 2;
}
