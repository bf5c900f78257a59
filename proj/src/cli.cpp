// Copyright 2026 The Magic Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "magic/cli.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "magic/channel.hpp"
#include "magic/doped.hpp"
#include "magic/error.hpp"
#include "magic/family.hpp"
#include "magic/membership.hpp"
#include "magic/monotones.hpp"
#include "magic/reduction.hpp"
#include "magic/sat.hpp"
#include "magic/stabilizer.hpp"

namespace magic {

namespace {

int exit_for(Decision d) {
  switch (d) {
    case Decision::kYes: return kExitOk;
    case Decision::kNo: return kExitNo;
    case Decision::kPromiseViolated: return kExitPromise;
  }
  return kExitError;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// Everything a subcommand handler needs besides its own flags.
struct Context {
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string out;
  std::uint64_t digest = fnv1a64("");
  Json results = Json::object();
  int exit_code = kExitOk;

  std::string load(const std::string& path) {
    std::string text = read_text_file(path);
    digest = fnv1a64(text, digest);
    return text;
  }
  Json load_json(const std::string& path) {
    const std::string text = load(path);
    try {
      return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::kMalformedFile, path + ": " + e.what());
    }
  }
};

struct Options {
  // shared
  std::string state, witness, cnf, artifact, channel, family, measure, dict = "stab", scan = "exhaustive";
  std::string stage, mode = "exhaustive", extra_state;
  double eps = 0.05, alpha = 2.0, gamma = 0.0, delta = 0.0, net_eps = 0.5;
  int t = -1, size = 1, vertices = 3;
  std::uint64_t start = 0, count = 64, coherent_samples = 100000;
  bool amplitudes = false, verbose = false, allow_long = false;
};

void cmd_enumerate(Context& ctx, const Options& o) {
  const StateFamily fam(parse_family(o.family), o.size);
  if (o.start > fam.count()) fail(ErrorCode::kInvalidArgument, "start index beyond the family");
  const std::uint64_t end = std::min(fam.count(), o.start + o.count);
  Json states = Json::array();
  CVector psi;
  for (std::uint64_t i = o.start; i < end; ++i) {
    const StabilizerState s = fam.state(i);
    Json gens = Json::array();
    for (const auto& g : s.generators()) gens.push_back(g.str());
    Json entry = {{"index", i}, {"generators", std::move(gens)}};
    if (o.amplitudes) entry["ket"] = ket_to_json(s.amplitudes())["ket"];
    states.push_back(std::move(entry));
  }
  ctx.results = {{"family", std::string(family_name(fam.tag()))},
                 {"size", o.size},
                 {"qubits", fam.num_qubits()},
                 {"count", fam.count()},
                 {"closed_form_count", fam.tag() == FamilyTag::kAllStabilizer ? Json(stabilizer_count(o.size)) : Json(nullptr)},
                 {"start", o.start},
                 {"states", std::move(states)}};
}

void cmd_monotone(Context& ctx, const Options& o) {
  const DensityMatrix rho = state_from_json(ctx.load_json(o.state));
  Json r = {{"measure", o.measure}, {"qubits", rho.num_qubits()}};
  if (o.measure == "sre") {
    r["alpha"] = o.alpha;
    r["value"] = stabilizer_renyi_entropy(rho, o.alpha);
  } else if (o.measure == "fidelity") {
    r["value"] = stabilizer_fidelity(rho);
  } else if (o.measure == "robustness") {
    if (rho.num_qubits() > 3) fail(ErrorCode::kSizeCapExceeded, "robustness supports n <= 3");
    const auto cert = robustness_of_magic(rho, o.verbose);
    r["value"] = cert.value;
    r["certificate"] = certificate_to_json(cert);
  } else if (o.measure == "t-robustness") {
    const int t = o.t < 0 ? 1 : o.t;
    DopedOptions opts;
    opts.jobs = ctx.jobs;
    const auto cert = t_extended_robustness(rho, t, o.net_eps, opts);
    r["t"] = t;
    r["net_eps"] = o.net_eps;
    r["value"] = cert.value;
    r["certificate"] = certificate_to_json(cert);
  } else {
    fail(ErrorCode::kInvalidArgument, "unknown measure " + o.measure);
  }
  ctx.results = std::move(r);
}

void membership_doped(Context& ctx, const DensityMatrix& rho, int t, double net_eps, double eps) {
  DopedOptions opts;
  opts.jobs = ctx.jobs;
  const DopedDictionary dict = build_doped_dictionary(rho.num_qubits(), t, net_eps, opts);
  const DopedVerdict v = decide_doped_membership(rho, dict, eps);
  ctx.results = {{"dictionary", "doped"},
                 {"t", t},
                 {"net_eps", net_eps},
                 {"net_version", dict.net_version},
                 {"net_seeds", dict.seeds.size()},
                 {"dictionary_size", dict.size()},
                 {"covering_radius", dict.covering_radius},
                 {"log2_cardinality_bound", dict.log2_cardinality_bound()},
                 {"decision", std::string(decision_name(*v.verdict.decision))},
                 {"distance", v.verdict.distance},
                 {"net_coarseness", v.net_coarseness},
                 {"certified_margin", v.certified_margin},
                 {"note", "NO is certified against the continuous doped hull only when certified_margin > 0"},
                 {"verdict", verdict_to_json(v.verdict)}};
  ctx.exit_code = exit_for(*v.verdict.decision);
}

void cmd_membership(Context& ctx, const Options& o) {
  const DensityMatrix rho = state_from_json(ctx.load_json(o.state));
  if (o.dict == "doped") {
    membership_doped(ctx, rho, o.t < 0 ? 1 : o.t, o.net_eps, o.eps);
    return;
  }
  if (o.dict != "stab") fail(ErrorCode::kInvalidArgument, "--dict must be stab or doped");
  const MembershipVerdict v = decide_wmem(rho, o.eps);
  ctx.results = {{"dictionary", "stab"},
                 {"decision", std::string(decision_name(*v.decision))},
                 {"distance", v.distance},
                 {"verdict", verdict_to_json(v)}};
  ctx.exit_code = exit_for(*v.decision);
}

void cmd_witness(Context& ctx, const Options& o) {
  const DensityMatrix rho = state_from_json(ctx.load_json(o.state));
  if (rho.num_qubits() > 3) fail(ErrorCode::kSizeCapExceeded, "witness extraction supports n <= 3");
  const auto dict = Dictionary::stabilizer(rho.num_qubits());
  const MembershipVerdict v = project_onto_polytope(rho, *dict);
  const WitnessReport w = extract_witness(rho, v, *dict);
  ctx.results = witness_to_json(w);
  ctx.results["distance"] = v.distance;
  ctx.results["witness_frobenius_norm"] = w.witness.matrix().norm();
  if (!ctx.out.empty()) {
    write_json_file(ctx.out, operator_to_json(w.witness.matrix()));
    ctx.results["written"] = ctx.out;
    ctx.out.clear();
  }
}

void cmd_wwd(Context& ctx, const Options& o) {
  const HermitianOperator w = operator_from_json(ctx.load_json(o.witness));
  const int n = w.num_qubits();
  WwdScan scan;
  scan.seed = ctx.seed;
  scan.jobs = ctx.jobs;
  if (o.scan == "exhaustive") {
    scan.families.emplace_back(FamilyTag::kAllStabilizer, n);
  } else if (o.scan == "graphs") {
    scan.families.emplace_back(FamilyTag::kGraph, n);
    if (n % 2 == 0) scan.families.emplace_back(FamilyTag::kDoubledGraph, n / 2);
  } else if (o.scan == "coherent") {
    scan.families.emplace_back(FamilyTag::kMaxCoherent, n);
  } else if (o.scan.rfind("sample:", 0) == 0) {
    scan.samples = parse_verify_mode(o.scan).samples;
  } else {
    fail(ErrorCode::kInvalidArgument, "--scan must be exhaustive, graphs, coherent or sample:N");
  }
  if (!o.extra_state.empty()) {
    const DensityMatrix extra = state_from_json(ctx.load_json(o.extra_state));
    if (!extra.is_pure()) fail(ErrorCode::kMixedState, "extra scan states must be pure");
    scan.extra_states.push_back(extra.dominant_ket());
    scan.extra_labels.push_back("extra");
  }
  const WwdResult r = check_wwd_instance(w, o.gamma, o.delta, scan);
  ctx.results = wwd_to_json(r);
  ctx.results["scan"] = o.scan;
  ctx.results["gamma"] = o.gamma;
  ctx.results["delta"] = o.delta;
  if (scan.samples > 0) {
    ctx.results["samples"] = scan.samples;
    ctx.results["guarantee"] = "one-sided: a sampled NO is not certified";
  }
  ctx.exit_code = exit_for(r.decision);
}

void cmd_reduce(Context& ctx, const Options& o) {
  const SatInstance inst = parse_cnf(ctx.load(o.cnf));
  const ReductionArtifact a = build_reduction(inst, o.vertices);
  const Json art = artifact_to_json(a);
  ctx.results = {{"vertices", a.vertices},
                 {"qubits", 2 * a.vertices},
                 {"num_vars", inst.num_vars()},
                 {"num_clauses", inst.clauses().size()},
                 {"gamma", a.gamma},
                 {"delta", a.delta},
                 {"norms", art["norms"]},
                 {"norm_bound_holds", a.norm_h4_2 <= a.norm_bound},
                 {"artifact_digest", hex64(fnv1a64(art.dump()))}};
  if (!ctx.out.empty()) {
    write_json_file(ctx.out, art);
    ctx.results["written"] = ctx.out;
    ctx.out.clear();
  }
}

void cmd_verify(Context& ctx, const Options& o) {
  const ReductionArtifact a = artifact_from_json(ctx.load_json(o.artifact));
  VerifyOptions v = parse_verify_mode(o.mode);
  v.seed = ctx.seed;
  v.jobs = ctx.jobs;
  v.allow_long = o.allow_long;
  v.coherent_samples = o.coherent_samples;
  const VerificationReport r = verify_stage(a, parse_stage(o.stage), v);
  ctx.results = verification_to_json(r);
  ctx.exit_code = r.pass ? kExitOk : kExitNo;
}

void cmd_doped(Context& ctx, const Options& o) {
  const DensityMatrix rho = state_from_json(ctx.load_json(o.state));
  membership_doped(ctx, rho, o.t < 0 ? 1 : o.t, o.net_eps, o.eps);
}

void cmd_channel(Context& ctx, const Options& o) {
  const QuantumChannel ch = channel_from_json(ctx.load_json(o.channel));
  ChannelVerdict v;
  Json r;
  if (o.t < 0) {
    v = classify_cspc(ch, o.eps);
    r["problem"] = "CSPC";
  } else {
    DopedOptions opts;
    opts.jobs = ctx.jobs;
    v = classify_ctdspc(ch, o.t, o.net_eps, o.eps, opts);
    r["problem"] = "CTDSPC";
    r["t"] = o.t;
    r["net_eps"] = o.net_eps;
    r["certified_margin"] = *v.certified_margin;
    r["choi_seed_added"] = v.seed_added;
  }
  r["decision"] = std::string(decision_name(v.decision));
  r["distance"] = v.verdict.distance;
  r["choi"] = operator_to_json(v.choi.rho.matrix());
  r["choi_marginal_error"] = v.choi.marginal_error;
  r["witness"] = v.witness ? witness_to_json(*v.witness) : Json(nullptr);
  ctx.results = std::move(r);
  ctx.exit_code = exit_for(v.decision);
}

}  // namespace

CliResult dispatch(const std::vector<std::string>& args) {
  const auto t0 = std::chrono::steady_clock::now();
  CLI::App app{"Magic-state resource toolkit", "magic"};
  app.require_subcommand(1);
  // Global flags may follow the subcommand.
  app.fallthrough();
  Context ctx;
  Options o;
  app.add_option("--seed", ctx.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--jobs", ctx.jobs, "Worker threads (0: all cores)")->capture_default_str();
  app.add_option("--out", ctx.out, "Report path (artifact path for witness and reduce)");

  auto* en = app.add_subcommand("enumerate", "List members of a stabilizer family");
  en->add_option("--family", o.family, "ALL_STABILIZER, GRAPH, DOUBLED_GRAPH, MAX_COHERENT or OVERLAP_T")->required();
  en->add_option("--size", o.size, "Qubits, or vertices for graph families")->required();
  en->add_option("--start", o.start);
  en->add_option("--count", o.count);
  en->add_flag("--amplitudes", o.amplitudes);

  auto* mo = app.add_subcommand("monotone", "Evaluate a magic monotone");
  mo->add_option("--measure", o.measure)->required()->check(
      CLI::IsMember({"sre", "fidelity", "robustness", "t-robustness"}));
  mo->add_option("--state", o.state)->required();
  mo->add_option("--alpha", o.alpha);
  mo->add_option("--t", o.t);
  mo->add_option("--net-eps", o.net_eps);
  mo->add_flag("--verbose", o.verbose);

  auto* me = app.add_subcommand("membership", "Weak membership in the stabilizer or doped polytope");
  me->add_option("--state", o.state)->required();
  me->add_option("--eps", o.eps)->required();
  me->add_option("--dict", o.dict);
  me->add_option("--t", o.t);
  me->add_option("--net-eps", o.net_eps);

  auto* wi = app.add_subcommand("witness", "Separating witness for an exterior state");
  wi->add_option("--state", o.state)->required();

  auto* ww = app.add_subcommand("wwd", "Weak witness detection");
  ww->add_option("--witness", o.witness)->required();
  ww->add_option("--gamma", o.gamma)->required();
  ww->add_option("--delta", o.delta)->required();
  ww->add_option("--scan", o.scan);
  ww->add_option("--extra-state", o.extra_state);

  auto* re = app.add_subcommand("reduce", "Build the reduction artifact for a 3-CNF");
  re->add_option("--cnf", o.cnf)->required();
  re->add_option("--vertices", o.vertices)->required();

  auto* ve = app.add_subcommand("verify-reduction", "Check one stage of a reduction artifact");
  ve->add_option("--artifact", o.artifact)->required();
  ve->add_option("--stage", o.stage)->required();
  ve->add_option("--mode", o.mode);
  ve->add_option("--coherent-samples", o.coherent_samples);
  ve->add_flag("--allow-long", o.allow_long, "Permit multi-hour exhaustive scans");

  auto* dp = app.add_subcommand("doped", "Membership in the t-doped net hull");
  dp->add_option("--state", o.state)->required();
  dp->add_option("--t", o.t);
  dp->add_option("--net-eps", o.net_eps);
  dp->add_option("--eps", o.eps);

  auto* ch = app.add_subcommand("channel", "Channel tools");
  ch->require_subcommand(1);
  auto* cl = ch->add_subcommand("classify", "Classify a channel through its Choi state");
  cl->add_option("--channel", o.channel)->required();
  cl->add_option("--t", o.t, "Doping level; omit for plain stabilizer preservation");
  cl->add_option("--eps", o.eps);
  cl->add_option("--net-eps", o.net_eps);

  CliResult res;
  std::string command;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(rev);
    } catch (const CLI::CallForHelp&) {
      res.help = app.help();
      return res;
    } catch (const CLI::ParseError& e) {
      fail(ErrorCode::kUnknownFlag, e.what());
    }
    const auto subs = app.get_subcommands();
    command = subs.front()->get_name();
    if (command == "channel") command = "channel classify";
    if (ctx.jobs <= 0) ctx.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    for (const auto& a : args) {
      if (a != "--out" && a != ctx.out) ctx.digest = fnv1a64(a + '\0', ctx.digest);
    }
    if (command == "enumerate") cmd_enumerate(ctx, o);
    else if (command == "monotone") cmd_monotone(ctx, o);
    else if (command == "membership") cmd_membership(ctx, o);
    else if (command == "witness") cmd_witness(ctx, o);
    else if (command == "wwd") cmd_wwd(ctx, o);
    else if (command == "reduce") cmd_reduce(ctx, o);
    else if (command == "verify-reduction") cmd_verify(ctx, o);
    else if (command == "doped") cmd_doped(ctx, o);
    else cmd_channel(ctx, o);
    // Handlers that write an artifact clear ctx.out so the report goes to stdout.
    res.report_path = ctx.out;
    res.exit_code = ctx.exit_code;
    res.report = {{"command", command},
                  {"status", "ok"},
                  {"version", MAGIC_VERSION},
                  {"seed", ctx.seed},
                  {"input_digest", "fnv1a64:" + hex64(ctx.digest)},
                  {"results", std::move(ctx.results)}};
  } catch (const MagicError& e) {
    res.exit_code = kExitError;
    res.report = {{"command", command.empty() ? Json(nullptr) : Json(command)},
                  {"status", "error"},
                  {"version", MAGIC_VERSION},
                  {"seed", ctx.seed},
                  {"error", {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}}}};
  } catch (const std::exception& e) {
    res.exit_code = kExitError;
    res.report = {{"command", command.empty() ? Json(nullptr) : Json(command)},
                  {"status", "error"},
                  {"version", MAGIC_VERSION},
                  {"seed", ctx.seed},
                  {"error", {{"code", "INTERNAL"}, {"message", e.what()}}}};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  res.report["timings"] = {{"total_seconds", secs}};
  return res;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  CliResult res = dispatch(args);
  if (!res.help.empty()) {
    std::cout << res.help;
    return kExitOk;
  }
  const std::string text = res.report.dump(2);
  if (res.report_path.empty()) {
    std::cout << text << '\n';
  } else {
    try {
      write_json_file(res.report_path, res.report);
    } catch (const MagicError& e) {
      std::cerr << "magic: " << e.what() << '\n';
      return kExitError;
    }
  }
  if (res.exit_code == kExitError) std::cerr << "magic: " << res.report["error"]["message"].get<std::string>() << '\n';
  return res.exit_code;
}

}  // namespace magic
