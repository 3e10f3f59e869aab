// Copyright 2026 The rankinglp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// rankinglp: exact solves, local searches, certification, and simulation
// checks from the command line.
//
// Exit codes: 0 success, 1 property violation, 2 resource refusal,
// 3 backend failure, 4 bad input.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rankinglp/backends.hpp"
#include "rankinglp/exact.hpp"
#include "rankinglp/gamma.hpp"
#include "rankinglp/io.hpp"
#include "rankinglp/lp_builders.hpp"
#include "rankinglp/mps.hpp"
#include "rankinglp/ranksim.hpp"
#include "rankinglp/search.hpp"
#include "rankinglp/verification.hpp"

namespace rl = rankinglp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitRefusal = 2;
constexpr int kExitBackend = 3;
constexpr int kExitInput = 4;

constexpr double kCertifyTolerance = 1e-6;
// Lower heuristic: start from every path when there are at most this many.
constexpr std::uint64_t kAllPathsStart = 5000;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Common {
  std::string out;
  std::string table;
  std::string mps;
  bool force = false;
  double max_model_gib = 8.0;
  unsigned threads = 0;
  bool verbose = false;
  std::string command_line;

  rl::BuildLimits limits() const {
    rl::BuildLimits l;
    l.max_model_bytes = max_model_gib * 1024.0 * 1024.0 * 1024.0;
    l.force = force;
    return l;
  }
};

void log(const std::string& line) { std::cerr << line << "\n"; }

void emit_row(const Common& c, const rl::TableRow& row) {
  rl::write_table_header(std::cout);
  rl::write_table_row(std::cout, row);
  if (c.table.empty()) return;
  const bool fresh = !std::filesystem::exists(c.table);
  std::ofstream t(c.table, std::ios::app);
  if (!t) throw rl::Error("cannot open " + c.table);
  if (fresh) rl::write_table_header(t);
  rl::write_table_row(t, row);
}

void report_size(const std::string& what, const rl::ModelSize& size) {
  log("model " + what + ": " + size.to_string());
}

rl::SolutionFile make_file(const Common& c, rl::Family family, rl::GridDims dims,
                           double gamma, const rl::PriceGrid& g,
                           const rl::ConstraintSet& set, const std::string& backend,
                           double seconds, std::string mode) {
  rl::SolutionFile f;
  f.family = family;
  f.dims = dims;
  f.gamma = gamma;
  f.g = g;
  f.constraint_set = set;
  f.provenance = {c.command_line, 0, backend, seconds};
  f.mode = std::move(mode);
  return f;
}

void maybe_export(const Common& c, const rl::LpProblem& problem) {
  if (c.mps.empty()) return;
  rl::write_mps(problem, std::filesystem::path(c.mps));
  log("wrote " + c.mps);
}

// --- lower-exact ------------------------------------------------------------

struct LowerExactArgs {
  int m = 1;
  int n = 1;
  bool dedupe_h = false;
};

int cmd_lower_exact(const Common& c, const LowerExactArgs& a) {
  const rl::GridDims dims(a.m, a.n);
  report_size("lower (projected)", rl::projected_lower_size(dims));
  auto backend = rl::default_backend();
  rl::LowerExactOptions opt;
  opt.dedupe_h = a.dedupe_h;
  opt.limits = c.limits();
  opt.solve.verbose = c.verbose;
  if (!c.mps.empty()) {
    rl::LowerLpOptions lp_opt;
    lp_opt.dedupe_h = a.dedupe_h;
    lp_opt.limits = opt.limits;
    maybe_export(c, rl::build_lower_lp(dims, lp_opt).problem);
  }
  const rl::ExactResult res = rl::solve_lower_exact(dims, *backend, opt);
  report_size("lower", res.size);
  const auto t = Clock::now();
  const rl::Certificate cert = rl::certify_lower(res.grid, UINT64_MAX, c.threads);
  log("certificate " + std::to_string(cert.value) + " over " +
      std::to_string(cert.evaluated) + " paths in " + std::to_string(since(t)) + " s");
  const bool agrees = std::abs(cert.value - res.gamma) <= kCertifyTolerance;
  if (!c.out.empty()) {
    rl::save_solution(make_file(c, rl::Family::kLower, dims, res.gamma, res.grid,
                                res.binding, res.backend, res.seconds,
                                "exact-lower"),
                      c.out);
  }
  emit_row(c, {a.m, a.n, res.gamma, rl::TableMode::kExactLower, res.seconds, agrees});
  if (!agrees) {
    log("property violation: LP value " + std::to_string(res.gamma) +
        " differs from its certificate " + std::to_string(cert.value));
    return kExitViolation;
  }
  return kExitOk;
}

// --- upper-exact ------------------------------------------------------------

struct UpperExactArgs {
  int m = 1;
  int n = 1;
  std::string method = "auto";
};

int cmd_upper_exact(const Common& c, const UpperExactArgs& a) {
  const rl::GridDims dims(a.m, a.n);
  report_size("upper full (projected)", rl::projected_upper_size(dims));
  auto backend = rl::default_backend();
  rl::UpperExactOptions opt;
  opt.limits = c.limits();
  opt.solve.verbose = c.verbose;
  opt.threads = c.threads;
  if (a.method == "full") {
    opt.method = rl::UpperMethod::kFull;
  } else if (a.method == "rowgen") {
    opt.method = rl::UpperMethod::kRowGeneration;
  }
  opt.progress = [](int round, double gamma, std::size_t size) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "row generation round %d: gamma=%.9f |S|=%zu",
                  round, gamma, size);
    log(buf);
  };
  if (!c.mps.empty()) maybe_export(c, rl::build_upper_lp_full(dims, opt.limits).problem);
  const rl::ExactResult res = rl::solve_upper_exact(dims, *backend, opt);
  report_size("upper", res.size);
  if (!c.out.empty()) {
    rl::save_solution(make_file(c, rl::Family::kUpper, dims, res.gamma, res.grid,
                                res.binding, res.backend, res.seconds,
                                "exact-upper"),
                      c.out);
  }
  emit_row(c, {a.m, a.n, res.gamma, rl::TableMode::kExactUpper, res.seconds, false});
  return kExitOk;
}

// --- searches ---------------------------------------------------------------

struct SearchArgs {
  int m = 0;  // 0: same as n
  int n = 0;
  std::string init;
  std::string resume;
  std::string csv;
  std::string checkpoint;
  bool init_all = false;
  int max_iterations = 1000;
  double epsilon = 1e-9;
  double add_threshold = 1e-5;
  double removal_slack = 1e-9;
  double iteration_seconds = INFINITY;
  std::uint64_t certify_budget = UINT64_MAX;
};

rl::SearchOptions search_options(const Common& c, const SearchArgs& a) {
  rl::SearchOptions o;
  o.convergence_epsilon = a.epsilon;
  o.add_threshold = a.add_threshold;
  o.removal_slack = a.removal_slack;
  o.max_iterations = a.max_iterations;
  o.iteration_time_budget = a.iteration_seconds;
  o.threads = c.threads;
  o.solve.verbose = c.verbose;
  return o;
}

void log_iteration(const rl::IterationRecord& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "iteration %d: gamma=%.9f |S|=%zu +%zu -%zu %.2fs%s", r.iteration,
                r.gamma, r.set_size, r.additions, r.removals, r.seconds,
                r.accepted ? "" : " (not accepted)");
  log(buf);
}

rl::CheckpointFn checkpoint_writer(const Common& c, const SearchArgs& a,
                                   rl::Family family, std::string mode) {
  return [&c, &a, family, mode](const rl::SearchCheckpoint& cp) {
    log_iteration(cp.best.history.back());
    if (a.checkpoint.empty()) return;
    rl::SolutionFile f = make_file(c, family, cp.best.set.dims(), cp.best.gamma_star,
                                   cp.best.grid, cp.resume.set, cp.best.backend,
                                   cp.best.history.back().seconds, mode);
    f.history = cp.resume.history;
    f.gamma_star = cp.resume.gamma_star;
    rl::save_solution(f, a.checkpoint);
  };
}

int finish_search(const Common& c, const SearchArgs& a, rl::Family family,
                  const rl::SearchReport& rep, double seconds, std::string mode) {
  log_iteration(rep.history.back());
  log("stopped: " + std::string(rl::stop_reason_name(rep.stop)) + " after " +
      std::to_string(rep.history.size()) + " LP solves");
  if (!a.csv.empty()) rl::write_iteration_csv(std::filesystem::path(a.csv), rep.history);
  if (!c.out.empty()) {
    rl::SolutionFile f = make_file(c, family, rep.set.dims(), rep.gamma_star, rep.grid,
                                   rep.set, rep.backend, seconds, std::move(mode));
    f.history = rep.history;
    rl::save_solution(f, c.out);
  }
  return kExitOk;
}

rl::SearchState start_state(const SearchArgs& a, rl::Family family, rl::GridDims dims,
                            const rl::SearchOptions& opt) {
  if (!a.resume.empty()) {
    rl::SolutionFile f = rl::load_solution(a.resume);
    if (f.family != family || f.dims != dims) {
      throw rl::InvalidArgument("checkpoint " + a.resume + " is a " +
                                std::string(rl::family_name(f.family)) + " run on " +
                                f.dims.to_string());
    }
    log("resuming at iteration " + std::to_string(f.history.size()));
    return f.resume_state();
  }
  rl::SolutionFile init = rl::load_solution(a.init);
  if (init.family != family) {
    throw rl::InvalidArgument("init file holds a " +
                              std::string(rl::family_name(init.family)) +
                              " constraint set");
  }
  rl::ConstraintSet set = a.init_all
                              ? (family == rl::Family::kUpper
                                     ? rl::ConstraintSet::all_pairs(init.dims)
                                     : rl::ConstraintSet::all_paths(init.dims))
                              : init.constraint_set;
  if (set.dims() != dims) {
    log("warm start " + set.dims().to_string() + " -> " + dims.to_string() +
        (dims == set.dims().doubled() ? " (doubling)" : " (regrid)"));
    set = rl::warm_start(set, dims);
  }
  log("initial |S| = " + std::to_string(set.size()));
  return rl::initial_state(std::move(set), opt);
}

int cmd_upper_search(const Common& c, const SearchArgs& a) {
  if (a.init.empty() == a.resume.empty()) {
    throw rl::InvalidArgument("upper-search needs exactly one of --init and --resume");
  }
  const rl::GridDims dims(a.m == 0 ? a.n : a.m, a.n);
  const rl::SearchOptions opt = search_options(c, a);
  auto backend = rl::default_backend();
  const auto t = Clock::now();
  rl::SearchState state = start_state(a, rl::Family::kUpper, dims, opt);
  const rl::SearchReport rep =
      rl::local_search_upper(std::move(state), *backend, opt,
                             checkpoint_writer(c, a, rl::Family::kUpper, "search-upper"));
  const double seconds = since(t);
  const int code = finish_search(c, a, rl::Family::kUpper, rep, seconds, "search-upper");
  emit_row(c, {dims.m(), dims.n(), rep.gamma_star, rl::TableMode::kSearchUpper, seconds,
               false});
  return code;
}

// Default starting paths: all of them when there are few, else the binding
// paths of a heuristic run at half resolution, regridded.
rl::ConstraintSet default_lower_start(rl::GridDims dims, rl::LpBackend& backend,
                                      const rl::SearchOptions& opt) {
  if (rl::path_count(dims) <= kAllPathsStart) return rl::ConstraintSet::all_paths(dims);
  const rl::GridDims half((dims.m() + 1) / 2, (dims.n() + 1) / 2);
  const rl::ConstraintSet coarse = default_lower_start(half, backend, opt);
  const rl::SearchReport rep = rl::local_search_lower(rl::initial_state(coarse, opt),
                                                      backend, opt);
  log("start ladder " + half.to_string() + ": gamma=" + std::to_string(rep.gamma_star));
  return rl::warm_start(rl::binding_members(rep.set, rep.grid, rep.gamma_star,
                                            rl::kBindingSlack),
                        dims);
}

int cmd_lower_heuristic(const Common& c, const SearchArgs& a) {
  const rl::GridDims dims(a.m == 0 ? a.n : a.m, a.n);
  const rl::SearchOptions opt = search_options(c, a);
  auto backend = rl::default_backend();
  const auto t = Clock::now();
  rl::SearchState state =
      (a.init.empty() && a.resume.empty())
          ? rl::initial_state(default_lower_start(dims, *backend, opt), opt)
          : start_state(a, rl::Family::kLower, dims, opt);
  const rl::SearchReport rep = rl::local_search_lower(
      std::move(state), *backend, opt,
      checkpoint_writer(c, a, rl::Family::kLower, "heuristic-lower"));
  const double seconds = since(t);
  finish_search(c, a, rl::Family::kLower, rep, seconds, "heuristic-lower");
  emit_row(c, {dims.m(), dims.n(), rep.gamma_star, rl::TableMode::kHeuristicLower,
               seconds, false});

  const auto tc = Clock::now();
  const rl::Certificate cert = rl::certify_lower(rep.grid, a.certify_budget, c.threads);
  log("certificate over " + std::to_string(cert.evaluated) + "/" +
      std::to_string(cert.total) + " paths" +
      (cert.complete ? "" : " (budget exceeded: NOT a certificate)"));
  emit_row(c, {dims.m(), dims.n(), cert.value, rl::TableMode::kCertifiedLower,
               since(tc), cert.complete});
  return kExitOk;
}

struct CertifyArgs {
  std::string solution;
  std::uint64_t budget = UINT64_MAX;
};

int cmd_lower_certify(const Common& c, const CertifyArgs& a) {
  const rl::SolutionFile f = rl::load_solution(a.solution);
  const auto t = Clock::now();
  const rl::Certificate cert = rl::certify_lower(f.g, a.budget, c.threads);
  log("certificate over " + std::to_string(cert.evaluated) + "/" +
      std::to_string(cert.total) + " paths" +
      (cert.complete ? "" : " (budget exceeded: NOT a certificate)"));
  if (cert.argmin) log("minimizing path " + cert.argmin->to_string());
  emit_row(c, {f.dims.m(), f.dims.n(), cert.value, rl::TableMode::kCertifiedLower,
               since(t), cert.complete});
  return kExitOk;
}

// --- checks -----------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 1;
};

int cmd_verify(const VerifyArgs& a) {
  const rl::SuiteReport rep = rl::run_suite(a.suite, a.seed);
  std::cout << rep.summary() << "\n";
  for (const std::string& m : rep.messages) std::cout << "  " << m << "\n";
  if (rep.counterexample) std::cout << "minimized counterexample: " << *rep.counterexample << "\n";
  return rep.passed() ? kExitOk : kExitViolation;
}

struct InstanceArgs {
  int m = 2;
  int n = 2;
  std::uint64_t seed = 0;
  int max_offline = 6;
  int max_online = 6;
  double edge_probability = 0.5;
  bool unweighted = false;
};

int cmd_random_instance(const Common& c, const InstanceArgs& a) {
  rl::RandomInstanceParams p;
  p.dims = rl::GridDims(a.m, a.n);
  p.max_offline = a.max_offline;
  p.max_online = a.max_online;
  p.edge_probability = a.edge_probability;
  p.weighted = !a.unweighted;
  const rl::BipartiteInstance inst = rl::random_instance(p, a.seed);
  if (c.out.empty()) {
    std::cout << rl::instance_to_json(inst) << "\n";
  } else {
    rl::save_instance(inst, c.out);
  }
  return kExitOk;
}

struct SimulateArgs {
  std::string instance;
  std::string solution;
  int u = -1;  // both unset: the first edge
  int v = -1;
};

int cmd_simulate(SimulateArgs a) {
  const rl::BipartiteInstance inst = rl::load_instance(a.instance);
  const rl::SolutionFile f = rl::load_solution(a.solution);
  if (a.u < 0 && a.v < 0) {
    if (inst.edges.empty()) throw rl::InvalidArgument("instance has no edges");
    a.u = inst.edges.front().online;
    a.v = inst.edges.front().offline;
  }
  const rl::ThresholdProfile prof = rl::extract_thresholds(inst, a.u, a.v, f.g);
  std::cout << "stage,alpha,beta\n";
  for (std::size_t i = 0; i < prof.alpha.size(); ++i) {
    std::cout << i << "," << prof.alpha[i] << "," << prof.beta[i] << "\n";
  }
  std::cout << "structure_valid=" << (prof.structure_valid ? "yes" : "no")
            << " beta_monotone=" << (prof.beta_monotone ? "yes" : "no") << "\n";
  const double duals = rl::expected_duals(inst, a.u, a.v, f.g);
  std::printf("expected_duals=%.9f\n", duals);
  if (!prof.structure_valid || !prof.beta_monotone) return kExitViolation;
  const double gamma =
      rl::gamma_exact(f.g, prof.alpha, prof.beta_path(inst.dims)).total *
      inst.offline[static_cast<std::size_t>(a.v)].weight;
  std::printf("gamma_exact_times_weight=%.9f\n", gamma);
  return duals >= gamma - 1e-9 ? kExitOk : kExitViolation;
}

int cmd_solve_mps(const std::string& path) {
  rl::HighsBackend highs;
  const rl::LpSolution sol = highs.solve_file(path);
  std::printf("status=%s objective=%.12g\n", std::string(rl::status_name(sol.status)).c_str(),
              sol.objective);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified bounds on Ranking's competitive ratio from discretized LPs"};
  app.require_subcommand(1);
  Common common;
  for (int k = 0; k < argc; ++k) {
    if (k) common.command_line += " ";
    common.command_line += argv[k];
  }
  app.add_option("--threads", common.threads, "Worker threads (0: all cores)");
  app.add_flag("--verbose", common.verbose, "Solver log output");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", common.out, "Write a JSON solution file");
    sub->add_option("--table", common.table, "Append the table row to a CSV file");
    sub->add_flag("--force", common.force, "Build models above the memory cap");
    sub->add_option("--max-model-gib", common.max_model_gib, "Model memory cap");
  };

  LowerExactArgs lower;
  auto* le = app.add_subcommand("lower-exact", "Solve the full lower-bound LP and certify it");
  le->add_option("--m", lower.m)->required()->check(CLI::PositiveNumber);
  le->add_option("--n", lower.n)->required()->check(CLI::PositiveNumber);
  le->add_flag("--dedupe-h", lower.dedupe_h, "Share h variables between paths");
  le->add_option("--mps", common.mps, "Also export the model as free MPS");
  add_common(le);

  UpperExactArgs upper;
  auto* ue = app.add_subcommand("upper-exact", "Solve the full upper-bound LP");
  ue->add_option("--m", upper.m)->required()->check(CLI::PositiveNumber);
  ue->add_option("--n", upper.n)->required()->check(CLI::PositiveNumber);
  ue->add_option("--method", upper.method, "full, rowgen, or auto")
      ->check(CLI::IsMember({"auto", "full", "rowgen"}));
  ue->add_option("--mps", common.mps, "Also export the full model as free MPS");
  add_common(ue);

  SearchArgs search;
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--n", search.n)->required()->check(CLI::PositiveNumber);
    sub->add_option("--m", search.m, "Stage count (default: n)");
    sub->add_option("--init", search.init, "Solution file whose set seeds S0");
    sub->add_flag("--init-all", search.init_all,
                  "Seed with every member at the init file's grid");
    sub->add_option("--resume", search.resume, "Continue from a checkpoint file");
    sub->add_option("--csv", search.csv, "Iteration log (iteration,gamma,set_size,seconds)");
    sub->add_option("--checkpoint", search.checkpoint, "Rewrite after every iteration");
    sub->add_option("--max-iterations", search.max_iterations);
    sub->add_option("--epsilon", search.epsilon, "Convergence epsilon");
    sub->add_option("--add-threshold", search.add_threshold);
    sub->add_option("--removal-slack", search.removal_slack);
    sub->add_option("--iteration-seconds", search.iteration_seconds,
                    "Time limit per LP solve");
    add_common(sub);
  };
  auto* us = app.add_subcommand("upper-search", "Local-search constraint generation");
  add_search(us);
  auto* lh = app.add_subcommand("lower-heuristic",
                                "Lower-bound local search followed by certification");
  add_search(lh);
  lh->add_option("--certify-budget", search.certify_budget, "Paths to enumerate at most");

  CertifyArgs certify;
  auto* lc = app.add_subcommand("lower-certify", "Certify the grid of a solution file");
  lc->add_option("--solution", certify.solution)->required()->check(CLI::ExistingFile);
  lc->add_option("--budget", certify.budget, "Paths to enumerate at most");
  add_common(lc);

  VerifyArgs verify;
  auto* vf = app.add_subcommand("verify", "Run a seeded property suite");
  vf->add_option("--suite", verify.suite)
      ->required()
      ->check(CLI::IsMember(rl::suite_names()));
  vf->add_option("--seed", verify.seed);

  InstanceArgs inst;
  auto* ri = app.add_subcommand("random-instance", "Write a random bipartite instance");
  ri->add_option("--m", inst.m)->check(CLI::PositiveNumber);
  ri->add_option("--n", inst.n)->check(CLI::PositiveNumber);
  ri->add_option("--seed", inst.seed);
  ri->add_option("--max-offline", inst.max_offline);
  ri->add_option("--max-online", inst.max_online);
  ri->add_option("--edge-probability", inst.edge_probability);
  ri->add_flag("--unweighted", inst.unweighted);
  ri->add_option("--out", common.out);

  SimulateArgs sim;
  auto* si = app.add_subcommand("simulate", "Replay an instance and compare with gamma");
  si->add_option("--instance", sim.instance)->required()->check(CLI::ExistingFile);
  si->add_option("--solution", sim.solution, "Solution file providing g")
      ->required()
      ->check(CLI::ExistingFile);
  si->add_option("--u", sim.u, "Online index (default: first edge)");
  si->add_option("--v", sim.v, "Offline index");

  std::string mps_path;
  auto* sm = app.add_subcommand("solve-mps", "Solve an MPS file with HiGHS's own reader");
  sm->add_option("file", mps_path)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*le) return cmd_lower_exact(common, lower);
    if (*ue) return cmd_upper_exact(common, upper);
    if (*us) return cmd_upper_search(common, search);
    if (*lh) return cmd_lower_heuristic(common, search);
    if (*lc) return cmd_lower_certify(common, certify);
    if (*vf) return cmd_verify(verify);
    if (*ri) return cmd_random_instance(common, inst);
    if (*si) return cmd_simulate(sim);
    if (*sm) return cmd_solve_mps(mps_path);
  } catch (const rl::ResourceRefusal& e) {
    std::cerr << "resource refusal: " << e.what() << "\n";
    return kExitRefusal;
  } catch (const rl::BackendFailure& e) {
    std::cerr << "backend failure: " << e.what() << "\n";
    return kExitBackend;
  } catch (const rl::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitBackend;
  } catch (const rl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
