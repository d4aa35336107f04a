// Copyright 2026 The rqsp Authors
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

// Command-line front end. Exit codes: 0 success, 1 usage or input error,
// 2 verification failure.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rqsp/compiler.hpp"
#include "rqsp/eit.hpp"
#include "rqsp/json_io.hpp"
#include "rqsp/kernels.hpp"
#include "rqsp/planner.hpp"
#include "rqsp/qsp.hpp"
#include "rqsp/util.hpp"
#include "rqsp/verifier.hpp"

namespace {

using namespace rqsp;

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  write_file_atomic(out_path, content);
}

Hamiltonian load_or_generate(const std::string& ham_path, int n_sites,
                             std::uint64_t seed) {
  if (!ham_path.empty()) return hamiltonian_from_json(read_file(ham_path));
  return disordered_heisenberg_chain(n_sites, seed);
}

// Default tree shape: 7 rows, columns sized so every term fits (the benchmark
// family lands exactly on 7 x n_sites).
LcuPlan build_plan(const Hamiltonian& ham, std::vector<int> branching,
                   int support_ceiling) {
  if (branching.empty()) {
    const int terms = static_cast<int>(ham.terms.size());
    branching = {7, std::max(ham.n_sites, (terms + 6) / 7)};
  }
  return make_lcu_plan(ham, std::move(branching), support_ceiling);
}

CircuitIR build_stage(const LcuPlan& plan, const std::string& stage) {
  if (stage == "prep") return compile_state_prep(plan);
  if (stage == "prep-tilde") return compile_state_prep_tilde(plan);
  if (stage == "paulis") return compile_applied_paulis(plan);
  if (stage == "walk") return compile_walk(plan);
  if (stage == "controlled-walk") return compile_controlled_walk(plan);
  throw InputError("unknown stage: " + stage);
}

// "4n" style policies: a factor followed by 'n', evolution time factor * n.
double parse_time_factor(const std::string& policy) {
  if (policy.size() < 2 || policy.back() != 'n')
    throw InputError("unknown time policy '" + policy + "' (expected e.g. 4n)");
  const std::string head = policy.substr(0, policy.size() - 1);
  try {
    size_t used = 0;
    const double factor = std::stod(head, &used);
    if (used != head.size() || !(factor > 0.0)) throw std::invalid_argument("");
    return factor;
  } catch (const std::exception&) {
    throw InputError("unknown time policy '" + policy + "' (expected e.g. 4n)");
  }
}

// "a:b:step" (inclusive), "a:b" (step 1), or a single value.
std::vector<int> parse_range(const std::string& text) {
  std::vector<int> parts;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t next = text.find(':', pos);
    const std::string tok =
        text.substr(pos, next == std::string::npos ? next : next - pos);
    try {
      size_t used = 0;
      parts.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw InputError("malformed range '" + text + "' (expected a:b:step)");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (parts.size() == 1) return parts;
  if (parts.size() > 3 || parts[1] < parts[0] || (parts.size() == 3 && parts[2] < 1))
    throw InputError("malformed range '" + text + "' (expected a:b:step)");
  const int step = parts.size() == 3 ? parts[2] : 1;
  std::vector<int> values;
  for (int v = parts[0]; v <= parts[1]; v += step) values.push_back(v);
  return values;
}

std::vector<MethodPlan> run_methods(const LcuPlan& plan, double t, double eps,
                                    const std::string& method) {
  const int n = plan.ham.n_sites;
  if (method == "all")
    return {plan_qsp(plan, t, eps),
            plan_pf4(n, t, eps, PfCharge::ComposedFourthOrder),
            plan_pf4(n, t, eps, PfCharge::SingleExponentialRow),
            plan_haah_1d(plan, t, eps)};
  if (method == "qsp") return {plan_qsp(plan, t, eps)};
  if (method == "pf4") return {plan_pf4(n, t, eps, PfCharge::ComposedFourthOrder)};
  if (method == "pf4-first-order")
    return {plan_pf4(n, t, eps, PfCharge::SingleExponentialRow)};
  if (method == "haah") return {plan_haah_1d(plan, t, eps)};
  throw InputError("unknown method: " + method);
}

QspSequence random_phase_sequence(std::uint64_t seed, int iterates) {
  std::mt19937_64 rng(seed);
  QspSequence seq;
  for (int i = 0; i <= iterates; ++i)
    seq.phases.push_back(uniform_sym(rng) * std::numbers::pi);
  return seq;
}

struct NamedCheck {
  std::string name;
  CheckResult result;
};

// Runs the dense checks selected by `which` on a single-level plan.
std::vector<NamedCheck> run_checks(const LcuPlan& plan, const std::string& which,
                                   std::uint64_t seed) {
  std::vector<NamedCheck> out;
  const bool all = which == "all";
  if (all || which == "block")
    out.push_back({"block", verify_block_encoding(plan)});
  if (all || which == "chebyshev")
    out.push_back({"chebyshev", verify_walk_power_blocks(plan, 4)});
  if (all || which == "eigenphase")
    out.push_back({"eigenphase", verify_walk_eigenphases(plan)});
  if (all || which == "reflection")
    out.push_back({"reflection", verify_reflection_identity(plan)});
  if (all || which == "qsp")
    out.push_back(
        {"qsp", verify_qsp_end_to_end(plan, random_phase_sequence(seed, 4))});
  if (out.empty()) throw InputError("unknown check: " + which);
  return out;
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

std::string reported_example_json(int gates) {
  const EitParams p = reported_parameter_example();
  const EitErrorReport r = conditional_errors(p);
  std::string out = "{\n";
  out += "  \"tau_gate_s\": " + format_double(r.tau_gate) + ",\n";
  out += "  \"eps_saturated\": " + format_double(r.eps_saturated) + ",\n";
  out += "  \"eps_virtual\": " + format_double(r.eps_virtual) + ",\n";
  out += "  \"eta\": " + format_double(r.eta) + ",\n";
  out += "  \"bias_linear\": " + bool_word(r.bias_linear) + ",\n";
  out += "  \"clamped\": " + bool_word(r.clamped) + ",\n";
  out += "  \"register_atoms\": " + std::to_string(gates) + ",\n";
  out += "  \"total_error\": " + format_double(total_error_ohe(p, gates)) + "\n";
  out += "}\n";
  return out;
}

std::string strong_drive_csv(const std::vector<int>& n_values) {
  const EitParams base = strong_drive_demo_base();
  const auto errors = strong_drive_total_errors(base, n_values);
  std::string out = "n_atoms,omega_c,eps_total\n";
  for (size_t i = 0; i < n_values.size(); ++i) {
    const double omega_c =
        base.omega_c * std::pow(n_values[i] / 100.0, 0.25);
    out += std::to_string(n_values[i]) + ',' + format_double(omega_c) + ',' +
           format_double(errors[i]) + '\n';
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("RQSP_THREADS")) {
    const int n = std::atoi(threads);
    if (n > 0) kernels::set_max_threads(n);
  }

  CLI::App app{"compiler and resource estimator for unitary-combination walk protocols"};
  app.require_subcommand(1);

  // shared options, bound per subcommand
  std::string ham_path, out_path, stage = "walk", method = "all";
  std::string time_policy = "4n", range_text, check = "all";
  int n_sites = 10, terms = 6, gates = 100;
  std::uint64_t seed = 1;
  std::vector<int> branching;
  int support_ceiling = -1;
  double eps = 1e-3, time_value = 0.0, evolution_t = 0.5;
  std::vector<int> phys_n, buffers{2, 3, 4};
  bool reported_example = false, strong_drive = false;

  auto* gen = app.add_subcommand("gen-hamiltonian",
                                 "emit a disordered Heisenberg chain as JSON");
  gen->add_option("--n-sites", n_sites, "chain length")->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "field disorder seed");
  gen->add_option("-o,--out", out_path, "output file (default stdout)");

  auto add_plan_opts = [&](CLI::App* cmd) {
    cmd->add_option("--hamiltonian", ham_path, "Hamiltonian JSON file");
    cmd->add_option("--heisenberg,--n-sites", n_sites,
                    "generate the benchmark chain at this length");
    cmd->add_option("--seed", seed, "disorder seed when generating");
    cmd->add_option("--branching", branching,
                    "address tree shape (default: 7 rows x fitted columns)");
    cmd->add_option("--support-ceiling", support_ceiling,
                    "charge every applied Pauli at this locality");
  };

  auto* compile = app.add_subcommand("compile", "lower a Hamiltonian to circuit IR");
  add_plan_opts(compile);
  compile->add_option("--stage", stage,
                      "prep | prep-tilde | paulis | walk | controlled-walk");
  compile->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* report = app.add_subcommand("report", "resource accounting for a stage");
  add_plan_opts(report);
  report->add_option("--stage", stage,
                     "prep | prep-tilde | paulis | walk | controlled-walk");
  report->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* estimate = app.add_subcommand(
      "estimate", "end-to-end method estimates for one instance (CSV)");
  estimate->add_option("--hamiltonian", ham_path, "Hamiltonian JSON file");
  auto* est_n = estimate->add_option(
      "--heisenberg", n_sites, "benchmark chain length");
  estimate->add_option("--seed", seed, "disorder seed when generating");
  auto* est_t = estimate->add_option("--time", time_value, "evolution time");
  estimate->add_option("--time-policy", time_policy,
                       "evolution time as factor x n_sites (default 4n)");
  estimate->add_option("--epsilon,--eps", eps, "target error")
      ->check(CLI::PositiveNumber);
  estimate->add_option("--method", method,
                       "qsp | pf4 | pf4-first-order | haah | all");
  estimate->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* sweep = app.add_subcommand("sweep",
                                   "method comparison over chain lengths (CSV)");
  sweep->add_option("--heisenberg-range", range_text,
                    "chain lengths as a:b:step (inclusive)")
      ->required();
  sweep->add_option("--seed", seed, "disorder seed");
  sweep->add_option("--epsilon,--eps", eps, "target error")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--time-policy", time_policy,
                    "evolution time as factor x n_sites (default 4n)");
  sweep->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand(
      "verify", "dense operator checks on a random instance (14-qubit cap)");
  verify->add_option("--check", check,
                     "block | chebyshev | eigenphase | reflection | qsp | all");
  verify->add_option("--n", n_sites, "system sites of the random instance")
      ->check(CLI::PositiveNumber);
  verify->add_option("--terms", terms, "term count of the random instance")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "instance seed");
  verify->add_option("--hamiltonian", ham_path,
                     "check this file instead of a random instance");

  auto* physical = app.add_subcommand(
      "physical", "transparency-window error model reports");
  physical->add_flag("--reported-example", reported_example,
                     "per-gate errors at the published operating point (JSON)");
  physical->add_flag("--strong-drive", strong_drive,
                     "register-size scaling with coupling ~ N^(1/4) (CSV)");
  physical->add_option("--gates", gates, "register size for the total error")
      ->check(CLI::PositiveNumber);
  physical->add_option("--n-list", phys_n, "register sizes for the scaling table");
  physical->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* decimate = app.add_subcommand(
      "decimation", "exact vs block-decimated evolution error (12-site cap)");
  decimate->add_option("--hamiltonian", ham_path, "Hamiltonian JSON file");
  decimate->add_option("--heisenberg,--n-sites", n_sites,
                       "chain length when generating");
  decimate->add_option("--seed", seed, "disorder seed when generating");
  decimate->add_option("--t", evolution_t, "evolution time");
  decimate->add_option("--buffers", buffers, "buffer sizes to test");
  decimate->add_option("-o,--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (gen->parsed()) {
      emit(out_path, hamiltonian_to_json(disordered_heisenberg_chain(n_sites, seed)));
      return 0;
    }
    if (compile->parsed() || report->parsed()) {
      const auto ham = load_or_generate(ham_path, n_sites, seed);
      const auto plan = build_plan(ham, branching, support_ceiling);
      const auto ir = build_stage(plan, stage);
      emit(out_path, compile->parsed() ? circuit_to_json(ir)
                                       : report_to_json(account(ir)));
      return 0;
    }
    if (estimate->parsed()) {
      if (!ham_path.empty() && est_n->count() > 0)
        throw InputError("pass either --hamiltonian or --heisenberg, not both");
      LcuPlan plan = ham_path.empty()
                         ? heisenberg_benchmark_plan(n_sites, seed)
                         : build_plan(hamiltonian_from_json(read_file(ham_path)),
                                      {}, support_ceiling);
      const double t = est_t->count() > 0
                           ? time_value
                           : parse_time_factor(time_policy) * plan.ham.n_sites;
      if (!(t > 0.0)) throw InputError("evolution time must be positive");
      emit(out_path, plans_to_csv(run_methods(plan, t, eps, method)));
      return 0;
    }
    if (sweep->parsed()) {
      const auto n_values = parse_range(range_text);
      const double factor = parse_time_factor(time_policy);
      emit(out_path, plans_to_csv(sweep_methods(n_values, seed, eps, factor)));
      return 0;
    }
    if (verify->parsed()) {
      const auto ham = ham_path.empty()
                           ? random_pauli_hamiltonian(n_sites, terms, seed)
                           : hamiltonian_from_json(read_file(ham_path));
      const auto plan =
          make_lcu_plan(ham, {static_cast<int>(ham.terms.size())});
      const auto checks = run_checks(plan, check, seed);
      bool ok = true;
      for (const auto& c : checks) {
        std::cout << c.name << ": deviation "
                  << format_double(c.result.max_deviation) << " (tolerance "
                  << format_double(c.result.tolerance) << ") "
                  << (c.result.pass ? "ok" : "FAIL") << "\n";
        ok = ok && c.result.pass;
      }
      return ok ? 0 : 2;
    }
    if (physical->parsed()) {
      if (strong_drive) {
        std::vector<int> ns = phys_n;
        if (ns.empty()) ns = {100, 200, 400, 800, 1600, 3200, 6400, 10000};
        emit(out_path, strong_drive_csv(ns));
      } else {
        emit(out_path, reported_example_json(gates));
      }
      return 0;
    }
    if (decimate->parsed()) {
      const auto ham = load_or_generate(ham_path, n_sites, seed);
      const auto errors = lr_decimation_errors(ham, evolution_t, buffers);
      std::string out;
      for (size_t i = 0; i < buffers.size(); ++i)
        out += "buffer " + std::to_string(buffers[i]) + ": error " +
               format_double(errors[i]) + "\n";
      emit(out_path, out);
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
