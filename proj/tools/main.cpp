// Copyright 2026 The statorsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "statorsim/analysis.hpp"
#include "statorsim/improved.hpp"
#include "statorsim/multiparty.hpp"
#include "statorsim/protocol.hpp"
#include "statorsim/rng.hpp"
#include "statorsim/serialize.hpp"
#include "statorsim/verify.hpp"

namespace {

using namespace statorsim;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitBadArgs = 2;

struct BadArgs : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw BadArgs("cannot open output file: " + path);
  out << content;
  if (!out) throw BadArgs("cannot write output file: " + path);
}

PauliAxis parse_axis(const std::vector<double>& v) {
  return PauliAxis{v[0], v[1], v[2]};
}

// --target is either "random" (seeded draw) or a basis index.
StateVector make_target(const std::string& target, std::uint64_t seed,
                        const std::vector<std::string>& labels) {
  const std::size_t k = labels.size();
  if (target == "random") {
    SplitMix64 rng(seed);
    return StateVector(labels, random_state(rng, k));
  }
  for (char c : target) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw BadArgs("--target must be 'random' or a basis index");
    }
  }
  const unsigned long index = std::stoul(target);
  if (index >= (1ull << k)) throw BadArgs("--target basis index out of range");
  std::vector<int> bits(k);
  for (std::size_t q = 0; q < k; ++q) {
    bits[q] = static_cast<int>((index >> (k - 1 - q)) & 1u);
  }
  return basis_state(labels, bits);
}

struct CommonFlags {
  double xi = 0.0;
  std::vector<double> axis_a{0.0, 0.0, 1.0};
  std::vector<double> axis_b{0.0, 0.0, 1.0};
  std::string target = "random";
  std::uint64_t seed = 42;
  std::string output;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags, bool xi_required = true) {
  auto* xi_opt = cmd->add_option("--xi", flags.xi, "gate angle in (0, pi/4]");
  if (xi_required) xi_opt->required();
  cmd->add_option("--axis-a", flags.axis_a, "Alice-side Pauli axis x,y,z")
      ->delimiter(',')
      ->expected(3);
  cmd->add_option("--axis-b", flags.axis_b, "Bob-side Pauli axis x,y,z")
      ->delimiter(',')
      ->expected(3);
  cmd->add_option("--target", flags.target, "'random' or a basis index");
  cmd->add_option("--seed", flags.seed, "seed for random targets");
  cmd->add_option("--output", flags.output, "output file (default stdout)");
}

GateSpec make_gate(const CommonFlags& flags) {
  GateSpec g;
  g.xi = flags.xi;
  g.axis_a = parse_axis(flags.axis_a);
  g.axis_b = parse_axis(flags.axis_b);
  return g;
}

int run_report_command(const std::string& name, const CommonFlags& flags,
                       std::map<std::string, double> params, const ProtocolReport& report) {
  params["seed"] = static_cast<double>(flags.seed);
  write_output(flags.output, report_to_json(name, params, report));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact branch-enumerating simulator of entanglement-assisted nonlocal "
      "gate protocols"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  CommonFlags det_flags;
  CLI::App* det = app.add_subcommand(
      "deterministic", "maximally entangled resource, F=1 in every branch");
  add_common_flags(det, det_flags);

  CommonFlags fpt_flags;
  double fpt_f = 1.0;
  CLI::App* fpt = app.add_subcommand(
      "fpt", "one-shot trade-off: success probability F at entanglement h(F/2)");
  add_common_flags(fpt, fpt_flags);
  fpt->add_option("--F", fpt_f, "target success probability in (0, 1]")->required();

  CommonFlags smallxi_flags;
  std::optional<double> smallxi_alpha;
  CLI::App* smallxi = app.add_subcommand(
      "smallxi", "low-entanglement regime with a single success branch");
  add_common_flags(smallxi, smallxi_flags);
  smallxi->add_option("--alpha", smallxi_alpha,
                      "resource angle in (0, pi/2); defaults to the optimum");

  CommonFlags improved_flags;
  double improved_n = 0.0;
  double improved_b = 0.0;
  CLI::App* improved = app.add_subcommand(
      "improved", "POVM-and-retry protocol parameterized by (n, b)");
  add_common_flags(improved, improved_flags);
  improved->add_option("--n", improved_n, "angle ratio tan^2(t0)/tan^2(t1)")->required();
  improved->add_option("--b", improved_b, "2*cot^2(t0)+1, must be > 1")->required();

  double curves_b = 1.001;
  std::size_t curves_points = 2000;
  double curves_nmax = 20.0;
  std::string curves_format = "csv";
  std::string curves_output;
  CLI::App* curves = app.add_subcommand(
      "curves", "entanglement/fidelity trade-off curves over n at fixed b");
  curves->add_option("--b", curves_b, "POVM shape parameter, > 1");
  curves->add_option("--points", curves_points, "grid size");
  curves->add_option("--nmax", curves_nmax, "upper end of the n grid");
  curves->add_option("--format", curves_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  curves->add_option("--output", curves_output, "output file (default stdout)");

  double plan_xi = 0.0;
  double plan_b = 1.001;
  std::string plan_output;
  CLI::App* plan = app.add_subcommand(
      "plan", "pick the protocol and resource for one gate angle");
  plan->add_option("--xi", plan_xi, "gate angle in (0, pi/4]")->required();
  plan->add_option("--b", plan_b, "POVM shape parameter, > 1");
  plan->add_option("--output", plan_output, "output file (default stdout)");

  CommonFlags multi_flags;
  std::size_t multi_n_partners = 2;
  std::string multi_mode = "general";
  double multi_improved_n = 2.0;
  double multi_improved_b = 1.001;
  std::vector<double> multi_lambda{0.5, 0.5, 0.5, 0.5};
  std::optional<double> multi_delta0;
  std::optional<double> multi_delta1;
  std::vector<double> multi_axis{0.0, 0.0, 1.0};
  std::vector<double> multi_charlie_axis;
  CLI::App* multi = app.add_subcommand(
      "multiparty", "quasi-GHZ protocol across N partners plus Charlie");
  multi->add_option("--xi", multi_flags.xi, "gate angle in (0, pi/4]")->required();
  multi->add_option("--N", multi_n_partners, "number of partners, >= 2")->required();
  multi->add_option("--mode", multi_mode, "general or improved")
      ->check(CLI::IsMember({"general", "improved"}));
  multi->add_option("--n", multi_improved_n, "improved mode: angle ratio");
  multi->add_option("--b", multi_improved_b, "improved mode: 2*cot^2(t0)+1");
  multi->add_option("--lambda", multi_lambda, "general mode: resource coefficients")
      ->delimiter(',')
      ->expected(4);
  multi->add_option("--delta0", multi_delta0, "general mode: basis angle (default xi)");
  multi->add_option("--delta1", multi_delta1, "general mode: basis angle (default xi)");
  multi->add_option("--axis", multi_axis, "Pauli axis used by every partner")
      ->delimiter(',')
      ->expected(3);
  multi->add_option("--charlie-axis", multi_charlie_axis,
                    "include Charlie's target with this axis")
      ->delimiter(',')
      ->expected(3);
  multi->add_option("--target", multi_flags.target, "'random' or a basis index");
  multi->add_option("--seed", multi_flags.seed, "seed for random targets");
  multi->add_option("--output", multi_flags.output, "output file (default stdout)");

  std::string verify_output;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify-all", "run every acceptance check; exit 1 if any fails");
  verify_cmd->add_option("--output", verify_output, "also write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return e.get_exit_code() == 0 ? app.exit(e) : (app.exit(e), kExitBadArgs);
  }

  try {
    if (det->parsed()) {
      const GateSpec g = make_gate(det_flags);
      const auto [spec, angles] = deterministic_config(g);
      const StateVector target = make_target(det_flags.target, det_flags.seed, {"A", "B"});
      return run_report_command("deterministic", det_flags, {{"xi", g.xi}},
                                run_general_protocol(spec, angles, g, target));
    }
    if (fpt->parsed()) {
      const GateSpec g = make_gate(fpt_flags);
      const auto [spec, angles] = fpt_config(g, fpt_f);
      const StateVector target = make_target(fpt_flags.target, fpt_flags.seed, {"A", "B"});
      return run_report_command("fpt", fpt_flags, {{"xi", g.xi}, {"F_target", fpt_f}},
                                run_general_protocol(spec, angles, g, target));
    }
    if (smallxi->parsed()) {
      const GateSpec g = make_gate(smallxi_flags);
      const double alpha = smallxi_alpha ? *smallxi_alpha : optimal_alpha(g);
      const auto [spec, angles] = smallxi_config(g, alpha);
      const StateVector target =
          make_target(smallxi_flags.target, smallxi_flags.seed, {"A", "B"});
      return run_report_command("smallxi", smallxi_flags, {{"xi", g.xi}, {"alpha", alpha}},
                                run_general_protocol(spec, angles, g, target));
    }
    if (improved->parsed()) {
      const GateSpec g = make_gate(improved_flags);
      const ImprovedParams p = params_from_nb(improved_n, improved_b, g.xi);
      const StateVector target =
          make_target(improved_flags.target, improved_flags.seed, {"A", "B"});
      return run_report_command("improved", improved_flags,
                                {{"xi", g.xi}, {"n", improved_n}, {"b", improved_b}},
                                run_improved_protocol(p, g, target));
    }
    if (curves->parsed()) {
      const Curve curve =
          generate_curve(curves_b, default_curve_grid(curves_b, curves_points, curves_nmax));
      if (curves_format != "csv") throw BadArgs("curves supports --format csv only");
      write_output(curves_output, curve_to_csv(curve));
      for (const std::string& warning : curve.warnings) {
        std::cerr << "warning: " << warning << "\n";
      }
      return kExitOk;
    }
    if (plan->parsed()) {
      const GatePlan result = plan_for_xi(plan_xi, plan_b);
      write_output(plan_output, plan_to_json(plan_xi, plan_b, result));
      return kExitOk;
    }
    if (multi->parsed()) {
      MultipartySpec spec;
      spec.num_partners = multi_n_partners;
      for (std::size_t k = 0; k < multi_n_partners; ++k) {
        spec.partner_axes.push_back(parse_axis(multi_axis));
      }
      if (!multi_charlie_axis.empty()) {
        spec.charlie_axis = parse_axis(multi_charlie_axis);
      }
      std::map<std::string, double> params{{"xi", multi_flags.xi},
                                           {"N", static_cast<double>(multi_n_partners)}};
      if (multi_mode == "improved") {
        spec.mode = MultipartyMode::Improved;
        spec.improved_n = multi_improved_n;
        spec.improved_b = multi_improved_b;
        const ImprovedParams p =
            params_from_nb(multi_improved_n, multi_improved_b, multi_flags.xi);
        spec.lambda = coefficients_from_angles(p.theta0, p.theta1);
        params["n"] = multi_improved_n;
        params["b"] = multi_improved_b;
      } else {
        for (std::size_t i = 0; i < 4; ++i) spec.lambda.lambda[i] = multi_lambda[i];
        spec.angles.delta0 = multi_delta0 ? *multi_delta0 : multi_flags.xi;
        spec.angles.delta1 = multi_delta1 ? *multi_delta1 : multi_flags.xi;
        params["delta0"] = spec.angles.delta0;
        params["delta1"] = spec.angles.delta1;
      }
      const StateVector target = make_target(multi_flags.target, multi_flags.seed,
                                             multiparty_target_labels(spec));
      return run_report_command("multiparty", multi_flags, std::move(params),
                                run_multiparty_protocol(spec, multi_flags.xi, target));
    }
    if (verify_cmd->parsed()) {
      const std::vector<verify::CheckResult> results = verify::run_all();
      const bool ok = verify::print_results(results, std::cout);
      if (!verify_output.empty()) {
        std::ostringstream buffer;
        verify::print_results(results, buffer);
        write_output(verify_output, buffer.str());
      }
      return ok ? kExitOk : kExitFailure;
    }
  } catch (const BadArgs& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitBadArgs;
}
