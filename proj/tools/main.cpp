// Copyright 2026 The gaussbound Authors
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

// Command line front end. Exit codes: 0 success, 1 a check failed,
// 2 inconclusive, 64 usage error, 65 bad input data, 70 numerical failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gaussbound/bound_family.hpp"
#include "gaussbound/circuit.hpp"
#include "gaussbound/decomposition.hpp"
#include "gaussbound/errors.hpp"
#include "gaussbound/io.hpp"
#include "gaussbound/reference_data.hpp"
#include "gaussbound/separability.hpp"
#include "gaussbound/sweep.hpp"
#include "verify.hpp"

#ifndef GAUSSBOUND_FIXTURES_DIR
#define GAUSSBOUND_FIXTURES_DIR "fixtures"
#endif

namespace gb = gaussbound;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitNumeric = 70;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(gb::ErrorCode code) {
  switch (code) {
    case gb::ErrorCode::Inconclusive: return kExitInconclusive;
    case gb::ErrorCode::NumericalFailure:
    case gb::ErrorCode::MaxIter:
    case gb::ErrorCode::NotConverged: return kExitNumeric;
    case gb::ErrorCode::InvalidAxis:
    case gb::ErrorCode::InvalidPartition: return kExitUsage;
    default: return kExitData;
  }
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    gb::io::write_text(path, text);
  }
}

ojson matrix_object(const gb::Matrix& m) { return ojson::parse(gb::io::matrix_to_json(m)); }

ojson rounded(const std::vector<double>& v) {
  ojson out = ojson::array();
  for (double x : v) out.push_back(gb::io::round15(x));
  return out;
}

// Tokens "a=1,2" and "b=3,4" with one-based mode numbers.
gb::Bipartition parse_partition(const std::vector<std::string>& tokens, int n_modes) {
  if (tokens.empty()) {
    if (n_modes < 2) throw UsageError("a partition needs at least two modes");
    return gb::Bipartition::split(n_modes / 2, n_modes - n_modes / 2);
  }
  gb::Bipartition part;
  bool seen_a = false, seen_b = false;
  for (const auto& tok : tokens) {
    const auto eq = tok.find('=');
    const std::string side = eq == std::string::npos ? "" : tok.substr(0, eq);
    if (side != "a" && side != "b") {
      throw UsageError("partition entries look like a=1,2 or b=3,4, got '" + tok + "'");
    }
    (side == "a" ? seen_a : seen_b) = true;
    auto& modes = side == "a" ? part.modes_a : part.modes_b;
    std::stringstream ss(tok.substr(eq + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      int m = 0;
      try {
        m = std::stoi(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != item.size()) throw UsageError("bad mode number '" + item + "'");
      modes.push_back(m - 1);
    }
  }
  if (!seen_a || !seen_b) throw UsageError("partition needs both a=... and b=...");
  part.validate(n_modes);
  return part;
}

int resolve_threads(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("GAUSSBOUND_THREADS")) {
    int v = 0;
    try {
      v = std::stoi(env);
    } catch (const std::exception&) {
    }
    if (v <= 0) throw UsageError("GAUSSBOUND_THREADS must be a positive integer");
    return v;
  }
  return gb::default_threads();
}

gb::ClassifyOptions classify_options(double tol_sep, double tol_ppt) {
  if (!(tol_sep > 0.0) || !(tol_ppt > 0.0)) throw UsageError("tolerances must be positive");
  gb::ClassifyOptions o;
  o.tol_sep = tol_sep;
  o.tol_ppt = tol_ppt;
  return o;
}

gb::CovarianceMatrix read_covariance(const std::string& path) {
  return gb::io::covariance_from_json(gb::io::read_text(path));
}

gb::BoundFamilyParams preset_by_name(const std::string& name) {
  for (int e = 1; e <= 4; ++e) {
    if (name == "example" + std::to_string(e)) return gb::preset_params(e);
  }
  throw UsageError("unknown preset '" + name + "' (expected example1 ... example4)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound entangled Gaussian states: construction, certification, decomposition "
               "and circuit synthesis"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads,
                 "Worker threads for sweeps (default: GAUSSBOUND_THREADS, else all cores)")
      ->check(CLI::PositiveNumber);

  std::string output;
  std::string input;
  double tol_sep = 1e-6;
  double tol_ppt = 1e-9;
  auto add_tolerances = [&](CLI::App* sub) {
    sub->add_option("--tol-sep", tol_sep, "Separability slack tolerance")->capture_default_str();
    sub->add_option("--tol-ppt", tol_ppt, "PPT margin tolerance relative to |gamma|_2")
        ->capture_default_str();
  };

  auto* construct_cmd = app.add_subcommand("construct", "Build a member of the bound entangled family");
  std::string preset, params_path, ordering = "interleaved";
  auto* preset_opt = construct_cmd->add_option("--preset", preset, "example1 ... example4");
  auto* params_opt =
      construct_cmd->add_option("--params", params_path, "Parameter JSON {beta, alpha}")->excludes(preset_opt);
  construct_cmd->add_option("--ordering", ordering, "interleaved or grouped")
      ->check(CLI::IsMember({"interleaved", "grouped"}));
  construct_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  auto* classify_cmd = app.add_subcommand("classify", "Separable / bound / free verdict");
  std::vector<std::string> partition;
  classify_cmd->add_option("-i,--input", input, "Covariance matrix JSON")->required();
  classify_cmd->add_option("--partition", partition, "Two tokens, e.g. a=1,2 b=3,4")->expected(2);
  add_tolerances(classify_cmd);
  classify_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  auto* decompose_cmd = app.add_subcommand("decompose", "Williamson and Euler decompositions");
  std::string mode = "both", input_kind = "covariance";
  decompose_cmd->add_option("-i,--input", input, "Matrix JSON")->required();
  decompose_cmd->add_option("--mode", mode, "williamson, euler or both")
      ->check(CLI::IsMember({"williamson", "euler", "both"}));
  decompose_cmd
      ->add_option("--input-kind", input_kind,
                   "covariance (Euler acts on its Williamson S) or symplectic")
      ->check(CLI::IsMember({"covariance", "symplectic"}));
  decompose_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  auto* synth_cmd = app.add_subcommand("synthesize", "Compile an optical circuit");
  double kappa = 3.0;
  double tau = gb::reference::squeezing_tau();
  bool generic = false, no_a0 = false, no_pi = false;
  std::string passive_path, input_state_path;
  synth_cmd->add_option("--kappa", kappa, "Thermal input scale 2 nbar + 1")->capture_default_str();
  synth_cmd->add_option("--tau", tau, "Squeezing e^{-r}")->capture_default_str();
  synth_cmd->add_flag("--generic", generic, "Decompose the two interferometers directly");
  synth_cmd->add_flag("--no-a0", no_a0, "Drop the A0 beam splitter");
  synth_cmd->add_flag("--no-pi-phase", no_pi, "Drop the pi phase on the second input");
  synth_cmd->add_option("--passive", passive_path,
                        "Instead compile this orthogonal symplectic (Matrix JSON) into a mesh");
  synth_cmd->add_option("--input-state", input_state_path, "Also write the input covariance here");
  synth_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  auto* sim_cmd = app.add_subcommand("simulate", "Propagate a covariance matrix through a circuit");
  std::string circuit_path;
  sim_cmd->add_option("--circuit", circuit_path, "Circuit JSON")->required();
  sim_cmd->add_option("-i,--input", input, "Input covariance JSON")->required();
  sim_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  auto* sweep_cmd = app.add_subcommand("sweep", "Entanglement map over (kappa, tau)");
  std::string kappa_axis = "1:17:200", tau_axis = "1:2:200", region_path, boundary_path;
  bool asymptote = false;
  double kappa_max = 1281.0;
  sweep_cmd->add_option("--kappa", kappa_axis, "start:stop:count")->capture_default_str();
  sweep_cmd->add_option("--tau", tau_axis, "start:stop:count")->capture_default_str();
  sweep_cmd->add_option("--out", region_path, "Region CSV (default stdout)");
  sweep_cmd->add_option("--boundary", boundary_path, "Boundary CSV for every kappa on the axis");
  sweep_cmd->add_flag("--asymptote", asymptote, "Also estimate the large-kappa bound/free limit");
  sweep_cmd->add_option("--kappa-max", kappa_max, "Top rung of the asymptote ladder")
      ->capture_default_str();
  add_tolerances(sweep_cmd);

  auto* verify_cmd = app.add_subcommand("verify-paper", "Run every reference check end to end");
  std::string fixtures_dir = GAUSSBOUND_FIXTURES_DIR, report_path;
  verify_cmd->add_option("--fixtures", fixtures_dir, "Fixture directory")->capture_default_str();
  verify_cmd->add_option("--report", report_path, "Write the JSON report here");
  add_tolerances(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*construct_cmd) {
      if (!*preset_opt && !*params_opt) throw UsageError("construct needs --preset or --params");
      const gb::BoundFamilyParams p = *preset_opt
                                          ? preset_by_name(preset)
                                          : gb::io::params_from_json(gb::io::read_text(params_path));
      for (auto v : gb::near_degenerate_params(p)) {
        std::cerr << "warning: parameters close to the constraint " << gb::to_string(v) << "\n";
      }
      gb::CovarianceMatrix gamma = gb::construct(p);
      if (ordering == "grouped") gamma = gb::reorder(gamma, gb::Ordering::Grouped);
      emit(output, gb::io::covariance_to_json(gamma));
      return 0;
    }

    if (*classify_cmd) {
      const gb::CovarianceMatrix gamma = read_covariance(input);
      const gb::Bipartition part = parse_partition(partition, gamma.n_modes());
      const gb::PsdCheck valid = gb::is_valid_covariance(gamma);
      if (!valid.ok) throw gb::Error(gb::ErrorCode::Format, "input is not a valid covariance matrix");
      const gb::EntanglementVerdict v = gb::classify(gamma, part, classify_options(tol_sep, tol_ppt));
      emit(output, gb::io::verdict_to_json(v));
      return 0;
    }

    if (*decompose_cmd) {
      ojson out;
      out["format_version"] = 1;
      out["mode"] = mode;
      gb::Ordering ord;
      const gb::Matrix m = gb::io::matrix_from_json(gb::io::read_text(input), &ord);
      std::optional<gb::SymplecticTransform> s;
      if (input_kind == "symplectic") {
        if (mode != "euler") throw UsageError("a symplectic input only supports --mode euler");
        s = gb::SymplecticTransform(m, ord);
      } else {
        const gb::WilliamsonForm w = gb::williamson(gb::CovarianceMatrix(m, ord));
        if (w.degenerate) out["degenerate"] = true;
        if (mode != "euler") {
          out["nu"] = rounded(w.nu);
          out["S"] = matrix_object(w.s.data());
        }
        s = w.s;
      }
      if (mode != "williamson") {
        const gb::EulerForm e = gb::euler_decompose(*s);
        out["r"] = rounded(e.r);
        out["K"] = matrix_object(e.k.data());
        out["L"] = matrix_object(e.l.data());
      }
      emit(output, out.dump(2) + "\n");
      return 0;
    }

    if (*synth_cmd) {
      if (!passive_path.empty()) {
        gb::Ordering ord;
        const gb::Matrix m = gb::io::matrix_from_json(gb::io::read_text(passive_path), &ord);
        const gb::OpticalCircuit c =
            gb::decompose_unitary(gb::passive_to_unitary(gb::SymplecticTransform(m, ord)));
        emit(output, gb::io::circuit_to_json(c));
        return 0;
      }
      gb::Fig1Options o;
      o.use_factors = !generic;
      o.include_a0 = !no_a0;
      o.include_pi_phase = !no_pi;
      const auto [circuit, in_state] = gb::build_fig1_circuit(kappa, tau, o);
      if (!input_state_path.empty()) gb::io::write_text(input_state_path, gb::io::covariance_to_json(in_state));
      emit(output, gb::io::circuit_to_json(circuit));
      return 0;
    }

    if (*sim_cmd) {
      const gb::OpticalCircuit c = gb::io::circuit_from_json(gb::io::read_text(circuit_path));
      emit(output, gb::io::covariance_to_json(gb::simulate(c, read_covariance(input))));
      return 0;
    }

    if (*sweep_cmd) {
      gb::SweepOptions so;
      so.classify = classify_options(tol_sep, tol_ppt);
      so.threads = resolve_threads(threads);
      const gb::SweepGrid grid = gb::scan(gb::parse_axis(kappa_axis), gb::parse_axis(tau_axis), so);
      emit(region_path, gb::io::grid_to_csv(grid));
      if (!boundary_path.empty()) {
        gb::BoundaryOptions bo;
        bo.classify = so.classify;
        const auto s2b = gb::boundary_curve(grid.kappa, gb::BoundaryKind::SepToBound, bo, so.threads);
        const auto b2f = gb::boundary_curve(grid.kappa, gb::BoundaryKind::BoundToFree, bo, so.threads);
        gb::io::write_text(boundary_path, gb::io::boundaries_to_csv(s2b, b2f));
      }
      if (asymptote) {
        gb::BoundaryOptions bo;
        bo.classify = so.classify;
        const gb::AsymptoteEstimate est = gb::estimate_asymptote(kappa_max, 0.005, 5, bo);
        std::cerr << "asymptote: tau = " << est.value << " +/- " << est.error << "\n";
      }
      const auto violations = gb::monotone_violations(grid);
      std::cerr << grid.cells.size() << " cells, " << grid.inconclusive_count() << " inconclusive, "
                << violations.size() << " ordering violations\n";
      if (!violations.empty()) return kExitFail;
      gb::require_conclusive(grid);
      return 0;
    }

    if (*verify_cmd) {
      gb::tools::VerifyConfig cfg;
      cfg.fixtures_dir = fixtures_dir;
      cfg.classify = classify_options(tol_sep, tol_ppt);
      cfg.threads = resolve_threads(threads);
      const auto suites = gb::tools::run_verification(cfg);
      std::cout << gb::tools::report_text(suites);
      if (!report_path.empty()) gb::io::write_text(report_path, gb::tools::report_json(suites));
      return gb::tools::exit_code(suites);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const gb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}
