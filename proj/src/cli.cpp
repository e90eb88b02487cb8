#include "krein/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>

#include "krein/checks.hpp"
#include "krein/instance_io.hpp"
#include "krein/kalgebra.hpp"
#include "krein/linalg.hpp"
#include "krein/spectrum.hpp"

namespace krein::cli {

using nlohmann::json;

namespace {

const char* command_name(Command c) {
  switch (c) {
    case Command::Verify: return "verify";
    case Command::Spectrum: return "spectrum";
    case Command::Gen: return "gen";
    case Command::Counterexample: return "counterexample";
  }
  return "unknown";
}

RunResult input_error(const std::string& message) {
  return RunResult{kInputError, json{{"error", message}}, message};
}

/// Writes the report when an output path is configured; I/O failures become input errors.
RunResult finish(RunResult result, const RunConfig& cfg) {
  if (cfg.output_path && cfg.command != Command::Gen) {
    std::ofstream out(*cfg.output_path, std::ios::binary);
    if (!out || !(out << io::dump(result.report)))
      return input_error("cannot write report to " + cfg.output_path->string());
  }
  return result;
}

std::optional<KreinAlgebra> load(const RunConfig& cfg, RunResult& failure) {
  try {
    return io::load_instance(*cfg.input_path);
  } catch (const SchemaError& e) {
    failure = input_error(e.what());
  } catch (const InvalidAlgebraError& e) {
    failure = input_error(e.what());
  } catch (const std::invalid_argument& e) {
    failure = input_error(e.what());
  }
  return std::nullopt;
}

const char* hypothesis_name(Hypothesis h) {
  switch (h) {
    case Hypothesis::Commutative: return "commutative";
    case Hypothesis::Full: return "full";
    case Hypothesis::OddSymmetry: return "odd_symmetry";
  }
  return "unknown";
}

json witness_json(const DeformedWitness& w) {
  return json{{"kind", w.kind == DeformedWitness::Kind::Submultiplicativity ? "submultiplicativity"
                                                                            : "krein_identity"},
              {"x", io::to_json(w.x)},
              {"y", io::to_json(w.y)},
              {"lhs", w.lhs},
              {"rhs", w.rhs},
              {"ratio", w.rhs > 0.0 ? w.lhs / w.rhs : 0.0}};
}

}  // namespace

std::string validate(const RunConfig& cfg) {
  if (!(cfg.tol > 0.0)) return "tol must be positive";
  if (cfg.samples < 1) return "samples must be positive";
  switch (cfg.command) {
    case Command::Verify:
    case Command::Spectrum:
      if (!cfg.input_path) return std::string(command_name(cfg.command)) + " requires --input";
      break;
    case Command::Gen:
      if (!cfg.output_path) return "gen requires --out";
      if (cfg.points < 1) return "points must be positive";
      break;
    case Command::Counterexample:
      if (cfg.grid < 2 || cfg.grid % 2 != 0) return "grid must be a positive even number";
      break;
  }
  return {};
}

RunResult run_verify(const RunConfig& cfg) {
  if (auto msg = validate(cfg); !msg.empty()) return input_error(msg);
  RunResult result;
  auto algebra = load(cfg, result);
  if (!algebra) return finish(result, cfg);

  const Report report = verify_axioms(*algebra, cfg.samples, cfg.seed, cfg.tol);
  result.report = to_json(report);
  result.report["command"] = "verify";
  result.report["dim"] = algebra->dim();
  result.report["even_dim"] = algebra->even_dim();
  result.report["odd_dim"] = algebra->odd_dim();
  result.exit_code = report.all_passed() ? kPass : kCheckFailed;
  if (!report.all_passed()) {
    for (const Check& c : report.checks)
      if (!c.passed) {
        result.message = "check failed: " + c.name;
        break;
      }
  }
  return finish(result, cfg);
}

RunResult run_spectrum(const RunConfig& cfg) {
  if (auto msg = validate(cfg); !msg.empty()) return input_error(msg);
  RunResult result;
  auto algebra = load(cfg, result);
  if (!algebra) return finish(result, cfg);

  try {
    const SpectralReport sr = verify_spectral_theorem(*algebra, cfg.samples, cfg.seed, cfg.tol);
    result.report = to_json(sr);
    result.exit_code = sr.report.all_passed() ? kPass : kCheckFailed;
    if (!sr.report.all_passed()) result.message = "spectral theorem checks failed";
  } catch (const PreconditionError& e) {
    result.exit_code = kHypothesisFailed;
    result.message = e.what();
    result.report = json{{"error", e.what()}, {"hypothesis", hypothesis_name(e.hypothesis())}};
  } catch (const ClusteringError& e) {
    result.exit_code = kCheckFailed;
    result.message = e.what();
    result.report = json{{"error", e.what()}};
  }
  result.report["command"] = "spectrum";
  return finish(result, cfg);
}

RunResult run_gen(const RunConfig& cfg) {
  if (auto msg = validate(cfg); !msg.empty()) return input_error(msg);
  json instance;
  if (cfg.conjugate) {
    linalg::Rng rng(cfg.seed);
    const KreinAlgebra base = build_function_algebra(cfg.points);
    const Matrix w = linalg::random_unitary(rng, base.ambient_dim());
    instance = io::matrix_algebra_instance(conjugate(base, w));
  } else {
    instance = io::function_algebra_instance(cfg.points);
  }
  std::ofstream out(*cfg.output_path, std::ios::binary);
  if (!out || !(out << io::dump(instance)))
    return input_error("cannot write instance to " + cfg.output_path->string());
  return RunResult{kPass, instance, {}};
}

RunResult run_counterexample(const RunConfig& cfg) {
  if (auto msg = validate(cfg); !msg.empty()) return input_error(msg);
  const int grid = cfg.grid;
  json cells = json::array();
  int passing_elsewhere = 0;
  bool zero_minus_passes = false;
  bool zero_plus_fails_krein = false;
  ResidualTracker pi_check("theta_pi_not_banach", kExactTol);
  json pi_witness;

  for (int k = 0; k < grid; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / grid;
    for (int sign : {1, -1}) {
      const DeformedAlgebra alg(theta, sign);
      const DeformedVerdict v = deformed_check(alg, cfg.samples, cfg.seed);
      json cell{{"index", k},
                {"theta", theta},
                {"sign", sign},
                {"is_banach", v.is_banach},
                {"is_krein", v.is_krein},
                {"regular_norm_discrepancy", v.regular_norm_discrepancy}};
      cell["witness"] = v.witness ? witness_json(*v.witness) : json();
      cells.push_back(cell);

      const bool passes = v.is_banach && v.is_krein;
      if (k == 0 && sign == -1) zero_minus_passes = passes;
      else if (passes) ++passing_elsewhere;
      if (k == 0 && sign == 1) zero_plus_fails_krein = !v.is_krein;
      if (2 * k == grid) {
        if (v.is_banach || !v.banach_witness) {
          pi_check.add(1.0);
        } else {
          const DeformedWitness& w = *v.banach_witness;
          pi_check.add(std::abs(w.lhs - 2.0 * std::numbers::sqrt2), witness_json(w));
          pi_check.add(std::abs(w.rhs - 2.0), witness_json(w));
          pi_witness = witness_json(w);
        }
      }
    }
  }

  Report report;
  Check pi = pi_check.finish();
  if (!pi_witness.is_null()) pi.witness = pi_witness;
  report.add(pi);
  report.add(Check{"unique_passing_cell", zero_minus_passes && passing_elsewhere == 0,
                   static_cast<double>(passing_elsewhere + (zero_minus_passes ? 0 : 1)),
                   std::nullopt});
  report.add(Check{"theta_zero_plus_not_krein", zero_plus_fails_krein,
                   zero_plus_fails_krein ? 0.0 : 1.0, std::nullopt});

  RunResult result;
  result.report = to_json(report);
  result.report["command"] = "counterexample";
  result.report["grid"] = grid;
  result.report["cells"] = cells;
  result.exit_code = report.all_passed() ? kPass : kCheckFailed;
  return finish(result, cfg);
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  RunResult result;
  switch (cfg.command) {
    case Command::Verify: result = run_verify(cfg); break;
    case Command::Spectrum: result = run_spectrum(cfg); break;
    case Command::Gen: result = run_gen(cfg); break;
    case Command::Counterexample: result = run_counterexample(cfg); break;
  }
  if (result.report.contains("checks")) {
    for (const auto& c : result.report["checks"]) {
      out << (c["passed"].get<bool>() ? "PASS  " : "FAIL  ") << std::left << std::setw(28)
          << c["name"].get<std::string>() << " max_residual=";
      if (c["max_residual"].is_number()) out << std::scientific << std::setprecision(3)
                                             << c["max_residual"].get<double>();
      else out << "inf";
      out << std::defaultfloat << "\n";
    }
  }
  if (result.report.contains("spectrum_size"))
    out << "spectrum_size " << result.report["spectrum_size"] << "\n";
  if (cfg.command == Command::Gen && result.exit_code == kPass)
    out << "wrote " << cfg.output_path->string() << "\n";
  if (!result.message.empty()) err << result.message << "\n";
  return result.exit_code;
}

}  // namespace krein::cli
