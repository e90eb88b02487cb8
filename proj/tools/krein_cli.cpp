#include <iostream>

#include <CLI11.hpp>

#include "krein/cli.hpp"

int main(int argc, char** argv) {
  using krein::cli::Command;
  krein::cli::RunConfig cfg;
  std::string input;
  std::string report;
  std::string out_file;

  CLI::App app{"Finite Krein C*-algebras: axiom checks, spectrum and Gelfand transform"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Check every structural axiom of an instance");
  verify->add_option("--input", input, "Instance file")->required();
  verify->add_option("--tol", cfg.tol, "Residual tolerance")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "Sampling seed")->capture_default_str();
  verify->add_option("--samples", cfg.samples, "Random samples per check")->capture_default_str();
  verify->add_option("--report", report, "Write the JSON report here");

  auto* spectrum = app.add_subcommand("spectrum", "Compute the spectrum and verify the transform");
  spectrum->add_option("--input", input, "Instance file")->required();
  spectrum->add_option("--tol", cfg.tol, "Residual tolerance")->capture_default_str();
  spectrum->add_option("--seed", cfg.seed, "Sampling seed")->capture_default_str();
  spectrum->add_option("--samples", cfg.samples, "Random samples")->capture_default_str();
  spectrum->add_option("--report", report, "Write the JSON report here");

  auto* gen = app.add_subcommand("gen", "Write a seeded random instance");
  gen->add_option("--points", cfg.points, "Number of points |X|")->required();
  gen->add_flag("--conjugate", cfg.conjugate, "Conjugate by a random unitary");
  gen->add_option("--seed", cfg.seed, "Generator seed")->required();
  gen->add_option("--out", out_file, "Instance file to write")->required();

  auto* counter = app.add_subcommand("counterexample", "Sweep the deformed rank-one family");
  counter->add_option("--grid", cfg.grid, "Number of theta grid points")->capture_default_str();
  counter->add_option("--seed", cfg.seed, "Sampling seed")->capture_default_str();
  counter->add_option("--samples", cfg.samples, "Random samples per cell")->capture_default_str();
  counter->add_option("--report", report, "Write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return krein::cli::kInputError;
  }

  if (verify->parsed()) cfg.command = Command::Verify;
  else if (spectrum->parsed()) cfg.command = Command::Spectrum;
  else if (gen->parsed()) cfg.command = Command::Gen;
  else cfg.command = Command::Counterexample;

  if (!input.empty()) cfg.input_path = input;
  if (!report.empty()) cfg.output_path = report;
  if (!out_file.empty()) cfg.output_path = out_file;

  if (auto msg = krein::cli::validate(cfg); !msg.empty()) {
    std::cerr << msg << "\n";
    return krein::cli::kInputError;
  }
  return krein::cli::run(cfg, std::cout, std::cerr);
}
