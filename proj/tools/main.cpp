// command-line front end: overlap | invariants | tomography | regime
//
// exit codes: 0 success, 2 configuration error, 3 numerical failure

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ising2q/commands.hpp"
#include "ising2q/errors.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
  bool echo = false;
};

void add_common(CLI::App* sub, CommonArgs& args) {
  sub->add_option("--config", args.config_path, "run configuration (JSON)")
      ->required();
  sub->add_option("--out", args.out_path,
                  "output file (optional if the config names one)");
  sub->add_option("--seed", args.seed, "optimizer seed (overrides config)")
      ->each([&args](const std::string&) { args.seed_set = true; });
  sub->add_flag("--echo", args.echo, "force rotary echo on");
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ising2q::ConfigError(path + ": cannot open output file");
  return out;
}

// sidecar next to the main output: data.csv -> data.windows.json
std::string sidecar_path(const std::string& out_path) {
  const auto slash = out_path.find_last_of('/');
  const auto dot = out_path.find_last_of('.');
  const bool has_ext = dot != std::string::npos &&
                       (slash == std::string::npos || dot > slash);
  return (has_ext ? out_path.substr(0, dot) : out_path) + ".windows.json";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simulation and characterization of two driven Ising-coupled qubits"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string target, source;

  CLI::App* overlap = app.add_subcommand(
      "overlap", "analytic vs numeric propagator overlap sweep (CSV)");
  add_common(overlap, args);

  CLI::App* invariants = app.add_subcommand(
      "invariants",
      "local invariants and entangling power sweep (CSV + window sidecar)");
  add_common(invariants, args);

  CLI::App* tomography = app.add_subcommand(
      "tomography", "process matrix and local-equivalence fidelity (JSON)");
  add_common(tomography, args);
  tomography->add_option("--target", target,
                         "target gate (IDENTITY, CNOT, CPHASE, ISWAP, SWAP)");
  tomography->add_option("--source", source, "gate source: analytic | numeric")
      ->check(CLI::IsMember({"analytic", "numeric"}));

  CLI::App* regime = app.add_subcommand(
      "regime", "averaging-assumption margins and regime classification (JSON)");
  add_common(regime, args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ising2q::RunConfig cfg = ising2q::load_config(args.config_path);
    if (args.echo) cfg.echo = true;
    if (args.seed_set) cfg.seed = args.seed;
    if (!target.empty()) cfg.target_gate = target;
    if (!source.empty()) cfg.tomography_source = source;

    const std::string out_path =
        !args.out_path.empty() ? args.out_path : cfg.output_path;
    if (out_path.empty())
      throw ising2q::ConfigError(
          "no output path: pass --out or set output.path in the config");

    std::ofstream out = open_out(out_path);
    if (app.got_subcommand(overlap)) {
      ising2q::cmd_overlap(cfg, out);
    } else if (app.got_subcommand(invariants)) {
      std::ofstream sidecar = open_out(sidecar_path(out_path));
      ising2q::cmd_invariants(cfg, out, sidecar);
    } else if (app.got_subcommand(tomography)) {
      ising2q::cmd_tomography(cfg, out);
    } else if (app.got_subcommand(regime)) {
      ising2q::cmd_regime(cfg, out);
    }
  } catch (const ising2q::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const ising2q::InvalidParams& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
