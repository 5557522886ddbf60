#include "cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"

#include "cohwit/activation.hpp"
#include "cohwit/demo.hpp"
#include "cohwit/detection.hpp"
#include "cohwit/io.hpp"

namespace cohwit {

namespace {

using nlohmann::ordered_json;

// Semantically invalid input that parsed fine (e.g. a witness file that is
// well-formed but unusable for the requested operation).
struct ValidationFailure : std::runtime_error {
  explicit ValidationFailure(const std::string& what) : std::runtime_error(what) {}
};

void deliver(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw ParseError("cannot write " + out_path);
  file << text;
  file.flush();
  if (!file) throw ParseError("failed while writing " + out_path);
}

std::string dumped(const ordered_json& doc) { return doc.dump(2) + "\n"; }

NormalizedWitness require_normalized(const ParsedWitness& parsed) {
  if (std::holds_alternative<NormalizedWitness>(parsed.value))
    return std::get<NormalizedWitness>(parsed.value);
  std::optional<NormalizedWitness> n = as_normalized(std::get<Witness>(parsed.value));
  if (!n)
    throw ValidationFailure(
        "witness is not normalized (every weight pair must be a unit vector)");
  return *n;
}

std::string run_coherence(const std::string& state_path) {
  ordered_json doc;
  doc["c_l1"] = l1_coherence(load_state(state_path));
  return dumped(doc);
}

std::string run_witness(const std::string& state_path, const std::string& mode, double tol) {
  DensityMatrix state = load_state(state_path);
  ordered_json doc;
  doc["dim"] = state.dim();
  doc["mode"] = mode;

  if (mode == "construct") {
    Witness w = construct_for_state(state, tol);
    ordered_json entries = ordered_json::array();
    for (auto [j, k] : index_pairs(w.dim)) {
      const Eigen::Vector2d& v = w.pair(j, k);
      if (v.norm() == 0.0) continue;
      ordered_json entry;
      entry["j"] = j;
      entry["k"] = k;
      entry["theta"] = wrap_angle(std::atan2(v(1), v(0)));
      entries.push_back(std::move(entry));
    }
    doc["orientations"] = std::move(entries);  // nonzero pairs only; matrix is authoritative
    doc["matrix"] = complex_matrix_json(w.matrix());
  } else {
    NormalizedWitness w = optimal_witness(state);
    doc["c_w"] = mean_value(w, state);
    doc["phase_consistent"] = phase_consistent(w);
    doc["orientations"] = orientation_entries(w);
    doc["matrix"] = complex_matrix_json(w.matrix());
  }
  return dumped(doc);
}

ordered_json permutation_json(const std::vector<int>& perm) {
  return ordered_json(perm.empty() ? ordered_json::array() : ordered_json(perm));
}

std::string run_activate(const std::string& witness_path, const std::string& state_path,
                         const OptimizerConfig& config, std::ostream& err) {
  ParsedWitness parsed = load_witness(witness_path);
  for (const std::string& warning : parsed.warnings) err << "warning: " << warning << '\n';
  NormalizedWitness w = require_normalized(parsed);
  DensityMatrix state = load_state(state_path);
  ActivationResult r = maximize_mean(w, state, config);

  ordered_json doc;
  doc["dim"] = state.dim();
  doc["best_mean"] = r.best_mean;
  doc["coherence"] = r.coherence;
  doc["gap"] = r.gap;
  doc["matching"] = r.matching.holds;
  doc["matching_permutation"] =
      r.matching.holds ? permutation_json(r.matching.permutation) : ordered_json(nullptr);
  doc["permutation"] = permutation_json(r.permutation);
  doc["phases"] = r.phases;
  doc["converged"] = r.converged;
  doc["sweeps"] = r.sweeps;
  return dumped(doc);
}

std::string run_figure1(int samples, const OptimizerConfig& config) {
  NormalizedWitness w = demo::fixed_witness_normalized();
  std::ostringstream csv;
  csv << "theta,witnessed_coherence,max_mean_value\n";
  for (int i = 0; i < samples; ++i) {
    double theta = (std::numbers::pi / 2.0) * i / (samples - 1);
    DensityMatrix state = demo::sweep_state(theta);
    ActivationResult r = maximize_mean(w, state, config);
    csv << format_double(theta) << ',' << format_double(demo::sweep_coherence(theta)) << ','
        << format_double(r.best_mean) << '\n';
  }
  return csv.str();
}

std::string run_detect(const std::string& state_path, double tol) {
  DetectionTranscript transcript = detect(load_state(state_path), tol);
  std::ostringstream lines;
  int step = 0;
  for (const WitnessReading& reading : transcript.readings) {
    ordered_json record;
    record["step"] = ++step;
    record["family"] = reading.antisymmetric ? "anti" : "sym";
    record["j"] = reading.j;
    record["k"] = reading.k;
    record["mean"] = reading.mean;
    lines << record.dump() << '\n';
  }
  ordered_json verdict;
  verdict["verdict"] = to_string(transcript.verdict);
  verdict["readings"] = transcript.count();
  verdict["tol"] = tol;
  lines << verdict.dump() << '\n';
  return lines.str();
}

std::string run_game(const std::string& witness_path, const std::string& state_path,
                     const OptimizerConfig& config, std::ostream& err) {
  ParsedWitness parsed = load_witness(witness_path);
  for (const std::string& warning : parsed.warnings) err << "warning: " << warning << '\n';
  Witness w = parsed.witness();
  DensityMatrix state = load_state(state_path);
  GameResult r = best_game_strategy(w, state, config);

  ordered_json doc;
  doc["dim"] = state.dim();
  doc["payoff"] = r.payoff;
  doc["permutation"] = permutation_json(r.permutation);
  doc["phases"] = r.phases;
  doc["converged"] = r.converged;
  doc["sweeps"] = r.sweeps;
  return dumped(doc);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"stringent coherence witnesses: construction, bounds, detection, activation"};
  app.require_subcommand(1);

  std::string state_path, witness_path, out_path;
  std::string mode, format;
  std::uint64_t seed = 0;

  std::function<std::string()> action;

  auto* coherence = app.add_subcommand("coherence", "l1-norm of coherence of a state");
  coherence->add_option("--state", state_path, "state JSON file")->required();
  coherence->add_option("--out", out_path, "output path (default: standard output)");
  coherence->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json"}))
      ->default_val("json");
  coherence->callback([&] { action = [&] { return run_coherence(state_path); }; });

  auto* witness = app.add_subcommand("witness", "construct a witness for a state");
  double witness_tol = kIncoherenceTol;
  witness->add_option("--state", state_path, "state JSON file")->required();
  witness->add_option("--mode", mode, "construct: single-component witness; optimal: aligned witness")
      ->required()
      ->check(CLI::IsMember({"construct", "optimal"}));
  witness->add_option("--tol", witness_tol, "coherence threshold for construct mode")
      ->check(CLI::PositiveNumber);
  witness->add_option("--out", out_path, "output path (default: standard output)");
  witness->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json"}))
      ->default_val("json");
  witness->callback([&] { action = [&] { return run_witness(state_path, mode, witness_tol); }; });

  auto* activate = app.add_subcommand(
      "activate", "maximize a normalized witness's mean value over incoherent unitaries");
  OptimizerConfig activate_config;
  activate->add_option("--witness", witness_path, "witness JSON file")->required();
  activate->add_option("--state", state_path, "state JSON file")->required();
  activate->add_option("--tol", activate_config.tol, "ascent convergence tolerance")
      ->check(CLI::PositiveNumber);
  activate->add_option("--grid", activate_config.grid_points,
                       "phase-grid seeding resolution, 0 disables (dim <= 3 only)")
      ->check(CLI::NonNegativeNumber);
  activate->add_option("--seed", seed, "seed for the random ascent starts");
  activate->add_option("--out", out_path, "output path (default: standard output)");
  activate->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json"}))
      ->default_val("json");
  activate->callback([&] {
    action = [&] {
      activate_config.seed = seed;
      return run_activate(witness_path, state_path, activate_config, err);
    };
  });

  auto* figure1 = app.add_subcommand(
      "figure1", "sweep the bundled three-level instance: coherence vs best activated mean");
  OptimizerConfig figure_config;
  figure_config.grid_points = 4096;
  int samples = 101;
  figure1->add_option("--samples", samples, "number of sweep rows over [0, pi/2]")
      ->check(CLI::Range(2, 100000000));
  figure1->add_option("--tol", figure_config.tol, "ascent convergence tolerance")
      ->check(CLI::PositiveNumber);
  figure1->add_option("--grid", figure_config.grid_points,
                      "phase-grid seeding resolution, 0 disables")
      ->check(CLI::NonNegativeNumber);
  figure1->add_option("--seed", seed, "seed for the random ascent starts");
  figure1->add_option("--out", out_path, "output path (default: standard output)");
  figure1->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv"}))
      ->default_val("csv");
  figure1->callback([&] {
    action = [&] {
      figure_config.seed = seed;
      return run_figure1(samples, figure_config);
    };
  });

  auto* detect_cmd = app.add_subcommand("detect", "sequential single-generator detection protocol");
  double detect_tol = kIncoherenceTol;
  detect_cmd->add_option("--state", state_path, "state JSON file")->required();
  detect_cmd->add_option("--tol", detect_tol, "detection threshold on |mean|")
      ->check(CLI::PositiveNumber);
  detect_cmd->add_option("--out", out_path, "output path (default: standard output)");
  detect_cmd->add_option("--format", format, "output format (JSON lines)")
      ->check(CLI::IsMember({"json"}))
      ->default_val("json");
  detect_cmd->callback([&] { action = [&] { return run_detect(state_path, detect_tol); }; });

  auto* game = app.add_subcommand(
      "game", "best incoherent-unitary reply to a fixed witness, and its payoff");
  OptimizerConfig game_config;
  game->add_option("--witness", witness_path, "witness JSON file")->required();
  game->add_option("--state", state_path, "state JSON file")->required();
  game->add_option("--tol", game_config.tol, "ascent convergence tolerance")
      ->check(CLI::PositiveNumber);
  game->add_option("--grid", game_config.grid_points,
                   "phase-grid seeding resolution, 0 disables (dim <= 3 only)")
      ->check(CLI::NonNegativeNumber);
  game->add_option("--seed", seed, "seed for the random ascent starts");
  game->add_option("--out", out_path, "output path (default: standard output)");
  game->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json"}))
      ->default_val("json");
  game->callback([&] {
    action = [&] {
      game_config.seed = seed;
      return run_game(witness_path, state_path, game_config, err);
    };
  });

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("cohwit");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_storage.size());
  for (const std::string& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    deliver(action(), out_path, out);
    return 0;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const StateValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const WitnessFormError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const ValidationFailure& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const IncoherentStateError& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace cohwit
