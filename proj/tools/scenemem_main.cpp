// Command-line surface for the scene-memory engine: replay demonstration
// logs, classify observations against a saved memory, export graphs, and
// convert position captures into fact logs.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "scenemem/config.hpp"
#include "scenemem/errors.hpp"
#include "scenemem/ingest.hpp"
#include "scenemem/logio.hpp"
#include "scenemem/memory_ops.hpp"
#include "scenemem/replay.hpp"
#include "scenemem/serialize.hpp"

namespace {

using nlohmann::json;
using namespace scenemem;

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw InputError("cannot write file: " + path);
  }
  out << content;
}

std::vector<Observation> load_observations(const std::string& log_path,
                                           bool positions,
                                           const EngineConfig& config) {
  if (!positions) {
    return read_observation_log_file(log_path);
  }
  if (config.connection_role.empty()) {
    throw InputError(
        "position mode needs a symmetric connection role; set "
        "ingest.connection_role in the config");
  }
  std::vector<Observation> observations;
  for (const auto& frame : read_position_log_file(log_path)) {
    observations.push_back(ingest_positions(config.signature, frame,
                                            config.d_max,
                                            config.connection_role));
  }
  return observations;
}

int run_replay(const std::string& log_path, const std::string& config_path,
               bool positions, const std::string& memory_out,
               const std::string& report_out, bool continue_on_error) {
  const EngineConfig config = load_config(config_path);
  const auto observations = load_observations(log_path, positions, config);

  ReplayOptions options;
  options.continue_on_error = continue_on_error;
  ReplayResult result =
      replay(config.signature, observations, config.params, options);

  if (!memory_out.empty()) {
    write_output(memory_out, save_memory(result.memory));
  }
  if (!report_out.empty()) {
    write_output(report_out, report_to_json(result.report));
  }
  std::cout << report_summary(result.report, result.memory);
  return 0;
}

int run_classify(const std::string& log_path, const std::string& config_path,
                 const std::string& memory_path, bool positions,
                 const std::string& listing_out, bool retrieve_learns) {
  EngineConfig config = load_config(config_path);
  if (retrieve_learns) config.params.retrieve_learns = true;
  const auto observations = load_observations(log_path, positions, config);
  MemoryGraph memory = load_memory_file(memory_path);

  json listing = json::array();
  for (const auto& obs : observations) {
    // Retrieval semantics on a scratch copy: scores and any learned
    // category are reported but never persisted.
    StoreOutcome outcome = retrieve(config.signature, memory, obs, config.params);

    std::cout << "scene " << outcome.classification.scene_id << ": ";
    if (!outcome.classification.classified()) {
      std::cout << "not classified\n";
    } else {
      std::cout << "classified (" << outcome.classification.entries.size()
                << " categories)\n";
      for (const auto& [id, entry] : outcome.classification.entries) {
        std::cout << "  " << id << "  degree=" << entry.degree.value()
                  << "  similarity=" << entry.similarity << "\n";
      }
    }
    if (outcome.learned_id) {
      std::cout << "  would learn: " << *outcome.learned_id << "\n";
    }

    json entry;
    entry["scene"] = outcome.classification.scene_id;
    entry["classified"] = outcome.classification.classified();
    json entries = json::array();
    for (const auto& [id, e] : outcome.classification.entries) {
      entries.push_back({{"id", id},
                         {"degree", e.degree.value()},
                         {"similarity", e.similarity}});
    }
    entry["entries"] = std::move(entries);
    entry["learned"] = outcome.learned_id ? json(*outcome.learned_id) : json(nullptr);
    json reinforced = json::array();
    for (const auto& [id, delta] : outcome.reinforced) {
      reinforced.push_back({{"id", id}, {"delta", delta}});
    }
    entry["reinforced"] = std::move(reinforced);
    listing.push_back(std::move(entry));
  }

  if (!listing_out.empty()) {
    write_output(listing_out, listing.dump(2) + "\n");
  }
  return 0;
}

int run_export(const std::string& memory_path, const std::string& format,
               const std::string& out_path) {
  MemoryGraph memory = load_memory_file(memory_path);
  std::string rendered;
  if (format == "dot") {
    rendered = export_dot(memory);
  } else if (format == "json") {
    rendered = save_memory(memory);
  } else {
    throw InputError("unknown export format: " + format);
  }
  write_output(out_path, rendered);
  return 0;
}

int run_ingest(const std::string& log_path, const std::string& config_path,
               const std::string& out_path) {
  const EngineConfig config = load_config(config_path);
  if (config.connection_role.empty()) {
    throw InputError(
        "ingest needs a symmetric connection role; set "
        "ingest.connection_role in the config");
  }
  std::string lines;
  for (const auto& frame : read_position_log_file(log_path)) {
    const Observation obs = ingest_positions(config.signature, frame,
                                             config.d_max,
                                             config.connection_role);
    lines += observation_to_json_line(obs);
    lines += "\n";
  }
  write_output(out_path, lines);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuzzy scene-memory engine"};
  app.require_subcommand(1);

  std::string log_path;
  std::string config_path;
  std::string memory_path;
  std::string out_path = "-";
  std::string format = "dot";
  bool positions = false;
  bool continue_on_error = false;
  bool retrieve_learns = false;

  auto* replay_cmd =
      app.add_subcommand("replay", "store a demonstration log into a memory");
  replay_cmd->add_option("--log", log_path, "observation or position log (JSONL)")
      ->required();
  replay_cmd->add_option("--config", config_path, "engine config file")->required();
  replay_cmd->add_flag("--positions", positions,
                       "treat the log as position frames");
  replay_cmd->add_option("--memory", memory_path, "where to save the final memory");
  replay_cmd->add_option("--out", out_path, "where to write the JSON report");
  replay_cmd->add_flag("--continue-on-error", continue_on_error,
                       "skip malformed scenes instead of aborting");

  auto* classify_cmd = app.add_subcommand(
      "classify", "classify observations against a saved memory");
  classify_cmd->add_option("--log", log_path, "observation or position log (JSONL)")
      ->required();
  classify_cmd->add_option("--config", config_path, "engine config file")->required();
  classify_cmd->add_option("--memory", memory_path, "saved memory file")->required();
  classify_cmd->add_flag("--positions", positions,
                         "treat the log as position frames");
  classify_cmd->add_option("--out", out_path, "where to write the JSON listing");
  classify_cmd->add_flag("--retrieve-learns", retrieve_learns,
                         "let retrieval learn categories (reported only)");

  auto* export_cmd = app.add_subcommand("export", "render a saved memory");
  export_cmd->add_option("--memory", memory_path, "saved memory file")->required();
  export_cmd->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  export_cmd->add_option("--out", out_path, "output path ('-' for stdout)");

  auto* ingest_cmd =
      app.add_subcommand("ingest", "convert position frames into a facts log");
  ingest_cmd->add_option("--log", log_path, "position log (JSONL)")->required();
  ingest_cmd->add_option("--config", config_path, "engine config file")->required();
  ingest_cmd->add_option("--out", out_path, "output path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(replay_cmd)) {
      std::string report_out = replay_cmd->count("--out") ? out_path : "";
      return run_replay(log_path, config_path, positions, memory_path,
                        report_out, continue_on_error);
    }
    if (app.got_subcommand(classify_cmd)) {
      std::string listing_out = classify_cmd->count("--out") ? out_path : "";
      return run_classify(log_path, config_path, memory_path, positions,
                          listing_out, retrieve_learns);
    }
    if (app.got_subcommand(export_cmd)) {
      return run_export(memory_path, format, out_path);
    }
    if (app.got_subcommand(ingest_cmd)) {
      return run_ingest(log_path, config_path, out_path);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
