#pragma once
// Demonstration replay: stores observations in order, consolidates on a
// fixed cadence, and reports every step.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scenemem/memory_ops.hpp"

namespace scenemem {

struct ReportClassEntry {
  std::string id;
  double degree = 0.0;
  double similarity = 0.0;
};

// What happened at one stored scene.
struct StepRecord {
  std::string scene_id;
  std::int64_t timestamp = 0;
  std::vector<ReportClassEntry> classified;
  std::optional<std::string> learned_id;
  std::vector<std::pair<std::string, double>> reinforced;
  bool consolidated = false;
  std::vector<std::string> forgotten;
  std::size_t node_count = 0;  // including the root, after the step
  double latency_ms = 0.0;
  std::optional<std::string> error;  // set when the scene was skipped
};

struct RunReport {
  std::vector<StepRecord> steps;
  std::size_t scenes_stored = 0;
  std::size_t similarity_over_one = 0;
  double total_ms = 0.0;
  double max_step_ms = 0.0;
  std::size_t final_node_count = 0;
};

struct ReplayOptions {
  // Record per-scene input errors and keep going instead of aborting.
  bool continue_on_error = false;
};

struct ReplayResult {
  MemoryGraph memory;
  RunReport report;
};

// Deterministic up to the recorded latencies: the same log, parameters and
// signature always produce the same final graph and report content.
ReplayResult replay(const Signature& sig, std::span<const Observation> log,
                    const MemoryParams& params, const ReplayOptions& options = {});

std::string report_to_json(const RunReport& report);
std::string report_summary(const RunReport& report, const MemoryGraph& memory);

}  // namespace scenemem
