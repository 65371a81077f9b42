#include "scenemem/replay.hpp"

#include <chrono>
#include <sstream>

#include <nlohmann/json.hpp>

#include "scenemem/errors.hpp"

namespace scenemem {

namespace {

using nlohmann::json;

json step_to_json(const StepRecord& step) {
  json j;
  j["scene"] = step.scene_id;
  j["t"] = step.timestamp;
  json classified = json::array();
  for (const auto& entry : step.classified) {
    classified.push_back({{"id", entry.id},
                          {"degree", entry.degree},
                          {"similarity", entry.similarity}});
  }
  j["classified"] = std::move(classified);
  j["learned"] = step.learned_id ? json(*step.learned_id) : json(nullptr);
  json reinforced = json::array();
  for (const auto& [id, delta] : step.reinforced) {
    reinforced.push_back({{"id", id}, {"delta", delta}});
  }
  j["reinforced"] = std::move(reinforced);
  if (step.consolidated) {
    j["consolidation"] = {{"forgotten", step.forgotten}};
  }
  j["nodes"] = step.node_count;
  j["latency_ms"] = step.latency_ms;
  if (step.error) j["error"] = *step.error;
  return j;
}

}  // namespace

ReplayResult replay(const Signature& sig, std::span<const Observation> log,
                    const MemoryParams& params, const ReplayOptions& options) {
  if (log.empty()) {
    throw InputError("demonstration log is empty");
  }
  params.validate();

  MemoryGraph memory;
  RunReport report;
  std::size_t stored = 0;
  bool first = true;
  std::int64_t last_timestamp = 0;

  for (const Observation& obs : log) {
    if (!first && obs.timestamp <= last_timestamp) {
      throw InputError("log timestamps must be strictly increasing (t=" +
                       std::to_string(obs.timestamp) + ")");
    }
    first = false;
    last_timestamp = obs.timestamp;

    StepRecord step;
    step.timestamp = obs.timestamp;
    step.scene_id = std::to_string(obs.timestamp);

    const auto started = std::chrono::steady_clock::now();
    try {
      StoreOutcome outcome = store(sig, memory, obs, params);
      memory = std::move(outcome.memory);
      ++stored;

      for (const auto& [id, entry] : outcome.classification.entries) {
        step.classified.push_back({id, entry.degree.value(), entry.similarity});
        if (entry.similarity > 1.0) ++report.similarity_over_one;
      }
      step.learned_id = std::move(outcome.learned_id);
      step.reinforced = std::move(outcome.reinforced);

      if (stored % static_cast<std::size_t>(params.consolidation_period) == 0) {
        ConsolidationOutcome consolidated =
            consolidate_forget(std::move(memory), params);
        memory = std::move(consolidated.memory);
        step.consolidated = true;
        step.forgotten = std::move(consolidated.forgotten);
      }
    } catch (const InputError& e) {
      if (!options.continue_on_error) {
        throw InputError("scene " + step.scene_id + ": " + e.what());
      }
      step.error = e.what();
    }
    const auto finished = std::chrono::steady_clock::now();
    step.latency_ms =
        std::chrono::duration<double, std::milli>(finished - started).count();
    step.node_count = memory.size();

    report.total_ms += step.latency_ms;
    report.max_step_ms = std::max(report.max_step_ms, step.latency_ms);
    report.steps.push_back(std::move(step));
  }

  report.scenes_stored = stored;
  report.final_node_count = memory.size();
  return {std::move(memory), std::move(report)};
}

std::string report_to_json(const RunReport& report) {
  json doc;
  json steps = json::array();
  for (const auto& step : report.steps) steps.push_back(step_to_json(step));
  doc["steps"] = std::move(steps);
  doc["summary"] = {{"scenes", report.steps.size()},
                    {"stored", report.scenes_stored},
                    {"final_nodes", report.final_node_count},
                    {"similarity_over_one", report.similarity_over_one},
                    {"total_ms", report.total_ms},
                    {"max_step_ms", report.max_step_ms}};
  return doc.dump(2) + "\n";
}

std::string report_summary(const RunReport& report, const MemoryGraph& memory) {
  std::size_t learned = 0;
  std::size_t forgotten = 0;
  std::size_t reinforcements = 0;
  std::size_t skipped = 0;
  for (const auto& step : report.steps) {
    if (step.learned_id) ++learned;
    forgotten += step.forgotten.size();
    reinforcements += step.reinforced.size();
    if (step.error) ++skipped;
  }

  std::ostringstream out;
  out << "replayed " << report.steps.size() << " scenes (" << report.scenes_stored
      << " stored";
  if (skipped > 0) out << ", " << skipped << " skipped";
  out << "), final memory: " << report.final_node_count << " nodes\n";
  out << "learned " << learned << " categories, forgot " << forgotten
      << ", reinforcements: " << reinforcements << "\n";
  out << "similarity > 1 observed " << report.similarity_over_one << " times\n";
  out << "total " << report.total_ms << " ms (max step " << report.max_step_ms
      << " ms)\n";
  out << "final categories:\n";
  for (const auto& [id, cat] : memory.categories()) {
    if (cat.is_root()) continue;
    out << "  " << id << "  q=" << cat.score;
    for (const auto& [rr, shoulder] : cat.restrictions) {
      out << "  " << rr.display() << ">=" << shoulder.k();
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace scenemem
