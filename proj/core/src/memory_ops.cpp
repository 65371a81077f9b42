#include "scenemem/memory_ops.hpp"

#include <algorithm>

#include "scenemem/errors.hpp"

namespace scenemem {

void MemoryParams::validate() const {
  auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!(initial_score >= 0.0)) throw InputError("initial_score must be >= 0");
  if (!in_unit(fuzziness)) throw InputError("fuzziness must be in [0,1]");
  if (!in_unit(learn_degree_threshold)) {
    throw InputError("learn_degree_threshold must be in [0,1]");
  }
  if (!in_unit(learn_similarity_threshold)) {
    throw InputError("learn_similarity_threshold must be in [0,1]");
  }
  if (!in_unit(reinforce_degree_threshold)) {
    throw InputError("reinforce_degree_threshold must be in [0,1]");
  }
  if (!in_unit(reinforce_similarity_threshold)) {
    throw InputError("reinforce_similarity_threshold must be in [0,1]");
  }
  if (!(score_weight > 0.0)) throw InputError("score_weight must be > 0");
  if (!in_unit(forget_threshold)) throw InputError("forget_threshold must be in [0,1]");
  if (consolidation_period < 1) throw InputError("consolidation_period must be >= 1");
}

namespace {

// Learned ids derive from the scene id, suffixed when already taken.
std::string fresh_category_id(const MemoryGraph& memory,
                              const std::string& scene_id) {
  std::string id = "cat_" + scene_id;
  for (int suffix = 2; memory.contains(id); ++suffix) {
    id = "cat_" + scene_id + "_" + std::to_string(suffix);
  }
  return id;
}

StoreOutcome store_impl(const Signature& sig, MemoryGraph memory,
                        const Observation& obs, const MemoryParams& params,
                        bool may_learn) {
  params.validate();
  const Observation normalized = normalize_observation(sig, obs);
  const EncodedScene scene = encode(sig, normalized);
  ClassificationResult classification = classify(memory, scene);

  std::optional<std::string> learned_id;
  if (may_learn && !scene.empty()) {
    if (classification.entries.empty()) {
      Category cat = learn(scene, params.initial_score, params.fuzziness,
                           fresh_category_id(memory, scene.scene_id));
      learned_id = cat.id;
      memory.add_category(std::move(cat));
    } else {
      // A category represents the scene only when its degree and similarity
      // both reach the learning thresholds; any such category blocks learning.
      const bool represented = std::any_of(
          classification.entries.begin(), classification.entries.end(),
          [&params](const auto& kv) {
            return kv.second.degree.value() >= params.learn_degree_threshold &&
                   kv.second.similarity >= params.learn_similarity_threshold;
          });
      if (!represented) {
        double best_score = 0.0;
        for (const auto& [id, entry] : classification.entries) {
          best_score = std::max(best_score, memory.category(id).score);
        }
        Category cat = learn(scene, params.initial_score * best_score,
                             params.fuzziness,
                             fresh_category_id(memory, scene.scene_id));
        learned_id = cat.id;
        memory.add_category(std::move(cat));
      }
    }
  }

  // Reinforce recurrent scenes and sub-scenes. The classification predates
  // the learning step, so a category learned above is never reinforced here.
  std::vector<std::pair<std::string, double>> reinforced;
  for (const auto& [id, entry] : classification.entries) {
    if (entry.degree.value() > params.reinforce_degree_threshold &&
        entry.similarity > params.reinforce_similarity_threshold) {
      memory.add_score(id, entry.degree.value());
      reinforced.emplace_back(id, entry.degree.value());
    }
  }

  return {std::move(memory), std::move(classification), std::move(learned_id),
          std::move(reinforced)};
}

}  // namespace

StoreOutcome store(const Signature& sig, MemoryGraph memory,
                   const Observation& obs, const MemoryParams& params) {
  return store_impl(sig, std::move(memory), obs, params, true);
}

StoreOutcome retrieve(const Signature& sig, MemoryGraph memory,
                      const Observation& obs, const MemoryParams& params) {
  return store_impl(sig, std::move(memory), obs, params, params.retrieve_learns);
}

ConsolidationOutcome consolidate_forget(MemoryGraph memory,
                                        const MemoryParams& params) {
  params.validate();

  std::vector<std::string> non_root;
  for (const auto& [id, cat] : memory.categories()) {
    if (!cat.is_root()) non_root.push_back(id);
  }
  if (non_root.empty()) return {std::move(memory), {}};

  for (const auto& id : non_root) {
    memory.set_score(id, memory.category(id).score * params.score_weight);
  }
  double max_score = 0.0;
  for (const auto& id : non_root) {
    max_score = std::max(max_score, memory.category(id).score);
  }
  // An all-zero memory stays at zero and falls to the forget check as-is.
  if (max_score > 0.0) {
    for (const auto& id : non_root) {
      memory.set_score(id, memory.category(id).score / max_score);
    }
  }

  std::vector<std::string> forgotten;
  for (const auto& id : non_root) {
    if (memory.category(id).score < params.forget_threshold) {
      forgotten.push_back(id);
    }
  }
  if (!forgotten.empty()) {
    memory.remove_categories(forgotten);
  }
  return {std::move(memory), std::move(forgotten)};
}

}  // namespace scenemem
