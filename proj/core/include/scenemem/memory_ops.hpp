#pragma once
// Store/retrieve with score reinforcement, plus the periodic
// consolidate/forget pass (weighting, normalisation, restructuring).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scenemem/memory_graph.hpp"
#include "scenemem/signature.hpp"

namespace scenemem {

// Thresholds and constants driving storing and consolidation.
struct MemoryParams {
  // Score given to a category learned from an unclassified scene. When the
  // scene is classified but poorly represented, the learned score is this
  // value times the best score among the classified categories.
  double initial_score = 0.5;
  // Shoulder width of newly learned restrictions.
  double fuzziness = 0.4;
  // A classified category represents the scene only when its degree and
  // similarity reach both learning thresholds; otherwise a new category may
  // still be learned.
  double learn_degree_threshold = 0.9;
  double learn_similarity_threshold = 0.8;
  // A classified category is reinforced by its degree when degree and
  // similarity strictly exceed both reinforcement thresholds.
  double reinforce_degree_threshold = 0.9;
  double reinforce_similarity_threshold = 0.2;
  // Multiplier applied to every score before normalisation.
  double score_weight = 10.0;
  // Normalised score below which a category is forgotten.
  double forget_threshold = 0.1;
  // Stored scenes between consolidate/forget passes.
  int consolidation_period = 5;
  // Whether retrieval may learn new categories.
  bool retrieve_learns = false;

  void validate() const;
};

struct StoreOutcome {
  MemoryGraph memory;
  ClassificationResult classification;
  std::optional<std::string> learned_id;               // set iff a node was added
  std::vector<std::pair<std::string, double>> reinforced;  // id, score delta
};

// Encodes and classifies one observation, learns a new category unless some
// existing one represents the scene with both high degree and high
// similarity, then reinforces every well-matching category by its degree.
// An observation that encodes to an empty scene never learns.
StoreOutcome store(const Signature& sig, MemoryGraph memory,
                   const Observation& obs, const MemoryParams& params);

// Same as store, except learning happens only when params.retrieve_learns is
// set; classification and reinforcement always apply.
StoreOutcome retrieve(const Signature& sig, MemoryGraph memory,
                      const Observation& obs, const MemoryParams& params);

struct ConsolidationOutcome {
  MemoryGraph memory;
  std::vector<std::string> forgotten;
};

// Weights every non-root score, normalises by the maximum, forgets
// categories whose normalised score falls below the threshold, and
// restructures the graph only when something was forgotten. The root is
// never scored, normalised, or forgotten.
ConsolidationOutcome consolidate_forget(MemoryGraph memory,
                                        const MemoryParams& params);

}  // namespace scenemem
