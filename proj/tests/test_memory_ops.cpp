#include <random>

#include "doctest.h"
#include "scenemem/errors.hpp"
#include "scenemem/memory_ops.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace scenemem;
using testsupport::observation_with_cardinalities;
using testsupport::plain_signature;

namespace {

constexpr double kTol = 1e-9;

const ReifiedRole kR1{"r1", "THING"};
const ReifiedRole kR2{"r2", "THING"};

Category category_of(std::string id, std::vector<std::pair<ReifiedRole, double>> ks,
                     double fuzziness, double score) {
  Category cat;
  cat.id = std::move(id);
  cat.score = score;
  for (const auto& [rr, k] : ks) {
    cat.restrictions.emplace(rr, LeftShoulder(k, fuzziness));
  }
  return cat;
}

MemoryParams default_params() {
  MemoryParams params;  // the documented defaults
  params.fuzziness = 0.5;
  return params;
}

}  // namespace

TEST_CASE("storing into an empty memory learns with the initial score") {
  const Signature sig = plain_signature();
  const MemoryParams params = default_params();
  const Observation obs = observation_with_cardinalities({{"r1", 2.0}}, 7);

  const StoreOutcome outcome = store(sig, MemoryGraph{}, obs, params);
  CHECK_FALSE(outcome.classification.classified());
  REQUIRE(outcome.learned_id == "cat_7");
  CHECK(outcome.memory.category("cat_7").score == 0.5);
  CHECK(outcome.memory.category("cat_7").restrictions.at(kR1).k() ==
        doctest::Approx(2.0));
  CHECK(outcome.reinforced.empty());
}

TEST_CASE("a fully represented scene reinforces instead of learning") {
  const Signature sig = plain_signature();
  const MemoryParams params = default_params();
  MemoryGraph memory;
  memory.add_category(category_of("A", {{kR1, 2.0}}, 0.5, 2.0));

  const Observation obs = observation_with_cardinalities({{"r1", 2.0}}, 8);
  const StoreOutcome outcome = store(sig, memory, obs, params);

  REQUIRE(outcome.classification.classified());
  CHECK(outcome.classification.entries.at("A").degree.value() == 1.0);
  CHECK(outcome.classification.entries.at("A").similarity ==
        doctest::Approx(1.0).epsilon(kTol));
  CHECK_FALSE(outcome.learned_id.has_value());
  REQUIRE(outcome.reinforced.size() == 1);
  CHECK(outcome.reinforced[0].first == "A");
  CHECK(outcome.reinforced[0].second == doctest::Approx(1.0));
  CHECK(outcome.memory.category("A").score == doctest::Approx(3.0));
}

TEST_CASE("a weak classification learns with the score-weighted heuristic") {
  const Signature sig = plain_signature();
  const MemoryParams params = default_params();
  MemoryGraph memory;
  memory.add_category(category_of("A", {{kR1, 3.0}}, 0.5, 2.0));
  memory.add_category(category_of("B", {{kR2, 1.0}}, 0.5, 0.4));

  // Cardinalities 2.25 / 0.65 / 7.1 give degrees 0.5 and 0.3 with
  // similarities 0.3 and 0.1 over a total of 10.
  const Observation obs = observation_with_cardinalities(
      {{"r1", 2.25}, {"r2", 0.65}, {"r3", 7.1}}, 9);
  const StoreOutcome outcome = store(sig, memory, obs, params);

  REQUIRE(outcome.classification.entries.size() == 2);
  CHECK(outcome.classification.entries.at("A").degree.value() ==
        doctest::Approx(0.5).epsilon(kTol));
  CHECK(outcome.classification.entries.at("B").degree.value() ==
        doctest::Approx(0.3).epsilon(kTol));
  CHECK(outcome.classification.entries.at("A").similarity ==
        doctest::Approx(0.3).epsilon(kTol));
  CHECK(outcome.classification.entries.at("B").similarity ==
        doctest::Approx(0.1).epsilon(kTol));

  REQUIRE(outcome.learned_id == "cat_9");
  CHECK(outcome.memory.category("cat_9").score == doctest::Approx(1.0));
  CHECK(outcome.reinforced.empty());
  CHECK(outcome.memory.category("A").score == 2.0);
  CHECK(outcome.memory.category("B").score == 0.4);
}

TEST_CASE("one represented category blocks learning even among weak ones") {
  const Signature sig = plain_signature();
  const MemoryParams params = default_params();
  MemoryGraph memory;
  memory.add_category(category_of("weak", {{kR1, 2.6}}, 0.5, 0.4));
  memory.add_category(category_of("fit", {{kR1, 2.0}}, 0.5, 1.0));

  // Scene {r1: 2}: "weak" is fuzzily satisfied (degree ~0.54) but "fit"
  // matches with degree 1 and similarity 1, which blocks learning.
  const Observation obs = observation_with_cardinalities({{"r1", 2.0}}, 10);
  const StoreOutcome outcome = store(sig, memory, obs, params);
  REQUIRE(outcome.classification.entries.size() == 2);
  CHECK(outcome.classification.entries.at("weak").degree.value() ==
        doctest::Approx((2.0 - 1.3) / 1.3).epsilon(kTol));
  CHECK_FALSE(outcome.learned_id.has_value());
  REQUIRE(outcome.reinforced.size() == 1);
  CHECK(outcome.reinforced[0].first == "fit");
}

TEST_CASE("empty scenes never learn") {
  const Signature sig = plain_signature();
  const MemoryParams params = default_params();
  Observation empty;
  empty.timestamp = 3;

  SUBCASE("with an empty memory") {
    const StoreOutcome outcome = store(sig, MemoryGraph{}, empty, params);
    CHECK_FALSE(outcome.classification.classified());
    CHECK_FALSE(outcome.learned_id.has_value());
    CHECK(outcome.memory.size() == 1);
  }
  SUBCASE("with a populated memory") {
    MemoryGraph memory;
    memory.add_category(category_of("A", {{kR1, 2.0}}, 0.5, 2.0));
    const StoreOutcome outcome = store(sig, memory, empty, params);
    CHECK_FALSE(outcome.classification.classified());
    CHECK_FALSE(outcome.learned_id.has_value());
    CHECK(outcome.memory.size() == 2);
  }
}

TEST_CASE("retrieve learns only when allowed") {
  const Signature sig = plain_signature();
  MemoryParams params = default_params();
  const Observation obs = observation_with_cardinalities({{"r1", 2.0}}, 4);

  SUBCASE("disabled") {
    params.retrieve_learns = false;
    const StoreOutcome outcome = retrieve(sig, MemoryGraph{}, obs, params);
    CHECK_FALSE(outcome.classification.classified());
    CHECK_FALSE(outcome.learned_id.has_value());
    CHECK(outcome.memory.size() == 1);
  }
  SUBCASE("enabled it behaves exactly like store") {
    params.retrieve_learns = true;
    const StoreOutcome via_retrieve = retrieve(sig, MemoryGraph{}, obs, params);
    const StoreOutcome via_store = store(sig, MemoryGraph{}, obs, params);
    CHECK(via_retrieve.learned_id == via_store.learned_id);
    CHECK(via_retrieve.memory.categories().size() ==
          via_store.memory.categories().size());
  }
  SUBCASE("reinforcement applies regardless") {
    params.retrieve_learns = false;
    MemoryGraph memory;
    memory.add_category(category_of("A", {{kR1, 2.0}}, 0.5, 2.0));
    const StoreOutcome outcome = retrieve(sig, memory, obs, params);
    CHECK(outcome.memory.category("A").score == doctest::Approx(3.0));
  }
}

TEST_CASE("consolidation weights, normalises and forgets") {
  MemoryParams params = default_params();
  params.score_weight = 10.0;
  params.forget_threshold = 0.1;

  SUBCASE("weak category forgotten") {
    MemoryGraph memory;
    memory.add_category(category_of("A", {{kR1, 1.0}}, 0.5, 2.0));
    memory.add_category(category_of("B", {{kR2, 1.0}}, 0.5, 0.1));
    const ConsolidationOutcome outcome = consolidate_forget(memory, params);
    CHECK(outcome.forgotten == std::vector<std::string>{"B"});
    CHECK_FALSE(outcome.memory.contains("B"));
    CHECK(outcome.memory.category("A").score == doctest::Approx(1.0));
  }
  SUBCASE("a single category self-normalises to one") {
    MemoryGraph memory;
    memory.add_category(category_of("A", {{kR1, 1.0}}, 0.5, 0.7));
    const ConsolidationOutcome outcome = consolidate_forget(memory, params);
    CHECK(outcome.forgotten.empty());
    CHECK(outcome.memory.category("A").score == doctest::Approx(1.0));
  }
  SUBCASE("nothing forgotten keeps the structure") {
    MemoryGraph memory;
    memory.add_category(category_of("A", {{kR1, 2.0}}, 0.5, 1.0));
    memory.add_category(category_of("B", {{kR1, 1.0}}, 0.5, 0.5));
    const auto edges_before = memory.edges();
    const ConsolidationOutcome outcome = consolidate_forget(memory, params);
    CHECK(outcome.forgotten.empty());
    CHECK(outcome.memory.category("A").score == doctest::Approx(1.0));
    CHECK(outcome.memory.category("B").score == doctest::Approx(0.5));
    CHECK(outcome.memory.edges() == edges_before);
  }
  SUBCASE("root-only memory is untouched") {
    const ConsolidationOutcome outcome = consolidate_forget(MemoryGraph{}, params);
    CHECK(outcome.forgotten.empty());
    CHECK(outcome.memory.size() == 1);
  }
}

TEST_CASE("consolidation invariants over random memories") {
  std::mt19937 rng(99);
  const auto pool = testsupport::small_pool();
  MemoryParams params = default_params();
  for (int i = 0; i < 200; ++i) {
    const MemoryGraph memory = testsupport::random_memory(rng, pool, 0.4, 8);
    const ConsolidationOutcome outcome = consolidate_forget(memory, params);

    double max_score = 0.0;
    for (const auto& [id, cat] : outcome.memory.categories()) {
      if (cat.is_root()) continue;
      max_score = std::max(max_score, cat.score);
      CHECK(cat.score >= params.forget_threshold);
    }
    if (outcome.memory.size() > 1) {
      CHECK(max_score == doctest::Approx(1.0));
    }

    // Forgetting commutes with rebuilding from the survivors.
    MemoryGraph rebuilt;
    for (const auto& [id, cat] : outcome.memory.categories()) {
      if (!cat.is_root()) rebuilt.add_category(cat);
    }
    CHECK(outcome.memory.edges() == rebuilt.edges());
    CHECK(outcome.memory.edges() ==
          testsupport::brute_force_edges(outcome.memory));
  }
}

TEST_CASE("neutral consolidation preserves order and forgets nothing") {
  std::mt19937 rng(100);
  const auto pool = testsupport::small_pool();
  MemoryParams params = default_params();
  params.score_weight = 1.0;
  params.forget_threshold = 0.0;
  for (int i = 0; i < 100; ++i) {
    const MemoryGraph memory = testsupport::random_memory(rng, pool, 0.4, 8);
    const ConsolidationOutcome outcome = consolidate_forget(memory, params);
    CHECK(outcome.forgotten.empty());
    for (const auto& [a_id, a] : memory.categories()) {
      for (const auto& [b_id, b] : memory.categories()) {
        if (a.is_root() || b.is_root()) continue;
        if (a.score < b.score) {
          CHECK(outcome.memory.category(a_id).score <=
                outcome.memory.category(b_id).score);
        }
      }
    }
  }
}

TEST_CASE("store never decreases a score and repetition grows it monotonically") {
  const Signature sig = plain_signature();
  const MemoryParams params = default_params();
  MemoryGraph memory;
  memory.add_category(category_of("A", {{kR1, 2.0}}, 0.5, 0.5));

  const Observation obs = observation_with_cardinalities({{"r1", 2.0}}, 1);
  double previous = 0.5;
  for (int i = 0; i < 20; ++i) {
    const StoreOutcome outcome = store(sig, memory, obs, params);
    for (const auto& [id, cat] : memory.categories()) {
      if (cat.is_root()) continue;
      CHECK(outcome.memory.category(id).score >= cat.score);
    }
    memory = outcome.memory;
    CHECK(memory.category("A").score > previous);
    previous = memory.category("A").score;
  }
  CHECK(memory.category("A").score == doctest::Approx(0.5 + 20.0));
}

TEST_CASE("learned ids avoid existing ones") {
  const Signature sig = plain_signature();
  const MemoryParams params = default_params();
  MemoryGraph memory;
  memory.add_category(category_of("cat_6", {{kR2, 9.0}}, 0.5, 1.0));

  const Observation obs = observation_with_cardinalities({{"r1", 2.0}}, 6);
  const StoreOutcome outcome = store(sig, memory, obs, params);
  REQUIRE(outcome.learned_id == "cat_6_2");
  CHECK(outcome.memory.contains("cat_6"));
  CHECK(outcome.memory.contains("cat_6_2"));
}

TEST_CASE("an all-zero memory forgets everything at the next consolidation") {
  MemoryParams params = default_params();
  MemoryGraph memory;
  memory.add_category(category_of("A", {{kR1, 1.0}}, 0.5, 0.0));
  const ConsolidationOutcome outcome = consolidate_forget(memory, params);
  CHECK(outcome.forgotten == std::vector<std::string>{"A"});
  CHECK(outcome.memory.size() == 1);
}
