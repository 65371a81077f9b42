#include <random>
#include <string>

#include "doctest.h"
#include <nlohmann/json.hpp>
#include "scenemem/errors.hpp"
#include "scenemem/serialize.hpp"
#include "support/generators.hpp"

using namespace scenemem;
using nlohmann::json;

namespace {

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

// The four-node example: two specific categories under a sparser one under
// the root, with fractional cross edges between the specific pair.
MemoryGraph diamond_memory() {
  const ReifiedRole fg{"front", "GLASS"}, bc{"behind", "CUP"};
  const ReifiedRole fc{"front", "CUP"}, bg{"behind", "GLASS"};
  MemoryGraph memory;
  memory.add_category(category_of("phi2", {{fg, 0.9}, {bc, 1.0}}, 0.5, 1.0));
  memory.add_category(
      category_of("phi1", {{fg, 1.3}, {bc, 1.5}, {fc, 0.2}, {bg, 0.2}}, 0.5, 2.0));
  memory.add_category(
      category_of("phi3", {{fg, 1.0}, {bc, 1.2}, {fc, 0.15}, {bg, 0.3}}, 0.5, 1.5));
  return memory;
}

}  // namespace

TEST_CASE("save and load round-trip byte for byte") {
  SUBCASE("hand-built memory") {
    const MemoryGraph memory = diamond_memory();
    const std::string bytes = save_memory(memory);
    const MemoryGraph loaded = load_memory(bytes);
    CHECK(save_memory(loaded) == bytes);
    CHECK(loaded.edges() == memory.edges());
    CHECK(loaded.categories().size() == memory.categories().size());
    CHECK(loaded.category("phi1").score == 2.0);
  }
  SUBCASE("randomized memories") {
    std::mt19937 rng(808);
    const auto pool = testsupport::small_pool();
    for (int i = 0; i < 100; ++i) {
      const double a = testsupport::uniform(rng, 0.0, 1.0);
      const MemoryGraph memory = testsupport::random_memory(rng, pool, a, 10);
      const std::string bytes = save_memory(memory);
      CHECK(save_memory(load_memory(bytes)) == bytes);
    }
  }
  SUBCASE("root-only memory") {
    const std::string bytes = save_memory(MemoryGraph{});
    const MemoryGraph loaded = load_memory(bytes);
    CHECK(loaded.size() == 1);
    CHECK(save_memory(loaded) == bytes);
  }
}

TEST_CASE("tampered edge weights are rejected") {
  const MemoryGraph memory = diamond_memory();
  json doc = json::parse(save_memory(memory));
  REQUIRE_FALSE(doc.at("edges").empty());
  doc.at("edges").at(0).at("degree") = 0.123456;
  CHECK_THROWS_AS(load_memory(doc.dump()), InputError);

  SUBCASE("a missing edge is also a mismatch") {
    json pruned = json::parse(save_memory(memory));
    pruned.at("edges").erase(0);
    CHECK_THROWS_AS(load_memory(pruned.dump()), InputError);
  }
}

TEST_CASE("documents without edges recompute them silently") {
  const MemoryGraph memory = diamond_memory();
  json doc = json::parse(save_memory(memory));
  doc.erase("edges");
  const MemoryGraph loaded = load_memory(doc.dump());
  CHECK(loaded.edges() == memory.edges());
}

TEST_CASE("malformed memory documents are rejected") {
  CHECK_THROWS_AS(load_memory("not json"), InputError);
  CHECK_THROWS_AS(load_memory("{}"), InputError);
  CHECK_THROWS_AS(load_memory(R"({"version": 2, "categories": []})"), InputError);
  CHECK_THROWS_AS(load_memory(R"({"categories": [{"id": "x"}]})"), InputError);
  CHECK_THROWS_AS(
      load_memory(
          R"({"categories": [{"id": "x", "score": -1, "restrictions":
              [{"role": "r", "type": "T", "k": 1, "a": 0.5}]}]})"),
      InputError);
  CHECK_THROWS_AS(
      load_memory(
          R"({"categories": [{"id": "x", "score": 1, "restrictions":
              [{"role": "r", "type": "T", "k": 1, "a": 1.5}]}]})"),
      InputError);
  CHECK_THROWS_AS(
      load_memory(
          R"({"categories": [
              {"id": "x", "score": 1, "restrictions":
                [{"role": "r", "type": "T", "k": 1, "a": 0.5}]},
              {"id": "x", "score": 1, "restrictions":
                [{"role": "r", "type": "T", "k": 2, "a": 0.5}]}]})"),
      InputError);
}

TEST_CASE("dot export") {
  SUBCASE("root-only memory renders a single node") {
    const std::string dot = export_dot(MemoryGraph{});
    CHECK(dot.find("\"root\"") != std::string::npos);
    CHECK(dot.find("->") == std::string::npos);
  }

  SUBCASE("diamond memory renders two chains and two weighted cross edges") {
    const MemoryGraph memory = diamond_memory();
    REQUIRE(memory.subsumption("phi1", "phi2") == 1.0);
    REQUIRE(memory.subsumption("phi3", "phi2") == 1.0);
    REQUIRE(memory.subsumption("phi1", "phi3") ==
            doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    REQUIRE(memory.subsumption("phi3", "phi1") == doctest::Approx(0.5));

    const std::string dot = export_dot(memory);
    CHECK(dot.find("\"phi1\" -> \"phi2\";") != std::string::npos);
    CHECK(dot.find("\"phi3\" -> \"phi2\";") != std::string::npos);
    CHECK(dot.find("\"phi2\" -> \"root\";") != std::string::npos);
    // Transitive weight-1 edges are display-reduced.
    CHECK(dot.find("\"phi1\" -> \"root\"") == std::string::npos);
    CHECK(dot.find("\"phi3\" -> \"root\"") == std::string::npos);
    // Fractional edges stay, labeled and dashed.
    CHECK(dot.find("\"phi1\" -> \"phi3\" [label=\"0.333333\", style=dashed];") !=
          std::string::npos);
    CHECK(dot.find("\"phi3\" -> \"phi1\" [label=\"0.5\", style=dashed];") !=
          std::string::npos);
    // Node labels carry id, score and the restriction list.
    CHECK(dot.find("q=2") != std::string::npos);
    CHECK(dot.find("front⊕GLASS >= 1.3 (a=0.5)") != std::string::npos);
  }

  SUBCASE("equivalent categories keep their mutual edges") {
    const ReifiedRole fg{"front", "GLASS"};
    MemoryGraph memory;
    memory.add_category(category_of("a", {{fg, 1.0}}, 0.5, 1.0));
    memory.add_category(category_of("b", {{fg, 1.0}}, 0.5, 1.0));
    const std::string dot = export_dot(memory);
    CHECK(dot.find("\"a\" -> \"b\";") != std::string::npos);
    CHECK(dot.find("\"b\" -> \"a\";") != std::string::npos);
  }
}
