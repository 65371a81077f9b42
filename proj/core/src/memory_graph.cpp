#include "scenemem/memory_graph.hpp"

#include <algorithm>

#include "scenemem/errors.hpp"

namespace scenemem {

Category learn(const EncodedScene& scene, double initial_score,
               double fuzziness, std::string id) {
  if (scene.beliefs.empty()) {
    throw InvariantError("cannot learn a category from a scene with no beliefs");
  }
  if (!(initial_score >= 0.0)) {
    throw InvariantError("initial score must be >= 0");
  }
  Category cat;
  cat.id = id.empty() ? "cat_" + scene.scene_id : std::move(id);
  cat.score = initial_score;
  for (const auto& [rr, cardinality] : scene.beliefs) {
    cat.restrictions.emplace(rr, LeftShoulder(cardinality, fuzziness));
  }
  return cat;
}

Degree subsumption_degree(const Category& child, const Category& parent) {
  double result = 1.0;
  for (const auto& [rr, shoulder] : parent.restrictions) {
    auto it = child.restrictions.find(rr);
    const double child_k = it == child.restrictions.end() ? 0.0 : it->second.k();
    result = std::min(result, shoulder.membership(child_k).value());
    if (result == 0.0) break;
  }
  return Degree(result);
}

Degree classification_degree(const Category& cat, const EncodedScene& scene) {
  double result = 1.0;
  for (const auto& [rr, shoulder] : cat.restrictions) {
    result = std::min(result, shoulder.membership(scene.cardinality(rr)).value());
    if (result == 0.0) break;
  }
  return Degree(result);
}

double similarity(const Category& cat, const EncodedScene& scene) {
  if (!(scene.total > 0.0)) {
    throw InvariantError("similarity is undefined for a scene with no cardinality");
  }
  double restricted = 0.0;
  for (const auto& [rr, shoulder] : cat.restrictions) restricted += shoulder.k();
  return restricted / scene.total;
}

MemoryGraph::MemoryGraph() {
  categories_.emplace(kRootId, Category{kRootId, {}, 0.0});
}

bool MemoryGraph::contains(const std::string& id) const {
  return categories_.count(id) != 0;
}

const Category& MemoryGraph::category(const std::string& id) const {
  auto it = categories_.find(id);
  if (it == categories_.end()) {
    throw InvariantError("unknown category id: " + id);
  }
  return it->second;
}

double MemoryGraph::subsumption(const std::string& child,
                                const std::string& parent) const {
  if (!contains(child) || !contains(parent)) {
    throw InvariantError("subsumption query over unknown categories");
  }
  if (child == parent) return 1.0;
  auto it = edges_.find({child, parent});
  return it == edges_.end() ? 0.0 : it->second;
}

void MemoryGraph::add_category(Category cat) {
  if (cat.id.empty()) {
    throw InvariantError("category id must be nonempty");
  }
  if (categories_.count(cat.id)) {
    throw InvariantError("duplicate category id: " + cat.id);
  }
  if (cat.restrictions.empty()) {
    throw InvariantError("non-root categories need at least one restriction");
  }
  const bool any_positive =
      std::any_of(cat.restrictions.begin(), cat.restrictions.end(),
                  [](const auto& kv) { return kv.second.k() > 0.0; });
  if (!any_positive) {
    throw InvariantError("category '" + cat.id + "' restricts nothing above zero");
  }
  if (!(cat.score >= 0.0)) {
    throw InvariantError("category score must be >= 0");
  }

  // Incremental update: degrees between existing pairs cannot change.
  for (const auto& [id, existing] : categories_) {
    const double down = subsumption_degree(cat, existing).value();
    if (down > 0.0) edges_[{cat.id, id}] = down;
    const double up = subsumption_degree(existing, cat).value();
    if (up > 0.0) edges_[{id, cat.id}] = up;
  }
  categories_.emplace(cat.id, std::move(cat));
}

void MemoryGraph::remove_categories(std::span<const std::string> ids) {
  for (const auto& id : ids) {
    if (id == kRootId) {
      throw InvariantError("the root category cannot be removed");
    }
    if (!categories_.count(id)) {
      throw InvariantError("cannot remove unknown category: " + id);
    }
  }
  for (const auto& id : ids) categories_.erase(id);
  std::erase_if(edges_, [this](const auto& kv) {
    return !categories_.count(kv.first.first) ||
           !categories_.count(kv.first.second);
  });
}

void MemoryGraph::add_score(const std::string& id, double delta) {
  set_score(id, category(id).score + delta);
}

void MemoryGraph::set_score(const std::string& id, double value) {
  auto it = categories_.find(id);
  if (it == categories_.end()) {
    throw InvariantError("unknown category id: " + id);
  }
  if (it->second.is_root()) {
    throw InvariantError("the root category carries no score");
  }
  if (!(value >= 0.0)) {
    throw InvariantError("category score must be >= 0");
  }
  it->second.score = value;
}

ClassificationResult classify(const MemoryGraph& memory,
                              const EncodedScene& scene) {
  ClassificationResult result;
  result.scene_id = scene.scene_id;
  for (const auto& [id, cat] : memory.categories()) {
    if (cat.is_root()) continue;
    const Degree degree = classification_degree(cat, scene);
    if (degree.value() > 0.0) {
      result.entries.emplace(id,
                             ClassificationEntry{degree, similarity(cat, scene)});
    }
  }
  return result;
}

}  // namespace scenemem
