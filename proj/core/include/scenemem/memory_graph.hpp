#pragma once
// Scene categories, the rooted memory graph with fuzzy subsumption edges,
// and classification of encoded scenes against it.

#include <map>
#include <span>
#include <string>
#include <utility>

#include "scenemem/encoding.hpp"
#include "scenemem/fuzzy.hpp"

namespace scenemem {

inline constexpr const char* kRootId = "root";

// A learned scene concept: one "at least" restriction per belief observed at
// learning time, plus a consolidation score. The root category restricts
// nothing and matches every scene.
struct Category {
  std::string id;
  std::map<ReifiedRole, LeftShoulder> restrictions;
  double score = 0.0;

  bool is_root() const { return restrictions.empty(); }
};

// Builds a category whose restrictions copy the scene's cardinalities at the
// given fuzziness. The id defaults to "cat_" + scene id. Scenes with no
// beliefs cannot be learned.
Category learn(const EncodedScene& scene, double initial_score,
               double fuzziness, std::string id = {});

// Degree to which every realisation of `child` is also one of `parent`:
// for each role the parent restricts, the child's threshold (0 when the
// child leaves the role unrestricted) is evaluated against the parent's
// shoulder, and the overall degree is the minimum. The root subsumes
// everything with degree 1.
Degree subsumption_degree(const Category& child, const Category& parent);

// Minimum restriction membership of the scene's cardinalities: the degree
// with which the scene realises the category. Roles missing from the scene
// count as cardinality 0.
Degree classification_degree(const Category& cat, const EncodedScene& scene);

// Ratio between the category's summed restriction thresholds and the scene's
// summed cardinalities. May slightly exceed 1 when restrictions are only
// fuzzily satisfied. Undefined for scenes with no cardinality.
double similarity(const Category& cat, const EncodedScene& scene);

struct ClassificationEntry {
  Degree degree;
  double similarity = 0.0;
};

// The categories a scene realises with positive degree, root excluded.
// A scene matching nothing but the root counts as not classified.
struct ClassificationResult {
  std::string scene_id;
  std::map<std::string, ClassificationEntry> entries;

  bool classified() const { return !entries.empty(); }
};

// Rooted category graph. Edges hold the full positive-weight subsumption
// relation between distinct categories and always agree with pairwise
// recomputation; every non-root category has a weight-1 edge to the root.
//
// A graph value is a snapshot: reads may run concurrently against it, while
// mutation follows a single-writer contract (copy to take a snapshot).
class MemoryGraph {
 public:
  using EdgeKey = std::pair<std::string, std::string>;  // child, parent

  MemoryGraph();  // root only

  const std::map<std::string, Category>& categories() const {
    return categories_;
  }
  const std::map<EdgeKey, double>& edges() const { return edges_; }
  std::size_t size() const { return categories_.size(); }

  bool contains(const std::string& id) const;
  const Category& category(const std::string& id) const;

  // Stored subsumption weight; 1 on the diagonal, 0 where no edge exists.
  double subsumption(const std::string& child, const std::string& parent) const;

  void add_category(Category cat);
  void remove_categories(std::span<const std::string> ids);

  void add_score(const std::string& id, double delta);
  void set_score(const std::string& id, double value);

 private:
  std::map<std::string, Category> categories_;
  std::map<EdgeKey, double> edges_;
};

// Classifies the scene against every non-root category of the memory.
ClassificationResult classify(const MemoryGraph& memory,
                              const EncodedScene& scene);

}  // namespace scenemem
