#pragma once
// Scene encoding: reifies (role, type) pairs into belief names and
// accumulates their sigma-count cardinalities.

#include <map>
#include <string>

#include "scenemem/signature.hpp"

namespace scenemem {

// A belief name: a relation role paired with the subject's type,
// e.g. front(+)GLASS for "something of type GLASS has an element in front".
struct ReifiedRole {
  std::string role;
  std::string type;

  friend auto operator<=>(const ReifiedRole&, const ReifiedRole&) = default;

  std::string display() const { return role + "⊕" + type; }
};

// Validated pairing; deterministic and injective.
ReifiedRole reify(const Signature& sig, const std::string& role,
                  const std::string& type);

// Beliefs of one scene with their sigma-count cardinalities. Only strictly
// positive cardinalities are stored; `total` is their sum.
struct EncodedScene {
  std::string scene_id;
  std::map<ReifiedRole, double> beliefs;
  double total = 0.0;

  double cardinality(const ReifiedRole& rr) const {
    auto it = beliefs.find(rr);
    return it == beliefs.end() ? 0.0 : it->second;
  }
  bool empty() const { return beliefs.empty(); }
};

// Contribution of one assertion to the cardinality of `rr`: the minimum of
// the assertion degree, the subject's membership in rr.type, and the best
// type membership of the object. An element with no relevant membership
// contributes 0; assertions over other roles contribute 0.
double fact_contribution(const Assertion& assertion,
                         const TypeMemberships& subject_types,
                         const TypeMemberships& object_types,
                         const ReifiedRole& rr);

// Sigma-counts every belief of an observation. Expects the observation to be
// normalized; the scene id is taken from the timestamp.
EncodedScene encode(const Signature& sig, const Observation& obs);

}  // namespace scenemem
