#include "scenemem/encoding.hpp"

#include <algorithm>

#include "scenemem/errors.hpp"

namespace scenemem {

ReifiedRole reify(const Signature& sig, const std::string& role,
                  const std::string& type) {
  if (!sig.has_role(role)) {
    throw InputError("cannot reify undeclared role: " + role);
  }
  if (!sig.has_type(type)) {
    throw InputError("cannot reify undeclared type: " + type);
  }
  return {role, type};
}

double fact_contribution(const Assertion& assertion,
                         const TypeMemberships& subject_types,
                         const TypeMemberships& object_types,
                         const ReifiedRole& rr) {
  if (assertion.role != rr.role) return 0.0;
  auto subject = subject_types.find(rr.type);
  if (subject == subject_types.end()) return 0.0;

  // Disjunction over the object's memberships; empty means no contribution.
  double object_best = 0.0;
  for (const auto& [type, degree] : object_types) {
    object_best = std::max(object_best, degree.value());
  }
  return std::min({assertion.degree.value(), subject->second.value(), object_best});
}

EncodedScene encode(const Signature& sig, const Observation& obs) {
  (void)sig;  // the observation is already validated against it
  EncodedScene scene;
  scene.scene_id = std::to_string(obs.timestamp);

  static const TypeMemberships kNoMemberships;
  auto memberships_of = [&obs](const std::string& id) -> const TypeMemberships& {
    auto it = obs.elements.find(id);
    return it == obs.elements.end() ? kNoMemberships : it->second;
  };

  for (const auto& assertion : obs.assertions) {
    const auto& subject_types = memberships_of(assertion.subject);
    const auto& object_types = memberships_of(assertion.object);
    for (const auto& [type, membership] : subject_types) {
      ReifiedRole rr{assertion.role, type};
      double c = fact_contribution(assertion, subject_types, object_types, rr);
      if (c > 0.0) scene.beliefs[rr] += c;
    }
  }

  for (const auto& [rr, c] : scene.beliefs) scene.total += c;
  return scene;
}

}  // namespace scenemem
