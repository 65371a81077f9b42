#pragma once
// The prior input interface: relation roles with inverse/symmetric pairing,
// element types, and time-sliced observations validated against them.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scenemem/fuzzy.hpp"

namespace scenemem {

// Fuzzy type memberships of one element, keyed by type name. May be partial
// or empty: unstated memberships are unknown, not false.
using TypeMemberships = std::map<std::string, Degree>;

// One fuzzy relation statement between two elements.
struct Assertion {
  std::string subject;
  std::string object;
  std::string role;
  Degree degree;

  friend bool operator==(const Assertion&, const Assertion&) = default;
};

// Declares the vocabulary observations may use. Roles can be grouped into
// inverse pairs (front/behind) or marked symmetric (connected). Immutable
// after construction.
class Signature {
 public:
  Signature(std::vector<std::string> roles, std::vector<std::string> types,
            std::vector<std::pair<std::string, std::string>> inverse_pairs = {},
            std::vector<std::string> symmetric_roles = {});

  const std::vector<std::string>& roles() const { return roles_; }
  const std::vector<std::string>& types() const { return types_; }
  const std::vector<std::pair<std::string, std::string>>& inverse_pairs() const {
    return inverse_pairs_;
  }
  const std::vector<std::string>& symmetric_roles() const {
    return symmetric_roles_;
  }

  bool has_role(const std::string& name) const;
  bool has_type(const std::string& name) const;
  bool is_symmetric(const std::string& name) const;

  // Mirror of a role: the inverse partner, the role itself when symmetric,
  // nullopt when the role has no declared mirror.
  std::optional<std::string> mirror_role(const std::string& name) const;

 private:
  std::vector<std::string> roles_;
  std::vector<std::string> types_;
  std::vector<std::pair<std::string, std::string>> inverse_pairs_;
  std::vector<std::string> symmetric_roles_;
  std::map<std::string, std::string> mirror_;
};

// One time-slice of facts: elements with fuzzy type memberships plus fuzzy
// relation assertions between them.
struct Observation {
  std::int64_t timestamp = 0;
  std::map<std::string, TypeMemberships> elements;  // element id -> memberships
  std::vector<Assertion> assertions;
};

// Absolute tolerance for comparing degrees of mirrored assertions.
inline constexpr double kDegreeTolerance = 1e-9;

// Rejects references to undeclared elements, roles or types, duplicate
// (subject, object, role) triples, and assertions relating an element to
// itself.
void validate_observation(const Signature& sig, const Observation& obs);

// Validates, then adds the mirrored assertion for every assertion over an
// inverse-paired or symmetric role when it is missing. A mirror present with
// a conflicting degree signals inconsistent input. Idempotent.
Observation normalize_observation(const Signature& sig, const Observation& obs);

}  // namespace scenemem
