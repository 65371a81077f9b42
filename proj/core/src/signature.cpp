#include "scenemem/signature.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "scenemem/errors.hpp"

namespace scenemem {

namespace {

void check_names(const std::vector<std::string>& names, const char* kind) {
  if (names.empty()) {
    throw InputError(std::string("signature declares no ") + kind + "s");
  }
  std::set<std::string> seen;
  for (const auto& name : names) {
    if (name.empty()) {
      throw InputError(std::string("empty ") + kind + " name");
    }
    if (!seen.insert(name).second) {
      throw InputError(std::string("duplicate ") + kind + " name: " + name);
    }
  }
}

}  // namespace

Signature::Signature(std::vector<std::string> roles,
                     std::vector<std::string> types,
                     std::vector<std::pair<std::string, std::string>> inverse_pairs,
                     std::vector<std::string> symmetric_roles)
    : roles_(std::move(roles)),
      types_(std::move(types)),
      inverse_pairs_(std::move(inverse_pairs)),
      symmetric_roles_(std::move(symmetric_roles)) {
  check_names(roles_, "role");
  check_names(types_, "type");

  const std::set<std::string> role_set(roles_.begin(), roles_.end());
  for (const auto& [a, b] : inverse_pairs_) {
    if (!role_set.count(a) || !role_set.count(b)) {
      throw InputError("inverse pair references an unknown role: " + a + "/" + b);
    }
    if (a == b) {
      throw InputError("role paired with itself; declare it symmetric instead: " + a);
    }
    if (mirror_.count(a) || mirror_.count(b)) {
      throw InputError("role appears in more than one inverse pair: " + a + "/" + b);
    }
    mirror_[a] = b;
    mirror_[b] = a;
  }
  for (const auto& role : symmetric_roles_) {
    if (!role_set.count(role)) {
      throw InputError("unknown symmetric role: " + role);
    }
    if (mirror_.count(role)) {
      throw InputError("symmetric role is inverse-paired or repeated: " + role);
    }
    mirror_[role] = role;
  }
}

bool Signature::has_role(const std::string& name) const {
  return std::find(roles_.begin(), roles_.end(), name) != roles_.end();
}

bool Signature::has_type(const std::string& name) const {
  return std::find(types_.begin(), types_.end(), name) != types_.end();
}

bool Signature::is_symmetric(const std::string& name) const {
  auto it = mirror_.find(name);
  return it != mirror_.end() && it->second == name;
}

std::optional<std::string> Signature::mirror_role(const std::string& name) const {
  auto it = mirror_.find(name);
  if (it == mirror_.end()) return std::nullopt;
  return it->second;
}

void validate_observation(const Signature& sig, const Observation& obs) {
  for (const auto& [id, memberships] : obs.elements) {
    if (id.empty()) {
      throw InputError("empty element id");
    }
    for (const auto& [type, degree] : memberships) {
      if (!sig.has_type(type)) {
        throw InputError("undeclared type '" + type + "' on element '" + id + "'");
      }
    }
  }

  std::set<std::tuple<std::string, std::string, std::string>> seen;
  for (const auto& a : obs.assertions) {
    if (!obs.elements.count(a.subject)) {
      throw InputError("assertion references undeclared element '" + a.subject + "'");
    }
    if (!obs.elements.count(a.object)) {
      throw InputError("assertion references undeclared element '" + a.object + "'");
    }
    if (!sig.has_role(a.role)) {
      throw InputError("assertion uses undeclared role '" + a.role + "'");
    }
    if (a.subject == a.object) {
      throw InputError("assertion relates element '" + a.subject + "' to itself");
    }
    if (!seen.insert({a.subject, a.object, a.role}).second) {
      throw InputError("duplicate assertion (" + a.subject + ", " + a.object +
                       ", " + a.role + ")");
    }
  }
}

Observation normalize_observation(const Signature& sig, const Observation& obs) {
  validate_observation(sig, obs);

  std::map<std::tuple<std::string, std::string, std::string>, double> index;
  for (const auto& a : obs.assertions) {
    index[{a.subject, a.object, a.role}] = a.degree.value();
  }

  Observation out = obs;
  for (const auto& a : obs.assertions) {
    const auto mirror = sig.mirror_role(a.role);
    if (!mirror) continue;
    auto it = index.find({a.object, a.subject, *mirror});
    if (it == index.end()) {
      out.assertions.push_back({a.object, a.subject, *mirror, a.degree});
    } else if (std::abs(it->second - a.degree.value()) > kDegreeTolerance) {
      throw InputError("mirrored assertion for (" + a.subject + ", " + a.object +
                       ", " + a.role + ") exists with a conflicting degree");
    }
  }
  return out;
}

}  // namespace scenemem
