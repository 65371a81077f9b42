#include "scenemem/ingest.hpp"

#include <cmath>
#include <set>

#include "scenemem/errors.hpp"

namespace scenemem {

Observation ingest_positions(const Signature& sig, const PositionFrame& frame,
                             double d_max, const std::string& connection_role) {
  if (!(d_max > 0.0)) {
    throw InputError("d_max must be positive");
  }
  if (!sig.is_symmetric(connection_role)) {
    throw InputError("connection role '" + connection_role +
                     "' is not a symmetric role of the signature");
  }

  Observation obs;
  obs.timestamp = frame.timestamp;
  std::set<std::string> ids;
  for (const auto& object : frame.objects) {
    if (object.id.empty()) {
      throw InputError("position frame contains an object with an empty id");
    }
    if (!ids.insert(object.id).second) {
      throw InputError("duplicate object id in position frame: " + object.id);
    }
    if (!std::isfinite(object.x) || !std::isfinite(object.y)) {
      throw InputError("non-finite coordinates for object '" + object.id + "'");
    }
    obs.elements.emplace(object.id, object.types);
  }

  for (std::size_t i = 0; i < frame.objects.size(); ++i) {
    for (std::size_t j = i + 1; j < frame.objects.size(); ++j) {
      const auto& a = frame.objects[i];
      const auto& b = frame.objects[j];
      const double d = std::hypot(a.x - b.x, a.y - b.y);
      if (d >= d_max) continue;
      const Degree degree(1.0 - d / d_max);
      obs.assertions.push_back({a.id, b.id, connection_role, degree});
      obs.assertions.push_back({b.id, a.id, connection_role, degree});
    }
  }

  validate_observation(sig, obs);
  return obs;
}

}  // namespace scenemem
