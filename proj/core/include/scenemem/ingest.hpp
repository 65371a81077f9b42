#pragma once
// Geometric adapter: turns 2D object positions into fuzzy connection facts.

#include <cstdint>
#include <string>
#include <vector>

#include "scenemem/signature.hpp"

namespace scenemem {

struct PositionedObject {
  std::string id;
  TypeMemberships types;
  double x = 0.0;  // meters
  double y = 0.0;  // meters
};

struct PositionFrame {
  std::int64_t timestamp = 0;
  std::vector<PositionedObject> objects;
};

// Emits mirrored assertions over the given symmetric role for every object
// pair closer than d_max, with degree 1 - d/d_max (1 at contact, nothing at
// or beyond d_max). Object ids must be unique and coordinates finite.
Observation ingest_positions(const Signature& sig, const PositionFrame& frame,
                             double d_max, const std::string& connection_role);

}  // namespace scenemem
