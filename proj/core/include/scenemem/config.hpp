#pragma once
// Engine configuration: signature, memory parameters, and the position
// ingestion settings, loaded from a single JSON file.

#include <string>

#include "scenemem/memory_ops.hpp"
#include "scenemem/signature.hpp"

namespace scenemem {

struct EngineConfig {
  Signature signature;
  MemoryParams params;
  double d_max = 0.15;          // meters; contact radius for position ingestion
  std::string connection_role;  // symmetric role used by the position adapter
};

// Parses a configuration document. Omitted parameters keep their defaults;
// the connection role defaults to the signature's sole symmetric role when
// there is exactly one.
EngineConfig parse_config(const std::string& json_text);

// Reads and parses a configuration file.
EngineConfig load_config(const std::string& path);

}  // namespace scenemem
