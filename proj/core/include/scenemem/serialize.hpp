#pragma once
// Memory graph persistence (canonical JSON) and DOT export.

#include <string>

#include "scenemem/memory_graph.hpp"

namespace scenemem {

// Canonical JSON form: categories and edges in sorted order, so that
// save(load(x)) == x byte for byte. The root is implicit.
std::string save_memory(const MemoryGraph& memory);

// Restores categories and recomputes all edges. When the document carries
// edges they must match the recomputation exactly; a mismatch signals a
// corrupted file. Documents without edges are accepted.
MemoryGraph load_memory(const std::string& json_text);

MemoryGraph load_memory_file(const std::string& path);

// Graphviz rendering: one node per category labeled with id, score and
// restrictions; weight-1 edges solid (transitively reduced for display),
// fractional edges dashed and labeled with their weight.
std::string export_dot(const MemoryGraph& memory);

}  // namespace scenemem
