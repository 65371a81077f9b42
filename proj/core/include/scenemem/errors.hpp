#pragma once

#include <stdexcept>

namespace scenemem {

// Malformed external data: logs, configs, serialized memories.
// The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Broken internal invariant or API misuse.
// The CLI maps this to exit code 2.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace scenemem
