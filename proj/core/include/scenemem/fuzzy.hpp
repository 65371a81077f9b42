#pragma once
// Fuzzy degrees under Zadeh semantics and the left-shoulder membership
// function behind every cardinality restriction.

#include <algorithm>
#include <string>

#include "scenemem/errors.hpp"

namespace scenemem {

// A fuzzy truth degree. In [0, 1] at construction and after every operation.
class Degree {
 public:
  constexpr Degree() = default;
  explicit Degree(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
      throw InvariantError("degree outside [0,1]: " + std::to_string(value));
    }
  }

  constexpr double value() const { return value_; }

  friend constexpr auto operator<=>(const Degree&, const Degree&) = default;

 private:
  double value_ = 0.0;
};

// Zadeh conjunction and disjunction.
inline Degree tnorm(Degree x, Degree y) {
  return Degree(std::min(x.value(), y.value()));
}
inline Degree tconorm(Degree x, Degree y) {
  return Degree(std::max(x.value(), y.value()));
}

// An "at least k" threshold with a linear ramp on [k*(1-a), k], where a is
// the fuzziness. a = 0 makes the threshold crisp, a = 1 anchors the ramp at
// zero. Immutable once built.
class LeftShoulder {
 public:
  LeftShoulder(double k, double fuzziness)
      : k_(k), fuzziness_(fuzziness), k_minus_(k * (1.0 - fuzziness)) {
    if (!(k >= 0.0)) {
      throw InvariantError("restriction threshold must be >= 0");
    }
    if (!(fuzziness >= 0.0 && fuzziness <= 1.0)) {
      throw InvariantError("fuzziness outside [0,1]");
    }
  }

  double k() const { return k_; }
  double fuzziness() const { return fuzziness_; }
  double k_minus() const { return k_minus_; }

  // Degree to which a cardinality satisfies the threshold: 1 at c >= k,
  // 0 at c <= k-, linear in between. The degenerate shoulder (k == k-)
  // is a crisp step: 1 at c >= k, else 0.
  Degree membership(double cardinality) const {
    if (cardinality < 0.0) {
      throw InvariantError("cardinality must be >= 0");
    }
    if (cardinality >= k_) return Degree(1.0);
    if (cardinality <= k_minus_) return Degree(0.0);
    return Degree((cardinality - k_minus_) / (k_ - k_minus_));
  }

  friend bool operator==(const LeftShoulder&, const LeftShoulder&) = default;

 private:
  double k_;
  double fuzziness_;
  double k_minus_;
};

}  // namespace scenemem
