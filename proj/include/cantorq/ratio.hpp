#pragma once

#include <string>

#include "cantorq/errors.hpp"

namespace cantorq {

/// Contraction ratio of the two similarity maps S1(x) = r x and
/// S2(x) = r x + 1 - r. Valid strictly between 0 and 1/2; outside that range
/// the construction degenerates (the two first-level cylinders overlap).
class Ratio {
 public:
  explicit Ratio(double value) : value_(value) {
    if (!(value > 0.0 && value < 0.5))
      throw InvalidRatio("contraction ratio must satisfy 0 < r < 0.5, got " +
                         std::to_string(value));
  }

  double value() const { return value_; }

 private:
  double value_;
};

}  // namespace cantorq
