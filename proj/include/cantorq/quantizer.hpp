#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cantorq/errors.hpp"

namespace cantorq {

/// A finite codebook: strictly increasing points inside [0,1].
class Quantizer {
 public:
  /// Sorts the input and validates: nonempty, distinct, all in [0,1].
  explicit Quantizer(std::vector<double> points) : pts_(std::move(points)) {
    if (pts_.empty()) throw EmptyQuantizer("quantizer must contain at least one point");
    std::sort(pts_.begin(), pts_.end());
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      if (!(pts_[i] >= 0.0 && pts_[i] <= 1.0))
        throw InvalidQuantizer("codepoint outside [0,1]: " + std::to_string(pts_[i]));
      if (i > 0 && !(pts_[i] > pts_[i - 1]))
        throw InvalidQuantizer("codepoints must be distinct");
    }
  }

  int size() const { return static_cast<int>(pts_.size()); }
  double operator[](int i) const { return pts_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& points() const { return pts_; }

  /// The reflected codebook {1 - a}.
  Quantizer mirror() const {
    std::vector<double> m;
    m.reserve(pts_.size());
    for (auto it = pts_.rbegin(); it != pts_.rend(); ++it) m.push_back(1.0 - *it);
    return Quantizer(std::move(m));
  }

 private:
  std::vector<double> pts_;
};

}  // namespace cantorq
