#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace dgp {

// Closed interval [lo, hi]; the spatial domain all locations must live in.
struct Interval {
  double lo;
  double hi;

  Interval(double lo_in, double hi_in) : lo(lo_in), hi(hi_in) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
      throw std::invalid_argument("Interval: requires finite lo < hi");
    }
  }

  double length() const { return hi - lo; }

  bool contains(double x) const { return std::isfinite(x) && x >= lo && x <= hi; }

  void require_inside(double x, const char* who) const {
    if (!contains(x)) {
      throw std::domain_error(std::string(who) + ": location " + std::to_string(x) +
                              " outside domain [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "]");
    }
  }
};

}  // namespace dgp
