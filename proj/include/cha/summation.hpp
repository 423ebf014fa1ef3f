#ifndef CHA_SUMMATION_HPP
#define CHA_SUMMATION_HPP

#include <cmath>

namespace cha {

/// Neumaier-compensated accumulator; keeps reductions deterministic to
/// within an ulp of the exactly-rounded sum.
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }

  double value() const { return sum + comp; }
};

} // namespace cha

#endif
