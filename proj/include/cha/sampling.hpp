#ifndef CHA_SAMPLING_HPP
#define CHA_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "cha/element.hpp"

namespace cha {

/// Seeded generator with a platform-independent uniform mapping, so
/// identical seeds reproduce identical draws everywhere.
struct Rng {
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  double unit() {  // [0, 1)
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// All components uniform in [lo, hi].
  ChaElement element(int n, double lo, double hi) {
    ChaElement x = ChaElement::zero(n);
    x.z = uniform(lo, hi);
    for (int i = 0; i < n; ++i) x.a[i] = uniform(lo, hi);
    for (int i = 0; i < n; ++i) x.b[i] = uniform(lo, hi);
    x.c = uniform(lo, hi);
    return x;
  }

  /// z, a, b uniform in [lo, hi]; c uniform in [clo, chi].
  ChaElement element_c(int n, double lo, double hi, double clo, double chi) {
    ChaElement x = element(n, lo, hi);
    x.c = uniform(clo, chi);
    return x;
  }

  std::mt19937_64 eng;
};

} // namespace cha

#endif
