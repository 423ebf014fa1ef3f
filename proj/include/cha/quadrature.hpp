#ifndef CHA_QUADRATURE_HPP
#define CHA_QUADRATURE_HPP

#include <vector>

namespace cha {

struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule of order n on [-1, 1], nodes ascending.
QuadRule gauss_legendre(int n);

/// The same rule mapped to [0, 1].
QuadRule gauss_legendre_01(int n);

} // namespace cha

#endif
