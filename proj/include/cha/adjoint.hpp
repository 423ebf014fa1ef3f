#ifndef CHA_ADJOINT_HPP
#define CHA_ADJOINT_HPP

#include <Eigen/Dense>
#include <vector>

#include "cha/element.hpp"

namespace cha {

/// Carrier for dense adjoint-representation matrices, (2n+2) x (2n+2),
/// coordinate order (X_1, q-block, p-block, X_S).
using DenseMatrix = Eigen::MatrixXd;

/// Upper-triangular exponential pattern with diagonal (e^m I_{1+n}, I_{n+1}):
///
///   [ e^m  M12  M13  M14 ]      M12, M13 row vectors of length n,
///   [  0   e^m   0   M24 ]      M24 a column vector of length n,
///   [  0    0    I    0  ]      m, M14 scalars.
///   [  0    0    0    1  ]
///
/// Closed under products; the home of the adjoint exponentials.
struct StructuredExpMatrix {
  double m = 0.0;
  std::vector<double> m12, m13, m24;
  double m14 = 0.0;

  int n() const { return static_cast<int>(m12.size()); }
  static StructuredExpMatrix identity(int n);
};

/// The same block pattern with diagonal (d I_{1+n}, 0_{n+1}): the shape of
/// (I - M)^k for k >= 1 and of the summed series. Closed under products
/// and sums.
struct StructuredSumMatrix {
  double diag = 0.0;
  std::vector<double> m12, m13, m24;
  double m14 = 0.0;

  int n() const { return static_cast<int>(m12.size()); }
};

/// Coordinates (z, a_1..a_n, b_1..b_n, c) of an element.
Eigen::VectorXd coords(const ChaElement& x);
ChaElement element_from_coords(const Eigen::VectorXd& v);

/// Matrix of ad_X = [X, .] in the coordinate basis:
/// ad_matrix(X) * coords(Y) == coords(commutator(X, Y)).
DenseMatrix ad_matrix(const ChaElement& x);

/// e^{ad_X} applied to Y in closed form; the b and c components of Y pass
/// through unchanged.
ChaElement exp_ad_apply(const ChaElement& x, const ChaElement& y);

/// e^{ad_X} as a structured matrix: m = -c, M12 = b e^{-c}, M13 = -a h1(c),
/// M24 = a h1(c), M14 = z h1(c) + (a.b) h2(c).
StructuredExpMatrix exp_ad_matrix(const ChaElement& x);

/// The product e^{ad_X} e^{t ad_Y} on the structured pattern.
StructuredExpMatrix product_matrix(const ChaElement& x, const ChaElement& y, double t);

/// M^k in closed form (geometric-ratio kernels); k = 0 gives the identity
/// pattern.
StructuredExpMatrix matrix_pow_closed(const StructuredExpMatrix& M, long long k);

/// sum_{k>=1} (I - M)^k / (k(k+1)) in closed form, by analytic continuation
/// of the scalar kernels (no convergence requirement).
StructuredSumMatrix series_sum_closed(const StructuredExpMatrix& M);

ChaElement apply(const StructuredExpMatrix& M, const ChaElement& y);
ChaElement apply(const StructuredSumMatrix& M, const ChaElement& y);

/// I - M, which lands on the sum pattern.
StructuredSumMatrix identity_minus(const StructuredExpMatrix& M);
StructuredSumMatrix multiply(const StructuredSumMatrix& A, const StructuredSumMatrix& B);
StructuredSumMatrix add(const StructuredSumMatrix& A, const StructuredSumMatrix& B);
StructuredSumMatrix scale(double lambda, const StructuredSumMatrix& A);

DenseMatrix to_dense(const StructuredExpMatrix& M);
DenseMatrix to_dense(const StructuredSumMatrix& M);

/// Dense matrix exponential by scaling and squaring with a truncated Taylor
/// kernel at norm <= 1/2, accumulated in long double.
DenseMatrix matrix_exp(const DenseMatrix& A);

} // namespace cha

#endif
