#ifndef CHA_KERNELS_HPP
#define CHA_KERNELS_HPP

#include "cha/errors.hpp"

namespace cha::kernels {

/// Evaluation policy for the bivariate coefficient kernels f, g1, g2:
/// the textbook formulas are used when all of |c|, |cbar|, |c+cbar| are at
/// least switch_radius; closer to a singular locus the evaluation falls back
/// to series-based forms whose truncation error at the radius is < 1e-15.
struct ScalarKernelSet {
  double switch_radius = 1e-3;
  int taylor_degree = 8;

  ScalarKernelSet() = default;
  ScalarKernelSet(double radius, int degree);
};

// ---- entire univariate kernels ----

/// (e^x - 1)/x; phi1(0) = 1. Stable for all x via expm1.
double phi1(double x);

/// (e^x - 1 - x)/x^2; phi2(0) = 1/2.
double phi2(double x);

/// (2 - 2 e^x + x + x e^x)/x^3; tau3(0) = 1/6.
double tau3(double x);

/// (1 + (x-1) e^x)/x^2 == phi1'(x); kappa(0) = 1/2.
double kappa(double x);

/// k-th derivative of phi1.
double phi1_deriv(int k, double x);

/// Divided difference (phi1(x) - phi1(y))/(x - y), continuous at x == y
/// where it equals phi1'(x).
double phi1_div_diff(double x, double y);

// ---- scalar kernels of the structured exponential matrices ----

/// (1 - e^{-c})/c; h1(0) = 1.
double h1(double c);

/// (1 - c e^{-c} - e^{-c})/c^2; h2(0) = 1/2.
double h2(double c);

/// (1 - e^m + m e^m)/(1 - e^m): diagonal of the summed series; -> 0 at m=0.
double phi_sum(double m);

/// (1 + m - e^m)/(1 - e^m)^2: 12-block weight; -> -1/2 at m=0.
double psi_sum(double m);

/// [2(1-e^m) + m(1+e^m)]/(1-e^m)^3: 14-block cross weight; -> -1/6 at m=0.
double chi_sum(double m);

/// -phi_sum(m)/(1 - e^m): 13/24/14-block weight; -> -1/2 at m=0.
double lambda_sum(double m);

/// (1 - e^{km})/(1 - e^m); -> k at m=0.
double geom_ratio(double m, long long k);

/// [1 - k e^{(k-1)m} + (k-1) e^{km}]/(1 - e^m)^2; -> k(k-1)/2 at m=0.
/// Evaluated as the finite sum sum_{j=0}^{k-2} (j+1) e^{jm} (exact identity,
/// no cancellation).
double pow_bracket(double m, long long k);

// ---- BCH coefficient kernels ----
// All three are finite for every real (c, cbar): the apparent poles at
// c = 0, cbar = 0 and c + cbar = 0 are removable.

double f_coeff(double c, double cbar, const ScalarKernelSet& ks = {});
double g1_coeff(double c, double cbar, const ScalarKernelSet& ks = {});
double g2_coeff(double c, double cbar, const ScalarKernelSet& ks = {});

/// (f - g1)/c with the removable singularity at c = 0 lifted; the weight of
/// b in the central correction term of the product formula.
double u1_coeff(double c, double cbar);

/// (f + g2)/cbar likewise; the weight of bbar.
double u2_coeff(double c, double cbar);

namespace detail {
// textbook formulas, undefined on the singular loci; exposed for the
// switch-boundary consistency tests
double f_direct(double c, double cbar);
double g1_direct(double c, double cbar);
double g2_direct(double c, double cbar);
// series-based forms, valid everywhere
double f_stable(double c, double cbar);
double g1_stable(double c, double cbar);
double g2_stable(double c, double cbar);
} // namespace detail

} // namespace cha::kernels

#endif
