#include "cha/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace cha::kernels {

namespace {

#include "kernel_tables.inc"

// region bounds for the u-kernels: bivariate Maclaurin table inside the
// origin box, quotient of the stable f/g forms in the band around the
// c+cbar = 0 locus (there |c| resp. |cbar| >= box - band is guaranteed),
// closed bracket form elsewhere
constexpr double kOriginBox = 0.2;
constexpr double kSumBand = 0.1;

template <int N>
constexpr std::array<double, N> inv_factorials_from(int k0) {
  // 1/(k0)!, 1/(k0+1)!, ...
  std::array<double, N> out{};
  double f = 1.0;
  for (int i = 2; i <= k0; ++i) f *= i;
  out[0] = 1.0 / f;
  for (int i = 1; i < N; ++i) {
    f *= (k0 + i);
    out[i] = 1.0 / f;
  }
  return out;
}

double table_eval(const double* coef, int deg, double x, double y) {
  double xp[24], yp[24];
  xp[0] = yp[0] = 1.0;
  for (int i = 1; i <= deg; ++i) {
    xp[i] = xp[i - 1] * x;
    yp[i] = yp[i - 1] * y;
  }
  double acc = 0.0;  // highest degree first: small terms accumulate first
  for (int d = deg; d >= 0; --d) {
    const int base = d * (d + 1) / 2;
    for (int i = d; i >= 0; --i) acc += coef[base + (d - i)] * xp[i] * yp[d - i];
  }
  return acc;
}

void require_finite2(double c, double cbar, const char* who) {
  if (!std::isfinite(c) || !std::isfinite(cbar))
    throw NumericError(std::string(who) + ": non-finite input");
}

} // namespace

ScalarKernelSet::ScalarKernelSet(double radius, int degree)
    : switch_radius(radius), taylor_degree(degree) {
  if (!(radius > 0.0) || radius > 1e-2)
    throw NumericError("ScalarKernelSet: switch_radius must be in (0, 1e-2]");
  if (degree < 4)
    throw NumericError("ScalarKernelSet: taylor_degree must be >= 4");
}

double phi1(double x) {
  if (x == 0.0) return 1.0;
  return std::expm1(x) / x;
}

double phi2(double x) {
  if (std::abs(x) >= 0.25) return (std::expm1(x) - x) / (x * x);
  static constexpr auto inv = inv_factorials_from<15>(2);  // 1/2!, 1/3!, ...
  double acc = 0.0;
  for (int k = 14; k >= 0; --k) acc = acc * x + inv[k];
  return acc;
}

double tau3(double x) {
  if (std::abs(x) >= 0.5) return (2.0 + x + (x - 2.0) * std::exp(x)) / (x * x * x);
  static constexpr auto inv = inv_factorials_from<17>(3);  // 1/3!, 1/4!, ...
  double acc = 0.0;  // sum (j+1) x^j / (j+3)!
  for (int j = 16; j >= 0; --j) acc = acc * x + (j + 1) * inv[j];
  return acc;
}

double kappa(double x) {
  return std::exp(x) * phi2(-x);
}

double phi1_deriv(int k, double x) {
  if (k < 0) throw NumericError("phi1_deriv: k must be nonnegative");
  if (k == 0) return phi1(x);
  // the recurrence amplifies errors by k/|x| per step, so it is reserved
  // for |x| >= 3 where that factor stays harmless for the k used here
  if (std::abs(x) >= 3.0) {
    double d = phi1(x);
    const double ex = std::exp(x);
    for (int j = 1; j <= k; ++j) d = (ex - j * d) / x;
    return d;
  }
  // sum_j x^j / (j! (j+k+1))
  double acc = 0.0, xp = 1.0, jfact = 1.0;
  for (int j = 0; j <= 42; ++j) {
    if (j > 0) {
      jfact *= j;
      xp *= x;
    }
    const double term = xp / (jfact * (j + k + 1));
    acc += term;
    if (j > 4 && std::abs(term) < 1e-20 * std::abs(acc)) break;
  }
  return acc;
}

double phi1_div_diff(double x, double y) {
  if (std::abs(x - y) >= 0.2) return (phi1(x) - phi1(y)) / (x - y);
  const double mid = 0.5 * (x + y);
  const double h2 = 0.25 * (x - y) * (x - y);
  double acc = 0.0, hp = 1.0, fact = 1.0;  // fact = (2j+1)!
  for (int j = 0; j <= 7; ++j) {
    if (j > 0) {
      hp *= h2;
      fact *= (2 * j) * (2 * j + 1);
    }
    acc += phi1_deriv(2 * j + 1, mid) * hp / fact;
  }
  return acc;
}

double h1(double c) {
  return phi1(-c);
}

double h2(double c) {
  return std::exp(-c) * phi2(c);
}

double phi_sum(double m) {
  return -m * kappa(m) / phi1(m);
}

double psi_sum(double m) {
  const double p = phi1(m);
  return -phi2(m) / (p * p);
}

double chi_sum(double m) {
  const double p = phi1(m);
  return -tau3(m) / (p * p * p);
}

double lambda_sum(double m) {
  const double p = phi1(m);
  return -kappa(m) / (p * p);
}

double geom_ratio(double m, long long k) {
  if (k <= 0) return 0.0;
  return static_cast<double>(k) * phi1(static_cast<double>(k) * m) / phi1(m);
}

double pow_bracket(double m, long long k) {
  if (k < 2) return 0.0;
  const double em = std::exp(m);
  double acc = 0.0, p = 1.0;
  for (long long j = 0; j <= k - 2; ++j) {
    acc += static_cast<double>(j + 1) * p;
    p *= em;
  }
  return acc;
}

namespace detail {

double f_direct(double c, double cbar) {
  const double num = -std::expm1(cbar) / cbar + std::exp(cbar) * std::expm1(c) / c;
  return num / -std::expm1(c + cbar);
}

double g1_direct(double c, double cbar) {
  const double s = c + cbar;
  const double T = -std::expm1(s);
  return -std::expm1(cbar) / cbar * (1.0 / T + s * std::exp(s) / (T * T));
}

double g2_direct(double c, double cbar) {
  const double s = c + cbar;
  const double T = -std::expm1(s);
  return -std::exp(cbar) * std::expm1(c) / c * (1.0 / T + s / (T * T));
}

double f_stable(double c, double cbar) {
  return -std::exp(cbar) * phi1_div_diff(c, -cbar) / phi1(c + cbar);
}

double g1_stable(double c, double cbar) {
  const double s = c + cbar;
  const double p = phi1(s);
  return -phi1(cbar) * kappa(s) / (p * p);
}

double g2_stable(double c, double cbar) {
  const double s = c + cbar;
  const double p = phi1(s);
  return std::exp(cbar) * phi1(c) * phi2(s) / (p * p);
}

} // namespace detail

namespace {

bool far_from_loci(double c, double cbar, double radius) {
  return std::abs(c) >= radius && std::abs(cbar) >= radius &&
         std::abs(c + cbar) >= radius;
}

} // namespace

double f_coeff(double c, double cbar, const ScalarKernelSet& ks) {
  require_finite2(c, cbar, "f_coeff");
  if (far_from_loci(c, cbar, ks.switch_radius)) return detail::f_direct(c, cbar);
  return detail::f_stable(c, cbar);
}

double g1_coeff(double c, double cbar, const ScalarKernelSet& ks) {
  require_finite2(c, cbar, "g1_coeff");
  if (far_from_loci(c, cbar, ks.switch_radius)) return detail::g1_direct(c, cbar);
  return detail::g1_stable(c, cbar);
}

double g2_coeff(double c, double cbar, const ScalarKernelSet& ks) {
  require_finite2(c, cbar, "g2_coeff");
  if (far_from_loci(c, cbar, ks.switch_radius)) return detail::g2_direct(c, cbar);
  return detail::g2_stable(c, cbar);
}

double u1_coeff(double c, double cbar) {
  require_finite2(c, cbar, "u1_coeff");
  const double s = c + cbar;
  if (std::max(std::abs(c), std::abs(cbar)) <= kOriginBox)
    return table_eval(u1_coef, u1_deg, c, cbar);
  if (std::abs(s) <= kSumBand)
    return (detail::f_stable(c, cbar) - detail::g1_stable(c, cbar)) / c;
  const double t = std::expm1(s);  // (1 - e^s)^2 == t^2
  const double p1c = phi1(c);
  return std::exp(cbar) *
         (cbar * phi1(cbar) * kappa(c) + std::exp(c) * phi1(cbar) -
          std::exp(cbar) * p1c * p1c) /
         (t * t);
}

double u2_coeff(double c, double cbar) {
  require_finite2(c, cbar, "u2_coeff");
  const double s = c + cbar;
  if (std::max(std::abs(c), std::abs(cbar)) <= kOriginBox)
    return table_eval(u2_coef, u2_deg, c, cbar);
  if (std::abs(s) <= kSumBand)
    return (detail::f_stable(c, cbar) + detail::g2_stable(c, cbar)) / cbar;
  const double t = std::expm1(s);
  const double p1cb = phi1(cbar);
  return -(c * phi1(c) * kappa(cbar) + std::exp(cbar) * phi1(c) -
           std::exp(c) * p1cb * p1cb) /
         (t * t);
}

} // namespace cha::kernels
