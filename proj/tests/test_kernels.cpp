#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "cha/kernels.hpp"

using namespace cha;
using namespace cha::kernels;

namespace {

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// 50-digit references for f, g1, g2 and the bracket weights
// u1 = (f-g1)/c, u2 = (f+g2)/cbar (mpmath, exact-rational inputs)
struct KernelRef {
  double c, cbar, f, g1, g2, u1, u2;
};
constexpr KernelRef kRefs[] = {
    {0.7, 0.25, -0.45622932737971382, -0.39341022098951275, 0.47013120076273180,
     -0.089741580557430089, 0.055607493532071948},
    {1.0, -0.6, -0.38841574234367587, -0.32612411397717356, 0.35797817351959580,
     -0.062291628366502306, 0.050729281373466777},
    {-0.3, 1.5, -0.66840644821923683, -0.71752726232462124, 0.80569107014574822,
     -0.16373604701794802, 0.091523081284340929},
    {3.0, 2.0, -0.29721570687319677, -0.087417332046148859, 0.30807021026665239,
     -0.069932791609015970, 0.0054272516967278121},
    {-2.5, -1.5, -0.44412179243672357, -0.48820340909193516, 0.25659113338211421,
     -0.017632646662084634, 0.12502043936973957},
    {0.2, 0.2, -0.49833997312477909, -0.48009734368150794, 0.51327577486699104,
     -0.091213147216355750, 0.074679008711059768},
    {0.001, 0.7, -0.55774750047867679, -0.55763257121208095, 0.61464526994818050,
     -0.11492926659584705, 0.081282527813576721},
};

} // namespace

TEST_CASE("univariate kernels: values and switch continuity") {
  CHECK(phi1(0.0) == 1.0);
  CHECK(close(phi1(1.0), std::exp(1.0) - 1.0, 1e-15));
  CHECK(close(phi2(0.0), 0.5, 0.0));
  CHECK(close(tau3(0.0), 1.0 / 6.0, 0.0));
  CHECK(close(kappa(0.0), 0.5, 1e-16));
  CHECK(close(kappa(1.0), 1.0, 2e-16));  // (1 + 0*e)/1

  // Taylor vs direct across the internal switch radii
  for (double x : {0.249, 0.251, -0.249, -0.251}) {
    const double direct = (std::expm1(x) - x) / (x * x);
    CHECK(close(phi2(x), direct, 1e-14));
  }
  for (double x : {0.499, 0.501, -0.499, -0.501}) {
    const double direct = (2.0 + x + (x - 2.0) * std::exp(x)) / (x * x * x);
    CHECK(close(tau3(x), direct, 1e-13));
  }
}

TEST_CASE("phi1 derivatives and divided difference") {
  CHECK(close(phi1_deriv(0, 0.7), phi1(0.7), 0.0));
  CHECK(close(phi1_deriv(1, 0.0), 0.5, 1e-16));
  CHECK(close(phi1_deriv(2, 0.0), 1.0 / 3.0, 1e-16));
  for (double x : {-2.0, -0.3, 0.26, 1.7})
    CHECK(close(phi1_deriv(1, x), kappa(x), 1e-14));
  // series path vs a test-local recurrence evaluation at the same points
  for (double x : {-2.9, -1.0, 0.5, 2.9}) {
    double d = phi1(x);
    const double ex = std::exp(x);
    for (int j = 1; j <= 3; ++j) d = (ex - j * d) / x;
    CHECK(close(phi1_deriv(3, x), d, 5e-13));
  }
  // recurrence path vs a test-local series evaluation at the same points
  for (double x : {-3.5, 3.2}) {
    for (int k : {1, 5}) {
      double acc = 0.0, xp = 1.0, jf = 1.0;
      for (int j = 0; j <= 60; ++j) {
        if (j > 0) {
          jf *= j;
          xp *= x;
        }
        acc += xp / (jf * (j + k + 1));
      }
      CHECK(close(phi1_deriv(k, x), acc, 1e-12));
    }
  }

  CHECK(close(phi1_div_diff(0.9, 0.9), kappa(0.9), 1e-15));
  CHECK(close(phi1_div_diff(1.3, -0.4), (phi1(1.3) - phi1(-0.4)) / 1.7, 1e-15));
  CHECK(close(phi1_div_diff(0.5, 0.3), phi1_div_diff(0.3, 0.5), 0.0));
  // midpoint-series path against the plain quotient at the same point,
  // just inside the gap switch
  {
    const double x = 0.7, y = 0.7 - 0.1999;
    CHECK(close(phi1_div_diff(x, y), (phi1(x) - phi1(y)) / (x - y), 2e-14));
  }
}

TEST_CASE("structured-matrix kernels: limits and direct agreement") {
  CHECK(h1(0.0) == 1.0);
  CHECK(close(h2(0.0), 0.5, 0.0));
  CHECK(close(h1(2.0), (1.0 - std::exp(-2.0)) / 2.0, 1e-16));
  CHECK(close(h2(2.0), (1.0 - 2.0 * std::exp(-2.0) - std::exp(-2.0)) / 4.0, 1e-16));

  CHECK(phi_sum(0.0) == 0.0);
  CHECK(close(psi_sum(0.0), -0.5, 0.0));
  CHECK(close(chi_sum(0.0), -1.0 / 6.0, 0.0));
  CHECK(close(lambda_sum(0.0), -0.5, 0.0));
  for (double m : {-1.4, -0.6, 0.8, 2.1}) {
    const double em = std::exp(m);
    CHECK(close(phi_sum(m), (1.0 - em + m * em) / (1.0 - em), 1e-14));
    CHECK(close(psi_sum(m), (1.0 + m - em) / ((1.0 - em) * (1.0 - em)), 1e-14));
    CHECK(close(chi_sum(m),
                (2.0 * (1.0 - em) + m * (1.0 + em)) / std::pow(1.0 - em, 3), 1e-13));
    CHECK(close(lambda_sum(m), -phi_sum(m) / (1.0 - em), 1e-14));
  }

  CHECK(geom_ratio(0.0, 5) == 5.0);
  CHECK(geom_ratio(0.3, 0) == 0.0);
  CHECK(close(geom_ratio(0.8, 7),
              (1.0 - std::exp(5.6)) / (1.0 - std::exp(0.8)), 1e-12 * 200.0));
  CHECK(pow_bracket(0.0, 6) == 15.0);  // k(k-1)/2
  CHECK(pow_bracket(0.3, 1) == 0.0);
  {
    const double m = 0.8, em = std::exp(m);
    const double direct =
        (1.0 - 5.0 * std::exp(4 * m) + 4.0 * std::exp(5 * m)) / ((1.0 - em) * (1.0 - em));
    CHECK(close(pow_bracket(m, 5), direct, 1e-12 * std::abs(direct)));
  }
}

TEST_CASE("f, g1, g2, u1, u2 against 50-digit references") {
  for (const auto& r : kRefs) {
    CAPTURE(r.c);
    CAPTURE(r.cbar);
    CHECK(close(f_coeff(r.c, r.cbar), r.f, 5e-15));
    CHECK(close(g1_coeff(r.c, r.cbar), r.g1, 5e-15));
    CHECK(close(g2_coeff(r.c, r.cbar), r.g2, 5e-15));
    CHECK(close(u1_coeff(r.c, r.cbar), r.u1, 5e-15));
    CHECK(close(u2_coeff(r.c, r.cbar), r.u2, 5e-15));
  }
}

TEST_CASE("values on the singular loci") {
  // c + cbar = 0 (exact limits computed symbolically)
  CHECK(close(f_coeff(1.0, -1.0), -0.36787944117144232, 3e-16));
  CHECK(close(g1_coeff(1.0, -1.0), -0.31606027941427884, 3e-16));
  CHECK(close(g2_coeff(1.0, -1.0), 0.31606027941427884, 3e-16));
  CHECK(close(u1_coeff(1.0, -1.0), -0.05181916175716348, 1e-15));
  CHECK(close(u2_coeff(1.0, -1.0), 0.05181916175716348, 1e-15));
  CHECK(close(f_coeff(3.0, -3.0), -0.22775411870754044, 5e-16));
  CHECK(close(u1_coeff(3.0, -3.0), -0.02312843225628370, 1e-15));
  CHECK(close(u1_coeff(-2.0, 2.0), -0.25, 1e-15));
  CHECK(close(u2_coeff(-2.0, 2.0), 0.25, 1e-15));

  // c = 0
  CHECK(close(f_coeff(0.0, 2.0), -0.65651764274966565, 5e-16));
  CHECK(close(g1_coeff(0.0, 2.0), -0.65651764274966565, 5e-16));
  CHECK(close(u1_coeff(0.0, 2.0), -0.18101541524157762, 1e-15));
  CHECK(close(u2_coeff(0.0, 2.0), 0.068984584758422383, 1e-15));
  CHECK(close(u1_coeff(0.0, -1.3), -0.039485963685915339, 1e-15));
  CHECK(close(u2_coeff(0.0, -1.3), 0.076737428914465661, 1e-15));

  // cbar = 0
  CHECK(close(f_coeff(2.0, 0.0), -0.34348235725033435, 5e-16));
  CHECK(close(u1_coeff(2.0, 0.0), -0.068984584758422383, 1e-15));
  CHECK(close(u2_coeff(2.0, 0.0), 0.024497772491911965, 1e-15));
  CHECK(close(u1_coeff(-1.3, 0.0), -0.076737428914465661, 1e-15));
  CHECK(close(u2_coeff(-1.3, 0.0), 0.14488571497046364, 1e-15));

  // origin
  CHECK(f_coeff(0.0, 0.0) == -0.5);
  CHECK(close(u1_coeff(0.0, 0.0), -1.0 / 12.0, 2e-17));
  CHECK(close(u2_coeff(0.0, 0.0), 1.0 / 12.0, 2e-17));
  CHECK(close(g1_coeff(0.0, 0.0), -0.5, 1e-16));
  CHECK(close(g2_coeff(0.0, 0.0), 0.5, 1e-16));
}

TEST_CASE("first-order behavior near the origin") {
  // f = -1/2 + (c - cbar)/12 + O(2)
  for (auto [c, cb] : {std::pair{1e-4, 2e-4}, {-3e-4, 1e-4}, {2e-4, 2e-4}}) {
    const double lin = -0.5 + (c - cb) / 12.0;
    CHECK(close(f_coeff(c, cb), lin, 1e-8));
  }
  // and the linear coefficient itself to higher accuracy
  const double fd = (f_coeff(1e-5, 0.0) - f_coeff(-1e-5, 0.0)) / 2e-5;
  CHECK(close(fd, 1.0 / 12.0, 1e-6));
}

TEST_CASE("switch-radius boundary consistency (direct vs stable)") {
  const ScalarKernelSet ks;  // radius 1e-3
  // points whose distance to a locus is exactly at / just inside the radius
  const std::pair<double, double> pts[] = {
      {1e-3, 0.7}, {0.7, 1e-3}, {0.6, -0.6 + 1e-3}, {-1e-3, -0.4}, {0.35, -0.35 - 1e-3}};
  for (auto [c, cb] : pts) {
    CAPTURE(c);
    CAPTURE(cb);
    CHECK(close(kernels::detail::f_direct(c, cb), kernels::detail::f_stable(c, cb), 1e-12));
    CHECK(close(kernels::detail::g1_direct(c, cb), kernels::detail::g1_stable(c, cb), 1e-12));
    CHECK(close(kernels::detail::g2_direct(c, cb), kernels::detail::g2_stable(c, cb), 1e-12));
  }
  // f_coeff switches paths across the radius without a visible step
  // (the true gradient accounts for ~2e-10 of the difference)
  CHECK(close(f_coeff(1e-3 - 1e-9, 0.7, ks), f_coeff(1e-3 + 1e-9, 0.7, ks), 1e-8));
}

TEST_CASE("u-kernel evaluation paths agree at the same points") {
  using kernels::detail::f_stable;
  using kernels::detail::g1_stable;
  using kernels::detail::g2_stable;
  // inside the origin box the table must match the quotient of the stable
  // f/g forms evaluated at the very same point
  for (auto [c, cb] : {std::pair{0.15, 0.1}, {0.2, 0.1}, {0.2, -0.15},
                       {-0.18, 0.2}, {-0.2, -0.2}, {0.12, -0.2}}) {
    CAPTURE(c);
    CAPTURE(cb);
    CHECK(close(u1_coeff(c, cb), (f_stable(c, cb) - g1_stable(c, cb)) / c, 1e-13));
    CHECK(close(u2_coeff(c, cb), (f_stable(c, cb) + g2_stable(c, cb)) / cb, 1e-13));
  }
  // in the closed-bracket region the same quotient is still the referee
  for (auto [c, cb] : {std::pair{1.5, -1.29}, {-0.7, 0.9}, {0.201, 0.1},
                       {2.4, 0.7}, {-1.1, -0.6}}) {
    CAPTURE(c);
    CAPTURE(cb);
    CHECK(close(u1_coeff(c, cb), (f_stable(c, cb) - g1_stable(c, cb)) / c, 1e-12));
    CHECK(close(u2_coeff(c, cb), (f_stable(c, cb) + g2_stable(c, cb)) / cb, 1e-12));
  }
  // stepping across the region boundaries shows no jump beyond the gradient
  CHECK(close(u1_coeff(0.2, 0.1), u1_coeff(0.2 + 2e-9, 0.1), 1e-8));
  CHECK(close(u2_coeff(0.2, 0.1), u2_coeff(0.2 + 2e-9, 0.1), 1e-8));
  CHECK(close(u1_coeff(1.5, -1.4), u1_coeff(1.5, -1.4 + 2e-9), 1e-8));
  CHECK(close(u2_coeff(-0.18, 0.2), u2_coeff(-0.18, 0.2 + 2e-9), 1e-8));
}

TEST_CASE("straddling a removable singularity") {
  // stable value on the locus vs the raw formula a step away
  CHECK(close(f_coeff(1.0, -1.0), kernels::detail::f_direct(1.0, -1.0 + 1e-6), 1e-6));
  CHECK(close(g1_coeff(1.0, -1.0), kernels::detail::g1_direct(1.0, -1.0 + 1e-6), 1e-6));
  CHECK(close(g2_coeff(1.0, -1.0), kernels::detail::g2_direct(1.0, -1.0 + 1e-6), 1e-6));
  // frozen direct-formula values for the shifted point
  CHECK(close(kernels::detail::f_direct(1.0, -1.0 + 1e-6), -0.36787949299060322, 1e-9));
  CHECK(close(kernels::detail::g1_direct(1.0, -1.0 + 1e-6), -0.31606030618140731, 1e-9));
  CHECK(close(kernels::detail::g2_direct(1.0, -1.0 + 1e-6), 0.31606038476770531, 1e-9));
}

TEST_CASE("product-reversal symmetry") {
  // (e^X e^Y)^{-1} = e^{-Y} e^{-X} forces f(c,cbar) = f(-cbar,-c) and
  // u2(c,cbar) = -u1(-cbar,-c)
  for (double c : {-2.0, -0.15, 0.0, 0.1, 0.9, 3.0})
    for (double cb : {-1.7, -0.2, 0.0, 0.05, 1.3}) {
      CAPTURE(c);
      CAPTURE(cb);
      CHECK(close(f_coeff(c, cb), f_coeff(-cb, -c), 1e-14));
      CHECK(close(u2_coeff(c, cb), -u1_coeff(-cb, -c), 1e-14));
    }
}

TEST_CASE("kernel error handling") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS((void)f_coeff(nan, 0.0), NumericError);
  CHECK_THROWS_AS((void)u1_coeff(0.0, nan), NumericError);
  CHECK_THROWS_AS(ScalarKernelSet(0.1, 8), NumericError);   // radius > 1e-2
  CHECK_THROWS_AS(ScalarKernelSet(1e-3, 3), NumericError);  // degree < 4
  CHECK_NOTHROW(ScalarKernelSet(1e-3, 8));
}
