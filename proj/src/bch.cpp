#include "cha/bch.hpp"

namespace cha {

ChaElement bch(const ChaElement& x, const ChaElement& y,
               const kernels::ScalarKernelSet& ks) {
  detail::require_same_n(x, y);
  detail::require_finite(x, "bch");
  detail::require_finite(y, "bch");
  const int n = x.n();
  const ChaElement k = commutator(x, y);
  const double f = kernels::f_coeff(x.c, y.c, ks);
  const double u1 = kernels::u1_coeff(x.c, y.c);
  const double u2 = kernels::u2_coeff(x.c, y.c);
  double corr = 0.0;
  for (int i = 0; i < n; ++i)
    corr += (y.a[i] * x.c - x.a[i] * y.c) * (u1 * x.b[i] + u2 * y.b[i]);
  ChaElement out = ChaElement::zero(n);
  out.z = x.z + y.z - f * k.z + corr;
  for (int i = 0; i < n; ++i) {
    out.a[i] = x.a[i] + y.a[i] - f * k.a[i];
    out.b[i] = x.b[i] + y.b[i];  // exact: the correction has no p component
  }
  out.c = x.c + y.c;             // exact: the correction has no S component
  return out;
}

ChaElement bch_heisenberg(const ChaElement& x, const ChaElement& y) {
  detail::require_same_n(x, y);
  return add(add(x, y), scale(0.5, commutator(x, y)));
}

ChaElement bch_first_order(const ChaElement& x, const ChaElement& y) {
  detail::require_same_n(x, y);
  const ChaElement k = commutator(x, y);
  ChaElement out = add(add(x, y), scale(0.5 - (x.c - y.c) / 12.0, k));
  double corr = 0.0;
  for (int i = 0; i < x.n(); ++i)
    corr += (y.a[i] * x.c - x.a[i] * y.c) * (x.b[i] - y.b[i]);
  out.z -= corr / 12.0;
  return out;
}

} // namespace cha
