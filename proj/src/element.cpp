#include "cha/element.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

namespace cha {

namespace detail {

void require_same_n(const ChaElement& x, const ChaElement& y) {
  if (x.n() != y.n())
    throw DimensionError("mismatched algebra dimensions: n=" +
                         std::to_string(x.n()) + " vs n=" + std::to_string(y.n()));
}

void require_finite(const ChaElement& x, const char* who) {
  bool ok = std::isfinite(x.z) && std::isfinite(x.c);
  for (double v : x.a) ok = ok && std::isfinite(v);
  for (double v : x.b) ok = ok && std::isfinite(v);
  if (!ok) throw NumericError(std::string(who) + ": non-finite element entry");
}

} // namespace detail

ChaElement::ChaElement(double z_, std::vector<double> a_, std::vector<double> b_, double c_)
    : z(z_), a(std::move(a_)), b(std::move(b_)), c(c_) {
  if (a.empty() || a.size() != b.size())
    throw DimensionError("ChaElement: a and b must have equal length n >= 1");
  detail::require_finite(*this, "ChaElement");
}

ChaElement ChaElement::zero(int n) {
  if (n < 1) throw DimensionError("ChaElement::zero: n must be >= 1");
  return ChaElement(0.0, std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), 0.0);
}

double ChaElement::inf_norm() const {
  double m = std::max(std::abs(z), std::abs(c));
  for (double v : a) m = std::max(m, std::abs(v));
  for (double v : b) m = std::max(m, std::abs(v));
  return m;
}

bool ChaElement::is_zero() const {
  return inf_norm() == 0.0;
}

ChaElement basis_element(BasisIndex idx, int n) {
  ChaElement e = ChaElement::zero(n);
  switch (idx.tag) {
    case BasisIndex::Tag::One: e.z = 1.0; break;
    case BasisIndex::Tag::S: e.c = 1.0; break;
    case BasisIndex::Tag::Q:
      if (idx.i < 1 || idx.i > n) throw DimensionError("basis_element: index out of range");
      e.a[idx.i - 1] = 1.0;
      break;
    case BasisIndex::Tag::P:
      if (idx.i < 1 || idx.i > n) throw DimensionError("basis_element: index out of range");
      e.b[idx.i - 1] = 1.0;
      break;
  }
  return e;
}

std::vector<ChaElement> basis(int n) {
  std::vector<ChaElement> out;
  out.reserve(2 * n + 2);
  out.push_back(basis_element({BasisIndex::Tag::One, 1}, n));
  for (int i = 1; i <= n; ++i) out.push_back(basis_element({BasisIndex::Tag::Q, i}, n));
  for (int i = 1; i <= n; ++i) out.push_back(basis_element({BasisIndex::Tag::P, i}, n));
  out.push_back(basis_element({BasisIndex::Tag::S, 1}, n));
  return out;
}

ChaElement add(const ChaElement& x, const ChaElement& y) {
  detail::require_same_n(x, y);
  ChaElement out = x;
  out.z += y.z;
  out.c += y.c;
  for (int i = 0; i < x.n(); ++i) {
    out.a[i] += y.a[i];
    out.b[i] += y.b[i];
  }
  return out;
}

ChaElement scale(double lambda, const ChaElement& x) {
  ChaElement out = x;
  out.z *= lambda;
  out.c *= lambda;
  for (int i = 0; i < x.n(); ++i) {
    out.a[i] *= lambda;
    out.b[i] *= lambda;
  }
  return out;
}

ChaElement commutator(const ChaElement& x, const ChaElement& y) {
  detail::require_same_n(x, y);
  const int n = x.n();
  double z1 = x.z * y.c - x.c * y.z;
  for (int i = 0; i < n; ++i) z1 += y.a[i] * x.b[i] - x.a[i] * y.b[i];
  ChaElement out = ChaElement::zero(n);
  out.z = z1;
  for (int i = 0; i < n; ++i) out.a[i] = x.a[i] * y.c - x.c * y.a[i];
  return out;  // b and c stay exactly zero
}

ChaElement ad_pow(const ChaElement& x, const ChaElement& y, int k) {
  detail::require_same_n(x, y);
  if (k < 0) throw NumericError("ad_pow: k must be nonnegative");
  if (k == 0) return y;
  ChaElement first = commutator(x, y);
  if (k == 1) return first;
  // a_k = (-c)^{k-1} a_1,  z_k = (-c)^{k-1} z_1 + (k-1)(-c)^{k-2} (a_1 . b)
  double a1_dot_b = 0.0;
  for (int i = 0; i < x.n(); ++i) a1_dot_b += first.a[i] * x.b[i];
  const double mc = -x.c;
  double p2 = 1.0;                       // (-c)^{k-2}
  for (int j = 0; j < k - 2; ++j) p2 *= mc;
  const double p1 = p2 * mc;             // (-c)^{k-1}
  ChaElement out = ChaElement::zero(x.n());
  out.z = p1 * first.z + p2 * (k - 1) * a1_dot_b;
  for (int i = 0; i < x.n(); ++i) out.a[i] = p1 * first.a[i];
  return out;
}

bool is_central(const ChaElement& x, double tol) {
  if (tol < 0) throw NumericError("is_central: tol must be nonnegative");
  for (const ChaElement& e : basis(x.n()))
    if (commutator(x, e).inf_norm() > tol) return false;
  return true;
}

bool in_heisenberg_ideal(const ChaElement& x) {
  return x.c == 0.0;
}

} // namespace cha
