#include "cha/adjoint.hpp"

#include <cmath>

#include "cha/kernels.hpp"

namespace cha {

namespace {

using kernels::h1;
using kernels::h2;

void require_same_n(const StructuredExpMatrix& M, int n, const char* who) {
  if (M.n() != n || static_cast<int>(M.m13.size()) != n ||
      static_cast<int>(M.m24.size()) != n)
    throw DimensionError(std::string(who) + ": inconsistent block sizes");
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

} // namespace

StructuredExpMatrix StructuredExpMatrix::identity(int n) {
  StructuredExpMatrix M;
  M.m = 0.0;
  M.m12.assign(n, 0.0);
  M.m13.assign(n, 0.0);
  M.m24.assign(n, 0.0);
  M.m14 = 0.0;
  return M;
}

Eigen::VectorXd coords(const ChaElement& x) {
  const int n = x.n();
  Eigen::VectorXd v(2 * n + 2);
  v(0) = x.z;
  for (int i = 0; i < n; ++i) v(1 + i) = x.a[i];
  for (int i = 0; i < n; ++i) v(1 + n + i) = x.b[i];
  v(2 * n + 1) = x.c;
  return v;
}

ChaElement element_from_coords(const Eigen::VectorXd& v) {
  const int d = static_cast<int>(v.size());
  if (d < 4 || d % 2 != 0)
    throw DimensionError("element_from_coords: length must be 2n+2 with n >= 1");
  const int n = (d - 2) / 2;
  ChaElement x = ChaElement::zero(n);
  x.z = v(0);
  for (int i = 0; i < n; ++i) x.a[i] = v(1 + i);
  for (int i = 0; i < n; ++i) x.b[i] = v(1 + n + i);
  x.c = v(2 * n + 1);
  return x;
}

DenseMatrix ad_matrix(const ChaElement& x) {
  const int n = x.n();
  const int d = 2 * n + 2;
  DenseMatrix L = DenseMatrix::Zero(d, d);
  // row 0: z-component of [x, .]; rows 1..n: a-components
  L(0, 0) = -x.c;
  for (int j = 0; j < n; ++j) {
    L(0, 1 + j) = x.b[j];
    L(0, 1 + n + j) = -x.a[j];
  }
  L(0, d - 1) = x.z;
  for (int i = 0; i < n; ++i) {
    L(1 + i, 1 + i) = -x.c;
    L(1 + i, d - 1) = x.a[i];
  }
  return L;
}

ChaElement exp_ad_apply(const ChaElement& x, const ChaElement& y) {
  detail::require_same_n(x, y);
  const int n = x.n();
  const double emc = std::exp(-x.c);
  const double k1 = h1(x.c), k2 = h2(x.c);
  ChaElement out = y;
  const double ab = dot(x.a, x.b);
  double zinf = y.z * emc + dot(y.a, x.b) * emc - dot(x.a, y.b) * k1 +
                y.c * (x.z * k1 + ab * k2);
  out.z = zinf;
  for (int i = 0; i < n; ++i) out.a[i] = y.a[i] * emc + x.a[i] * y.c * k1;
  return out;  // b, c pass through
}

StructuredExpMatrix exp_ad_matrix(const ChaElement& x) {
  const int n = x.n();
  StructuredExpMatrix M = StructuredExpMatrix::identity(n);
  const double emc = std::exp(-x.c);
  const double k1 = h1(x.c), k2 = h2(x.c);
  M.m = -x.c;
  for (int i = 0; i < n; ++i) {
    M.m12[i] = x.b[i] * emc;
    M.m13[i] = -x.a[i] * k1;
    M.m24[i] = x.a[i] * k1;
  }
  M.m14 = x.z * k1 + dot(x.a, x.b) * k2;
  return M;
}

StructuredExpMatrix product_matrix(const ChaElement& x, const ChaElement& y, double t) {
  detail::require_same_n(x, y);
  const int n = x.n();
  StructuredExpMatrix M = StructuredExpMatrix::identity(n);
  const double emc = std::exp(-x.c);
  const double k1x = h1(x.c), k2x = h2(x.c);
  const double k1y = t * h1(t * y.c);          // (1 - e^{-t cbar})/cbar
  const double k2y = t * t * h2(t * y.c);      // (1 - t cbar e^{-t cbar} - e^{-t cbar})/cbar^2
  M.m = -x.c - t * y.c;
  const double em = std::exp(M.m);
  for (int i = 0; i < n; ++i) {
    M.m12[i] = em * (x.b[i] + t * y.b[i]);
    M.m13[i] = -x.a[i] * k1x - y.a[i] * emc * k1y;
    M.m24[i] = x.a[i] * k1x + y.a[i] * emc * k1y;
  }
  M.m14 = x.z * k1x + dot(x.a, x.b) * k2x +
          emc * (y.z * k1y + dot(y.a, y.b) * k2y + dot(y.a, x.b) * k1y);
  return M;
}

StructuredExpMatrix matrix_pow_closed(const StructuredExpMatrix& M, long long k) {
  if (k < 0) throw NumericError("matrix_pow_closed: k must be nonnegative");
  const int n = M.n();
  StructuredExpMatrix out = StructuredExpMatrix::identity(n);
  if (k == 0) return out;
  const double ek1m = std::exp(static_cast<double>(k - 1) * M.m);
  const double gr = kernels::geom_ratio(M.m, k);
  const double br = kernels::pow_bracket(M.m, k);
  out.m = static_cast<double>(k) * M.m;
  for (int i = 0; i < n; ++i) {
    out.m12[i] = static_cast<double>(k) * ek1m * M.m12[i];
    out.m13[i] = gr * M.m13[i];
    out.m24[i] = gr * M.m24[i];
  }
  out.m14 = gr * M.m14 + br * dot(M.m12, M.m24);
  return out;
}

StructuredSumMatrix series_sum_closed(const StructuredExpMatrix& M) {
  const int n = M.n();
  StructuredSumMatrix out;
  out.m12.assign(n, 0.0);
  out.m13.assign(n, 0.0);
  out.m24.assign(n, 0.0);
  const double ps = kernels::psi_sum(M.m);
  const double lm = kernels::lambda_sum(M.m);
  const double ch = kernels::chi_sum(M.m);
  out.diag = kernels::phi_sum(M.m);
  for (int i = 0; i < n; ++i) {
    out.m12[i] = ps * M.m12[i];
    out.m13[i] = lm * M.m13[i];
    out.m24[i] = lm * M.m24[i];
  }
  out.m14 = lm * M.m14 - ch * dot(M.m12, M.m24);
  return out;
}

ChaElement apply(const StructuredExpMatrix& M, const ChaElement& y) {
  require_same_n(M, y.n(), "apply");
  const int n = y.n();
  const double em = std::exp(M.m);
  ChaElement out = y;
  out.z = em * y.z + dot(M.m12, y.a) + dot(M.m13, y.b) + M.m14 * y.c;
  for (int i = 0; i < n; ++i) out.a[i] = em * y.a[i] + M.m24[i] * y.c;
  return out;  // p and S rows are the identity
}

ChaElement apply(const StructuredSumMatrix& M, const ChaElement& y) {
  if (M.n() != y.n()) throw DimensionError("apply: mismatched sizes");
  const int n = y.n();
  ChaElement out = ChaElement::zero(n);
  out.z = M.diag * y.z + dot(M.m12, y.a) + dot(M.m13, y.b) + M.m14 * y.c;
  for (int i = 0; i < n; ++i) out.a[i] = M.diag * y.a[i] + M.m24[i] * y.c;
  return out;  // p and S rows are zero
}

StructuredSumMatrix identity_minus(const StructuredExpMatrix& M) {
  StructuredSumMatrix out;
  out.diag = -std::expm1(M.m);
  out.m12 = M.m12;
  out.m13 = M.m13;
  out.m24 = M.m24;
  for (double& v : out.m12) v = -v;
  for (double& v : out.m13) v = -v;
  for (double& v : out.m24) v = -v;
  out.m14 = -M.m14;
  return out;
}

StructuredSumMatrix multiply(const StructuredSumMatrix& A, const StructuredSumMatrix& B) {
  if (A.n() != B.n()) throw DimensionError("multiply: mismatched sizes");
  const int n = A.n();
  StructuredSumMatrix out;
  out.diag = A.diag * B.diag;
  out.m12.resize(n);
  out.m13.resize(n);
  out.m24.resize(n);
  for (int i = 0; i < n; ++i) {
    out.m12[i] = A.diag * B.m12[i] + A.m12[i] * B.diag;
    out.m13[i] = A.diag * B.m13[i];     // B's p-block diagonal is zero
    out.m24[i] = A.diag * B.m24[i];     // B's S-block diagonal is zero
  }
  out.m14 = A.diag * B.m14 + dot(A.m12, B.m24);
  return out;
}

StructuredSumMatrix add(const StructuredSumMatrix& A, const StructuredSumMatrix& B) {
  if (A.n() != B.n()) throw DimensionError("add: mismatched sizes");
  StructuredSumMatrix out = A;
  out.diag += B.diag;
  out.m14 += B.m14;
  for (int i = 0; i < A.n(); ++i) {
    out.m12[i] += B.m12[i];
    out.m13[i] += B.m13[i];
    out.m24[i] += B.m24[i];
  }
  return out;
}

StructuredSumMatrix scale(double lambda, const StructuredSumMatrix& A) {
  StructuredSumMatrix out = A;
  out.diag *= lambda;
  out.m14 *= lambda;
  for (int i = 0; i < A.n(); ++i) {
    out.m12[i] *= lambda;
    out.m13[i] *= lambda;
    out.m24[i] *= lambda;
  }
  return out;
}

namespace {

DenseMatrix dense_pattern(int n, double d_up, double d_low,
                          const std::vector<double>& m12,
                          const std::vector<double>& m13,
                          const std::vector<double>& m24, double m14) {
  const int d = 2 * n + 2;
  DenseMatrix M = DenseMatrix::Zero(d, d);
  M(0, 0) = d_up;
  for (int i = 0; i < n; ++i) {
    M(0, 1 + i) = m12[i];
    M(0, 1 + n + i) = m13[i];
    M(1 + i, 1 + i) = d_up;
    M(1 + i, d - 1) = m24[i];
    M(1 + n + i, 1 + n + i) = d_low;
  }
  M(0, d - 1) = m14;
  M(d - 1, d - 1) = d_low;
  return M;
}

} // namespace

DenseMatrix to_dense(const StructuredExpMatrix& M) {
  return dense_pattern(M.n(), std::exp(M.m), 1.0, M.m12, M.m13, M.m24, M.m14);
}

DenseMatrix to_dense(const StructuredSumMatrix& M) {
  return dense_pattern(M.n(), M.diag, 0.0, M.m12, M.m13, M.m24, M.m14);
}

DenseMatrix matrix_exp(const DenseMatrix& A) {
  if (A.rows() != A.cols()) throw DimensionError("matrix_exp: matrix must be square");
  if (!A.allFinite()) throw NumericError("matrix_exp: non-finite entries");
  using LMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index d = A.rows();
  LMatrix T = A.cast<long double>();
  long double nrm = 0.0L;
  for (Eigen::Index i = 0; i < d; ++i) {
    long double row = 0.0L;
    for (Eigen::Index j = 0; j < d; ++j) row += std::abs(T(i, j));
    nrm = std::max(nrm, row);
  }
  int squarings = 0;
  while (nrm > 0.5L) {
    nrm *= 0.5L;
    ++squarings;
  }
  T *= std::ldexp(1.0L, -squarings);
  LMatrix S = LMatrix::Identity(d, d);
  LMatrix term = LMatrix::Identity(d, d);
  for (int k = 1; k <= 40; ++k) {
    term = term * T / static_cast<long double>(k);
    S += term;
    long double tn = 0.0L;
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) tn = std::max(tn, std::abs(term(i, j)));
    if (tn < 1e-22L) break;
  }
  for (int k = 0; k < squarings; ++k) S = S * S;
  return S.cast<double>();
}

} // namespace cha
