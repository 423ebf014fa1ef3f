#include "cha/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cha/quadrature.hpp"
#include "cha/summation.hpp"

namespace cha {

namespace {

void validate(const OracleOptions& opts) {
  if (opts.max_terms < 1) throw NumericError("OracleOptions: max_terms must be >= 1");
  if (opts.quad_nodes < 2) throw NumericError("OracleOptions: quad_nodes must be >= 2");
  if (!(opts.term_tol > 0.0) || !(opts.exp_trunc_tol > 0.0))
    throw NumericError("OracleOptions: tolerances must be positive");
}

constexpr double kSpectralLimit = 0.98;

} // namespace

ChaElement exp_ad_series(const ChaElement& x, const ChaElement& y,
                         const OracleOptions& opts) {
  detail::require_same_n(x, y);
  validate(opts);
  const int n = x.n();
  KahanSum acc_z;
  std::vector<KahanSum> acc_a(n);
  acc_z.add(y.z);
  for (int i = 0; i < n; ++i) acc_a[i].add(y.a[i]);
  ChaElement term = y;
  double running = std::max(1.0, y.inf_norm());
  for (int k = 1; k <= 1000; ++k) {
    term = scale(1.0 / k, commutator(x, term));
    acc_z.add(term.z);
    for (int i = 0; i < n; ++i) acc_a[i].add(term.a[i]);
    running = std::max(running, std::abs(acc_z.value()));
    for (int i = 0; i < n; ++i) running = std::max(running, std::abs(acc_a[i].value()));
    if (term.inf_norm() < opts.exp_trunc_tol * running) break;
  }
  ChaElement out = y;
  out.z = acc_z.value();
  for (int i = 0; i < n; ++i) out.a[i] = acc_a[i].value();
  return out;  // b, c components of every bracket term vanish
}

BchSeriesResult bch_series(const ChaElement& x, const ChaElement& y,
                           const OracleOptions& opts) {
  detail::require_same_n(x, y);
  detail::require_finite(x, "bch_series");
  detail::require_finite(y, "bch_series");
  validate(opts);
  const int n = x.n();
  const QuadRule rule = gauss_legendre_01(opts.quad_nodes);

  BchDiagnostics diag;
  double margin = 0.0;
  auto radius_at = [&](double t) { return std::abs(std::expm1(-x.c - t * y.c)); };
  margin = std::max(radius_at(0.0), radius_at(1.0));
  for (double t : rule.nodes) margin = std::max(margin, radius_at(t));
  diag.spectral_margin = margin;
  if (margin >= kSpectralLimit) {
    std::ostringstream msg;
    msg << "bch_series: outside the convergence domain, spectral radius "
        << margin << " >= " << kSpectralLimit;
    throw ConvergenceError(msg.str(), margin);
  }

  KahanSum int_z;
  std::vector<KahanSum> int_a(n);
  for (int q = 0; q < opts.quad_nodes; ++q) {
    const double t = rule.nodes[q], w = rule.weights[q];
    const StructuredExpMatrix M = product_matrix(x, y, t);
    const StructuredSumMatrix J = identity_minus(M);
    StructuredSumMatrix P = J;
    KahanSum node_z;
    std::vector<KahanSum> node_a(n);
    int k = 1;
    double tn = 0.0;
    for (;; ++k) {
      const ChaElement term = apply(P, y);
      const double inv = 1.0 / (static_cast<double>(k) * (k + 1));
      node_z.add(term.z * inv);
      for (int i = 0; i < n; ++i) node_a[i].add(term.a[i] * inv);
      tn = term.inf_norm() * inv;
      double partial = std::abs(node_z.value());
      for (int i = 0; i < n; ++i) partial = std::max(partial, std::abs(node_a[i].value()));
      if (tn <= opts.term_tol * std::max(1.0, partial)) break;
      if (k >= opts.max_terms) break;
      P = multiply(P, J);
    }
    diag.terms_used = std::max(diag.terms_used, k);
    diag.last_term_norm = std::max(diag.last_term_norm, tn);
    int_z.add(w * node_z.value());
    for (int i = 0; i < n; ++i) int_a[i].add(w * node_a[i].value());
  }

  ChaElement out = ChaElement::zero(n);
  out.z = x.z + y.z - int_z.value();
  for (int i = 0; i < n; ++i) {
    out.a[i] = x.a[i] + y.a[i] - int_a[i].value();
    out.b[i] = x.b[i] + y.b[i];  // the series term has zero p and S rows
  }
  out.c = x.c + y.c;
  return {out, diag};
}

std::pair<bool, double> verify_group_law(const ChaElement& x, const ChaElement& y,
                                         const ChaElement& z, double tol) {
  detail::require_same_n(x, y);
  detail::require_same_n(x, z);
  const DenseMatrix lhs = matrix_exp(ad_matrix(z));
  const DenseMatrix rhs = matrix_exp(ad_matrix(x)) * matrix_exp(ad_matrix(y));
  const double residual = (lhs - rhs).norm();
  return {residual <= tol, residual};
}

} // namespace cha
