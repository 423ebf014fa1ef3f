#ifndef CHA_ORACLE_HPP
#define CHA_ORACLE_HPP

#include <utility>

#include "cha/adjoint.hpp"
#include "cha/element.hpp"

namespace cha {

/// Truncation / quadrature policy for the reference implementations.
struct OracleOptions {
  int max_terms = 200;
  int quad_nodes = 32;
  double term_tol = 1e-15;
  double exp_trunc_tol = 1e-16;
};

struct BchDiagnostics {
  int terms_used = 0;          // max over quadrature nodes
  double last_term_norm = 0.0; // max over quadrature nodes of the final term
  double spectral_margin = 0.0; // max over nodes+endpoints of |1 - e^{m(t)}|
};

struct BchSeriesResult {
  ChaElement value;
  BchDiagnostics diagnostics;
};

/// e^{ad_X} Y summed term by term from iterated brackets (entire series,
/// always convergent). Independent of the closed forms it cross-checks.
ChaElement exp_ad_series(const ChaElement& x, const ChaElement& y,
                         const OracleOptions& opts = {});

/// The defining product formula: Z = X + Y - int_0^1 sum_k (I-M(t))^k/(k(k+1)) Y dt
/// with M(t) = e^{ad_X} e^{t ad_Y}. Powers are built by iterated
/// pattern multiplication and the integral by fixed-order Gauss-Legendre;
/// the series-sum and power closed forms are never consulted.
/// Throws ConvergenceError when the spectral radius max_t |1 - e^{m(t)}|
/// reaches 0.98.
BchSeriesResult bch_series(const ChaElement& x, const ChaElement& y,
                           const OracleOptions& opts = {});

/// Frobenius residual || e^{ad_Z} - e^{ad_X} e^{ad_Y} ||_F and whether it is
/// within tol. The adjoint is faithful (trivial center), so a small residual
/// certifies the group identity.
std::pair<bool, double> verify_group_law(const ChaElement& x, const ChaElement& y,
                                         const ChaElement& z, double tol);

} // namespace cha

#endif
