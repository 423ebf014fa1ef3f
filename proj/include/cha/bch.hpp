#ifndef CHA_BCH_HPP
#define CHA_BCH_HPP

#include "cha/element.hpp"
#include "cha/kernels.hpp"

namespace cha {

/// Exact product Z with e^Z = e^X e^Y:
///
///   Z = X + Y - f(c,cbar) [X,Y]
///       + sum_i (abar_i c - a_i cbar) (u1(c,cbar) b_i + u2(c,cbar) bbar_i) X_1
///
/// Finite for all real inputs; c_Z = c + cbar and b_Z = b + bbar hold
/// exactly (the corrections touch only the X_1 and X_q components).
ChaElement bch(const ChaElement& x, const ChaElement& y,
               const kernels::ScalarKernelSet& ks = {});

/// Nilpotent-case product X + Y + [X,Y]/2 (exact when c = cbar = 0; the
/// c components are retained in the sum).
ChaElement bch_heisenberg(const ChaElement& x, const ChaElement& y);

/// First-order expansion of bch in (c, cbar):
/// Z_H - ((c-cbar)/12)[X,Y] - ((abar c - a cbar).(b - bbar)/12) X_1.
ChaElement bch_first_order(const ChaElement& x, const ChaElement& y);

} // namespace cha

#endif
