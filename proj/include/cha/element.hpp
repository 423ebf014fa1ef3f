#ifndef CHA_ELEMENT_HPP
#define CHA_ELEMENT_HPP

#include <vector>

#include "cha/errors.hpp"

namespace cha {

/// Element z*X1 + a_i*X_{q^i} - b^i*X_{p_i} + c*X_S of the contact
/// Heisenberg algebra, stored as its components (z, a, b, c) with respect
/// to the basis (X_1, X_{q^i}, -X_{p_i}, X_S). Note that `b` holds the
/// coefficient of -X_p, not of X_p.
struct ChaElement {
  double z = 0.0;
  std::vector<double> a;
  std::vector<double> b;
  double c = 0.0;

  ChaElement() = default;
  /// Validates: a.size() == b.size() >= 1, all entries finite.
  ChaElement(double z, std::vector<double> a, std::vector<double> b, double c);

  static ChaElement zero(int n);

  int n() const { return static_cast<int>(a.size()); }
  double inf_norm() const;
  bool is_zero() const;

  bool operator==(const ChaElement&) const = default;
};

/// One of the 2n+2 basis vectors; i is 1-based and used by Q and P only.
struct BasisIndex {
  enum class Tag { One, Q, P, S };
  Tag tag = Tag::One;
  int i = 1;
};

/// The basis vector named by idx, as an element of the n-pair algebra.
/// P(i) denotes -X_{p_i} (the basis uses the sign-flipped momenta).
ChaElement basis_element(BasisIndex idx, int n);

/// All 2n+2 basis vectors in coordinate order (X_1, q-block, p-block, X_S).
std::vector<ChaElement> basis(int n);

ChaElement add(const ChaElement& x, const ChaElement& y);
ChaElement scale(double lambda, const ChaElement& x);

/// Lie bracket. The b- and c-components of the result are literal zeros,
/// so downstream predicates may test them with exact equality.
ChaElement commutator(const ChaElement& x, const ChaElement& y);

/// k-fold nested bracket [x,[x,...[x,y]]] in closed form; k = 0 returns y.
ChaElement ad_pow(const ChaElement& x, const ChaElement& y, int k);

/// True iff the bracket of x with every basis vector has inf-norm <= tol.
/// The center of this algebra is trivial, so for tol ~ 0 only (near-)zero
/// elements qualify.
bool is_central(const ChaElement& x, double tol);

/// True iff c == 0 exactly (the maximal ideal isomorphic to the Heisenberg
/// algebra).
bool in_heisenberg_ideal(const ChaElement& x);

namespace detail {
void require_same_n(const ChaElement& x, const ChaElement& y);
void require_finite(const ChaElement& x, const char* who);
} // namespace detail

} // namespace cha

#endif
