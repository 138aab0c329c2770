#pragma once

#include <optional>
#include <vector>

#include "core/invariants.hpp"
#include "core/scalars.hpp"
#include "core/ternary.hpp"
#include "core/unipoly.hpp"

namespace netconics {

/// x^3 + y^3 + z^3 + 3 lambda xyz.
template <class F>
TernaryForm<F> hesse_cubic(const F& lambda) {
  using Form = TernaryForm<F>;
  return Form::monomial({3, 0, 0}, F(1)) + Form::monomial({0, 3, 0}, F(1)) + Form::monomial({0, 0, 3}, F(1)) +
         Form::monomial({1, 1, 1}, F(3) * lambda);
}

/// lambda is excluded when lambda = 0, lambda^3 = -1 (singular members) or
/// lambda^3 = 8 (members isomorphic to the Fermat cubic).
struct HesseParam {
  EisRat lambda;
  bool excluded = false;
};

HesseParam hesse_param(const EisRat& lambda);

/// j of the Hesse member in the calibrated normalization:
/// -27 lambda^3 (lambda^3 - 8)^3 / (lambda^3 + 1)^3.
/// Throws kDomain when lambda^3 = -1.
Rat hesse_j(const Rat& lambda);

/// The same invariant in the normalization
/// lambda^3 (lambda^3 - 8)^3 / (27 (lambda^3 + 1)^3), which differs from
/// hesse_j by the constant factor -1/729.
Rat hesse_j_alt_normalization(const Rat& lambda);

/// <x^2 + lambda yz, y^2 + lambda xz, z^2 + lambda xy>, a third of the
/// Jacobian net of the Hesse member.
template <class F>
BasicNet<F> w_lambda(const F& lambda) {
  using Form = TernaryForm<F>;
  return BasicNet<F>({Form::monomial({2, 0, 0}, F(1)) + Form::monomial({0, 1, 1}, lambda),
                      Form::monomial({0, 2, 0}, F(1)) + Form::monomial({1, 0, 1}, lambda),
                      Form::monomial({0, 0, 2}, F(1)) + Form::monomial({1, 1, 0}, lambda)},
                     "W_lambda is degenerate");
}

/// Membership in W_lambda from three linear conditions. Writing
/// q = f1 x^2 + f2 yz + f3 y^2 + f4 xz + f5 z^2 + f6 xy, q lies in W_lambda
/// iff lambda f1 = f2, lambda f3 = f4 and lambda f5 = f6.
template <class F>
bool w_lambda_contains(const TernaryForm<F>& q, const F& lambda) {
  if (q.is_zero()) return true;
  if (q.degree() != 2) return false;
  const auto c = [&](int i, int j, int k) { return q.coeff({i, j, k}); };
  return is_zero(lambda * c(2, 0, 0) - c(0, 1, 1)) && is_zero(lambda * c(0, 2, 0) - c(1, 0, 1)) &&
         is_zero(lambda * c(0, 0, 2) - c(1, 1, 0));
}

struct HessianIdentityResult {
  Rat lambda;
  Rat j_phi;
  /// j of the Hesse member from the closed formula; must equal j_phi.
  Rat j_formula;
  ExtendedJ j_gamma = ExtendedJ::undefined();
  Rat rhs;
  bool equal = false;
};

/// Compares j of the discriminant cubic of W_lambda with
/// (6912 - j)^3 / (27 j^2), j the invariant of the Hesse member. Throws
/// kDomain "formula pole" when j = 0 and kDomain for singular members.
HessianIdentityResult hessian_identity_check(const Rat& lambda, const Calibration& cal = Calibration::standard());

/// (6912 - j)^3 - 27 b j^2 as a polynomial in j.
UniPoly fb_poly(const Rat& b);

struct FbRoot {
  std::optional<Rat> exact;
  CplxApprox approx;
  int multiplicity = 0;
};

struct FbAnalysis {
  Rat b;
  UniPoly poly;
  MultiplicityProfile profile;
  /// Rational roots first in increasing order, then the others.
  std::vector<FbRoot> roots;
};

FbAnalysis fb_root_analysis(const Rat& b);

struct FbCritical {
  /// Discriminant of f_b in j, as a polynomial in b.
  UniPoly discriminant;
  std::vector<Rat> values;
};

/// The b for which f_b has a repeated root.
FbCritical fb_critical_b();

struct FiberDecomposition {
  Rat b;
  /// One entry per orbit in the fiber; multiplicities sum to deg f_b.
  std::vector<FbRoot> terms;
  int multiplicity_sum = 0;
};

FiberDecomposition fiber_decomposition(const Rat& b);

}  // namespace netconics
