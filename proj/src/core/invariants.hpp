#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "core/aronhold_tables.hpp"
#include "core/scalars.hpp"
#include "core/ternary.hpp"
#include "core/zeros.hpp"

namespace netconics {

/// Exponents of a ternary cubic in the order the invariant tables index them.
inline constexpr std::array<Exponent, 10> kCubicCoefficientOrder{{
    {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
    {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}}};

/// The two constants tying the invariant conventions together:
/// disc = delta_s3 * S^3 + delta_t2 * T^2 and j = kappa * S^3 / disc.
/// Both are pinned by the Weierstrass family y^2 z - x^3 - a x z^2 - b z^3,
/// on which disc = 4a^3 + 27b^2 and j = 1728 * 4a^3 / (4a^3 + 27b^2).
struct Calibration {
  Rat delta_s3;
  Rat delta_t2;
  Rat kappa;

  static const Calibration& standard();
};

template <class R>
std::array<R, 10> cubic_coefficients(const TernaryForm<R>& f) {
  if (f.degree() != 3 && !f.is_zero()) throw Error(ErrorCode::kInvalidInput, "invariants need a cubic form");
  std::array<R, 10> c;
  for (std::size_t i = 0; i < 10; ++i) c[i] = f.coeff(kCubicCoefficientOrder[i]);
  return c;
}

namespace detail {

template <class R>
R lift_integer(long v) {
  if constexpr (std::is_same_v<R, CplxApprox>) return CplxApprox(static_cast<double>(v), 0.0);
  else return R(Rat(v));
}

template <class R, std::size_t N, int Degree>
R evaluate_invariant(const std::array<InvariantTerm<Degree>, N>& table, const std::array<R, 10>& c) {
  R acc = lift_integer<R>(0);
  for (const auto& term : table) {
    R p = lift_integer<R>(term.coefficient);
    for (int k : term.index) p = p * c[static_cast<std::size_t>(k)];
    acc = acc + p;
  }
  return acc;
}

}  // namespace detail

/// Degree-4 and degree-6 invariants (S, T) of the cubic with the given
/// coefficients. Generic over the coefficient ring so that the sweep can feed
/// binary forms; S(F o g) = det(g)^4 S(F) and T(F o g) = det(g)^6 T(F).
template <class R>
std::pair<R, R> aronhold(const std::array<R, 10>& c) {
  return {detail::evaluate_invariant(detail::kAronholdS, c), detail::evaluate_invariant(detail::kAronholdT, c)};
}

template <class R>
std::pair<R, R> aronhold(const TernaryForm<R>& f) {
  return aronhold(cubic_coefficients(f));
}

template <class R>
R discriminant_from(const R& s, const R& t, const Calibration& cal = Calibration::standard()) {
  if constexpr (std::is_same_v<R, CplxApprox>)
    return to_complex(cal.delta_s3) * s * s * s + to_complex(cal.delta_t2) * t * t;
  else
    return R(cal.delta_s3) * s * s * s + R(cal.delta_t2) * t * t;
}

/// Vanishes exactly on singular cubics; Delta(F o g) = det(g)^12 Delta(F).
template <class R>
R discriminant(const TernaryForm<R>& f, const Calibration& cal = Calibration::standard()) {
  const auto [s, t] = aronhold(f);
  return discriminant_from(s, t, cal);
}

/// j extended to singular cubics: infinity for nodal ones (Delta = 0 with
/// (S, T) != 0), undefined when S = T = 0.
class ExtendedJ {
 public:
  struct Infinite {};
  struct Undefined {};

  static ExtendedJ finite(Rat v) { return ExtendedJ(std::move(v)); }
  static ExtendedJ infinite() { return ExtendedJ(Infinite{}); }
  static ExtendedJ undefined() { return ExtendedJ(Undefined{}); }

  bool is_finite() const { return std::holds_alternative<Rat>(v_); }
  bool is_infinite() const { return std::holds_alternative<Infinite>(v_); }
  bool is_undefined() const { return std::holds_alternative<Undefined>(v_); }
  /// Throws kDomain when not finite.
  const Rat& value() const;
  std::string to_string() const;

  friend bool operator==(const ExtendedJ& a, const ExtendedJ& b) {
    if (a.is_finite() && b.is_finite()) return a.value() == b.value();
    return a.v_.index() == b.v_.index();
  }

 private:
  explicit ExtendedJ(std::variant<Rat, Infinite, Undefined> v) : v_(std::move(v)) {}
  std::variant<Rat, Infinite, Undefined> v_;
};

struct CubicInvariants {
  Rat s;
  Rat t;
  Rat delta;
  ExtendedJ j = ExtendedJ::undefined();
};

CubicInvariants cubic_invariants(const RatForm& f, const Calibration& cal = Calibration::standard());
ExtendedJ j_invariant(const RatForm& f, const Calibration& cal = Calibration::standard());
ExtendedJ j_from_invariants(const Rat& s, const Rat& t, const Calibration& cal = Calibration::standard());

/// Determinant of the matrix of second partials.
RatForm hessian_cubic(const RatForm& phi);

enum class SingularKind { kSmooth, kNode, kCusp, kOther };

std::string to_string(SingularKind kind);

struct SingularityReport {
  SingularKind kind = SingularKind::kSmooth;
  std::vector<ProjectivePoint> points;
  std::vector<SingularKind> point_kinds;
  /// The singular locus contains a curve (a repeated component).
  bool one_dimensional = false;
};

/// Common zeros of the three partials.
ZeroSet singular_points(const RatForm& f, std::uint64_t seed = 0);

/// Rank of the Hessian matrix at p: the quadratic part of F at a singular
/// point. Rank 2 is a node, rank 1 a cusp, rank 0 a triple point.
SingularKind classify_singularity(const RatForm& f, const ProjectivePoint& p);

/// Smooth iff no singular points. A single singular point reports its own
/// kind; several singular points or a singular curve report Other.
SingularityReport analyze_singularities(const RatForm& f, std::uint64_t seed = 0);

}  // namespace netconics
