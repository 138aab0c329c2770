#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "core/scalars.hpp"
#include "core/ternary.hpp"

namespace netconics {

/// A point of P^2. Exact coordinates are kept when the point is rational;
/// approx always holds a numeric representative. Both are scaled so the
/// coordinate of largest modulus equals 1.
struct ProjectivePoint {
  std::optional<std::array<Rat, 3>> exact;
  std::array<CplxApprox, 3> approx{};
  double residual = 0.0;

  bool is_exact() const { return exact.has_value(); }
};

ProjectivePoint make_point(std::array<Rat, 3> p);
ProjectivePoint make_point(std::array<CplxApprox, 3> p);

struct ZeroSet {
  std::vector<ProjectivePoint> points;
  /// The forms share a curve; points is then empty.
  bool positive_dimensional = false;
};

/// Common projective zeros of forms of one degree. Elimination runs after a
/// seeded random integer change of coordinates that keeps every zero off the
/// line at infinity; resultants and gcds are exact, and only irrational
/// coordinates go through the numeric layer (scaled residual < 1e-9).
ZeroSet common_zeros(const std::vector<RatForm>& forms, std::uint64_t seed = 0);

/// |F(p)| / sum |coeff| for p scaled to max modulus 1.
template <class R>
double scaled_residual(const TernaryForm<R>& f, const std::array<CplxApprox, 3>& p) {
  double scale = 0.0;
  for (const auto& [e, c] : f.terms()) {
    if constexpr (std::is_same_v<R, CplxApprox>) scale += std::abs(c);
    else scale += std::abs(to_complex(c));
  }
  if (scale == 0.0) return 0.0;
  return std::abs(f.template eval<CplxApprox>(p)) / scale;
}

}  // namespace netconics
