#include "core/invariants.hpp"

#include <Eigen/Dense>

#include "core/error.hpp"

namespace netconics {

const Calibration& Calibration::standard() {
  static const Calibration cal{Rat::normalize(-1, 27648), Rat::normalize(1, 27648), Rat::normalize(-1, 16)};
  return cal;
}

const Rat& ExtendedJ::value() const {
  if (!is_finite()) throw Error(ErrorCode::kDomain, "j is not finite");
  return std::get<Rat>(v_);
}

std::string ExtendedJ::to_string() const {
  if (is_finite()) return value().to_string();
  return is_infinite() ? "infinity" : "undefined";
}

ExtendedJ j_from_invariants(const Rat& s, const Rat& t, const Calibration& cal) {
  const Rat delta = discriminant_from(s, t, cal);
  if (!delta.is_zero()) return ExtendedJ::finite(cal.kappa * s * s * s / delta);
  if (s.is_zero() && t.is_zero()) return ExtendedJ::undefined();
  return ExtendedJ::infinite();
}

CubicInvariants cubic_invariants(const RatForm& f, const Calibration& cal) {
  if (f.is_zero()) throw Error(ErrorCode::kInvalidInput, "j of the zero form");
  const auto [s, t] = aronhold(f);
  return {s, t, discriminant_from(s, t, cal), j_from_invariants(s, t, cal)};
}

ExtendedJ j_invariant(const RatForm& f, const Calibration& cal) { return cubic_invariants(f, cal).j; }

RatForm hessian_cubic(const RatForm& phi) {
  if (phi.degree() != 3) throw Error(ErrorCode::kInvalidInput, "Hessian cubic needs a cubic");
  return hessian_form(phi);
}

std::string to_string(SingularKind kind) {
  switch (kind) {
    case SingularKind::kSmooth: return "smooth";
    case SingularKind::kNode: return "node";
    case SingularKind::kCusp: return "cusp";
    case SingularKind::kOther: return "other";
  }
  return "other";
}

ZeroSet singular_points(const RatForm& f, std::uint64_t seed) {
  if (f.degree() != 3) throw Error(ErrorCode::kInvalidInput, "singular points need a cubic");
  return common_zeros({f.partial(0), f.partial(1), f.partial(2)}, seed);
}

namespace {

constexpr double kNumericRankTol = 1e-8;

SingularKind kind_from_rank(std::size_t r) {
  if (r == 2) return SingularKind::kNode;
  if (r == 1) return SingularKind::kCusp;
  return SingularKind::kOther;
}

}  // namespace

SingularKind classify_singularity(const RatForm& f, const ProjectivePoint& p) {
  if (f.degree() != 3) throw Error(ErrorCode::kInvalidInput, "classification needs a cubic");
  std::array<RatForm, 3> grad{f.partial(0), f.partial(1), f.partial(2)};
  if (p.is_exact()) {
    const auto& v = *p.exact;
    for (const auto& g : grad)
      if (!g.eval<Rat>(v).is_zero()) throw Error(ErrorCode::kDomain, "point is not singular");
    RatMatrix h(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) h(i, j) = grad[i].partial(j).eval<Rat>(v);
    return kind_from_rank(rank(h));
  }
  for (const auto& g : grad)
    if (scaled_residual(g, p.approx) > 1e-9) throw Error(ErrorCode::kDomain, "point is not singular");
  Eigen::Matrix3cd h;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h(i, j) = grad[i].partial(j).eval<CplxApprox>(p.approx);
  const Eigen::Vector3d sv = Eigen::JacobiSVD<Eigen::Matrix3cd>(h).singularValues();
  if (sv(0) == 0.0) return SingularKind::kOther;
  std::size_t r = 0;
  for (int i = 0; i < 3; ++i)
    if (sv(i) > kNumericRankTol * sv(0)) ++r;
  return kind_from_rank(r);
}

SingularityReport analyze_singularities(const RatForm& f, std::uint64_t seed) {
  SingularityReport report;
  ZeroSet zs = singular_points(f, seed);
  if (zs.positive_dimensional) {
    report.kind = SingularKind::kOther;
    report.one_dimensional = true;
    return report;
  }
  report.points = std::move(zs.points);
  for (const auto& p : report.points) report.point_kinds.push_back(classify_singularity(f, p));
  if (report.points.empty()) report.kind = SingularKind::kSmooth;
  else if (report.points.size() == 1) report.kind = report.point_kinds.front();
  else report.kind = SingularKind::kOther;
  return report;
}

}  // namespace netconics
