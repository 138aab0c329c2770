#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/invariants.hpp"
#include "core/matrix.hpp"
#include "core/ternary.hpp"
#include "core/unipoly.hpp"
#include "core/zeros.hpp"

namespace netconics {

/// A 3-plane of P^5 given by four conics, the first two spanning a line L
/// inside it. The pencil of planes through L in the 3-plane is
/// H(t0:t1) = span(r1, r2, t0 r3 + t1 r4).
class Flag {
 public:
  /// Throws kDomain unless rank(rows) == 4 and rank(rows 0..1) == 2.
  explicit Flag(RatMatrix rows);

  const RatMatrix& rows() const { return rows_; }
  std::array<Rat, 6> row(int i) const;
  RatForm conic(int i) const { return conic_from_vector(row(i)); }

  std::uint64_t seed = 0;
  /// Candidates rejected before this one passed the genericity checks.
  int resamples = 0;

 private:
  RatMatrix rows_;
};

/// Seeded flag with integer entries in [-20, 20] whose sweep is generic:
/// a degree-12 discriminant with profile [(1,4),(2,4)] and no root at (0:1).
Flag sample_flag(std::uint64_t seed);

using PencilCubic = TernaryForm<BinaryForm>;

/// det(a M(r1) + b M(r2) + c M(t0 r3 + t1 r4)). The coefficient of
/// a^i b^j c^k is a binary form of degree k; this grading is asserted.
PencilCubic pencil_cubic(const Flag& flag);

/// The member of the pencil at t1/t0 = t, with numeric coefficients.
CplxForm pencil_member(const PencilCubic& pencil, CplxApprox t);

struct BinaryInvariants {
  BinaryForm s;
  BinaryForm t;
  BinaryForm delta;
};

BinaryInvariants pencil_invariants(const PencilCubic& pencil, const Calibration& cal = Calibration::standard());

struct VeroneseHit {
  /// (u:v:w) with the conic equal to (ux + vy + wz)^2.
  ProjectivePoint source;
  std::array<CplxApprox, 6> conic{};
  /// Coordinates in the basis r1..r4 of the 3-plane.
  std::array<CplxApprox, 4> coords{};
  double membership_residual = 0.0;
  /// Numeric rank of the conic matrix; 1 on the Veronese surface.
  int conic_rank = 0;
};

/// Distinct points of the 3-plane on the Veronese surface, without the
/// genericity requirement.
std::vector<VeroneseHit> veronese_points(const Flag& flag);

/// Exactly four points; fewer distinct solutions throw kNonGeneric.
std::vector<VeroneseHit> veronese_intersection(const Flag& flag);

struct NodeCheck {
  CplxApprox t;
  int multiplicity = 0;
  bool on_veronese = false;
  /// Index into the Veronese points or the base points of L.
  int matched = -1;
  /// |t - t_match| / (1 + |t|).
  double match_residual = 0.0;
  /// Singular point of the cubic in plane coordinates (a:b:c).
  std::array<CplxApprox, 3> node{};
  /// Scaled gradient residual of the cubic at the node.
  double gradient_residual = 0.0;
  /// Numeric rank of the conic a r1 + b r2 + c (r3 + t r4).
  int conic_rank = 0;
  SingularKind kind = SingularKind::kOther;
};

struct SweepReport {
  std::uint64_t seed = 0;
  int resamples = 0;
  RatMatrix flag;
  /// Content removed, first nonzero coefficient positive.
  BinaryForm disc;
  MultiplicityProfile profile;
  int a_inf = 0;
  UniPoly double_root_factor;
  UniPoly simple_root_factor;
  std::vector<VeroneseHit> veronese;
  std::vector<NodeCheck> node_checks;
  int b1 = 0;
  int b2 = 0;
  /// Multiplicity of roots whose node lies on / off the Veronese surface.
  int l1 = 0;
  int l2 = 0;
  bool correlated = false;
};

inline const MultiplicityProfile& generic_sweep_profile() {
  static const MultiplicityProfile p{{{1, 4}, {2, 4}}};
  return p;
}

/// Throws kNonGeneric when the discriminant vanishes identically.
SweepReport discriminant_sweep(const Flag& flag);

/// Matches the four double roots with the Veronese points of the 3-plane and
/// the four simple roots with the base points of L, then fills b1, b2, l1,
/// l2. Throws kVerificationFailed with residuals when a root matches neither.
void node_veronese_correlation(const Flag& flag, SweepReport& report);

struct FiberReport {
  Rat j0;
  BinaryForm form;
  MultiplicityProfile profile;
  int distinct_roots = 0;
  double min_separation = 0.0;
};

/// Roots of kappa S^3 - j0 Delta on the pencil: the planes whose cubic has
/// j = j0, counted with multiplicity.
FiberReport fiber_sweep(const Flag& flag, const Rat& j0, const Calibration& cal = Calibration::standard());

struct TangentConeRecord {
  std::array<CplxApprox, 4> point{};
  std::array<double, 3> singular_values{};
  int rank = 0;
};

struct TangentConeReport {
  std::vector<TangentConeRecord> records;
  bool ok = false;
};

/// At each Veronese point p of the 3-plane, the quadratic part of the cubic
/// surface det(sum s_k M(r_k)) in local coordinates must have rank 3.
TangentConeReport tangent_cone_check(const Flag& flag);

struct H0Report {
  std::array<RatForm, 3> basis;
  RatForm cubic;
  RatForm expected;
  SingularityReport singularities;
  ExtendedJ j = ExtendedJ::undefined();
  RatForm node_conic;
  std::size_t node_conic_rank = 0;
  bool passed = false;
};

/// Exact checks on the net <xy, x^2 + yz, y^2 + xz>.
H0Report verify_h0();

struct ClassLedger {
  int b1 = 0;
  int b2 = 0;
  int l1 = 0;
  int l2 = 0;
  int f_class = 0;
  int fiber_degree = 0;
  int o_class = 0;
  std::size_t seeds = 0;
};

/// sigma_1 coefficients from correlated sweeps over at least three seeds.
/// fiber_degree is the degree of f_b in j. Throws kVerificationFailed on any
/// disagreement between seeds or an inexact division.
ClassLedger class_ledger(const std::vector<SweepReport>& reports, int fiber_degree);

}  // namespace netconics
