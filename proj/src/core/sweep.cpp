#include "core/sweep.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

#include "core/error.hpp"

namespace netconics {

namespace {

constexpr double kMatchTol = 1e-8;
constexpr double kRankTol = 1e-8;
constexpr int kMaxFlagAttempts = 32;

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

RatMatrix take_rows(const RatMatrix& m, std::size_t count) {
  RatMatrix out(count, m.cols());
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

std::array<CplxApprox, 6> to_complex6(const std::array<Rat, 6>& v) {
  std::array<CplxApprox, 6> out;
  for (std::size_t i = 0; i < 6; ++i) out[i] = to_complex(v[i]);
  return out;
}

Eigen::Matrix3cd conic_matrix_c(const std::array<CplxApprox, 6>& v) {
  Eigen::Matrix3cd m;
  m << v[0], v[3] / 2.0, v[4] / 2.0,
       v[3] / 2.0, v[1], v[5] / 2.0,
       v[4] / 2.0, v[5] / 2.0, v[2];
  return m;
}

int numeric_rank(const Eigen::VectorXd& sv, double tol = kRankTol) {
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * sv(0)) ++r;
  return r;
}

int conic_rank_c(const std::array<CplxApprox, 6>& v) {
  return numeric_rank(Eigen::JacobiSVD<Eigen::Matrix3cd>(conic_matrix_c(v)).singularValues());
}

CplxApprox eval_binary(const BinaryForm& f, CplxApprox t) {
  CplxApprox acc = 0.0;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + to_complex(c[i]);
  return acc;
}

std::array<CplxApprox, 3> normalized(std::array<CplxApprox, 3> p) {
  std::size_t big = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(p[i]) > std::abs(p[big])) big = i;
  const CplxApprox s = p[big];
  for (auto& v : p) v /= s;
  return p;
}

double gradient_residual(const CplxForm& f, const std::array<CplxApprox, 3>& p) {
  double worst = 0.0;
  for (int k = 0; k < 3; ++k) worst = std::max(worst, scaled_residual(f.partial(k), p));
  return worst;
}

SingularKind numeric_kind(const CplxForm& f, const std::array<CplxApprox, 3>& p) {
  Eigen::Matrix3cd h;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h(i, j) = f.partial(i).partial(j).eval<CplxApprox>(p);
  switch (numeric_rank(Eigen::JacobiSVD<Eigen::Matrix3cd>(h).singularValues())) {
    case 2: return SingularKind::kNode;
    case 1: return SingularKind::kCusp;
    default: return SingularKind::kOther;
  }
}

std::vector<CplxApprox> polished_roots(const UniPoly& f) {
  std::vector<CplxApprox> roots;
  if (f.degree() < 1) return roots;
  for (auto z : complex_roots(f, 1e-13)) roots.push_back(newton_polish(f, z, 16));
  return roots;
}

double relative_gap(CplxApprox a, CplxApprox b) { return std::abs(a - b) / (1.0 + std::abs(a)); }

// Genericity of a candidate flag, short of the full correlation.
bool generic_sweep(const Flag& flag) {
  const SweepReport r = discriminant_sweep(flag);
  if (!(r.profile == generic_sweep_profile())) return false;
  if (r.disc.coeffs().back().is_zero()) return false;
  return r.double_root_factor.degree() == 4 && r.simple_root_factor.degree() == 4;
}

}  // namespace

Flag::Flag(RatMatrix rows) : rows_(std::move(rows)) {
  if (rows_.rows() != 4 || rows_.cols() != 6) throw Error(ErrorCode::kInvalidInput, "a flag is a 4x6 matrix");
  if (rank(rows_) != 4) throw Error(ErrorCode::kDomain, "flag rows must have rank 4");
  if (rank(take_rows(rows_, 2)) != 2) throw Error(ErrorCode::kDomain, "the first two flag rows must have rank 2");
}

std::array<Rat, 6> Flag::row(int i) const {
  std::array<Rat, 6> v;
  for (std::size_t c = 0; c < 6; ++c) v[c] = rows_(static_cast<std::size_t>(i), c);
  return v;
}

Flag sample_flag(std::uint64_t seed) {
  for (int attempt = 0; attempt < kMaxFlagAttempts; ++attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(attempt)};
    std::mt19937_64 rng(seq);
    RatMatrix m(4, 6);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 6; ++c) m(r, c) = Rat(static_cast<long>(rng() % 41) - 20);
    try {
      Flag flag(std::move(m));
      flag.seed = seed;
      flag.resamples = attempt;
      if (generic_sweep(flag) && veronese_points(flag).size() == 4 &&
          common_zeros({flag.conic(0), flag.conic(1)}).points.size() == 4)
        return flag;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDomain && e.code() != ErrorCode::kNonGeneric) throw;
    }
  }
  throw Error(ErrorCode::kNonGeneric, "no generic flag after 32 candidates for seed " + std::to_string(seed));
}

PencilCubic pencil_cubic(const Flag& flag) {
  std::array<RatMatrix, 4> m;
  for (int k = 0; k < 4; ++k) m[k] = conic_matrix_from_vector(flag.row(k));
  const std::array<PencilCubic, 3> var{PencilCubic::variable(0), PencilCubic::variable(1), PencilCubic::variable(2)};
  Matrix<PencilCubic> a(3, 3, PencilCubic::zero(1));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      a(i, j) = BinaryForm(m[0](i, j)) * var[0] + BinaryForm(m[1](i, j)) * var[1] +
                BinaryForm(1, {m[2](i, j), m[3](i, j)}) * var[2];
    }
  }
  PencilCubic det = det_cofactor(a);
  if (det.is_zero()) det = PencilCubic::zero(3);
  for (const auto& [e, c] : det.terms())
    if (c.degree() != e[2]) throw Error(ErrorCode::kVerificationFailed, "pencil cubic grading violated");
  return det;
}

CplxForm pencil_member(const PencilCubic& pencil, CplxApprox t) {
  return pencil.map_coeffs<CplxApprox>([t](const BinaryForm& c) { return eval_binary(c, t); });
}

BinaryInvariants pencil_invariants(const PencilCubic& pencil, const Calibration& cal) {
  const auto coeffs = cubic_coefficients(pencil);
  auto [s, t] = aronhold(coeffs);
  BinaryForm delta = discriminant_from(s, t, cal);
  return {std::move(s), std::move(t), std::move(delta)};
}

SweepReport discriminant_sweep(const Flag& flag) {
  SweepReport report;
  report.seed = flag.seed;
  report.resamples = flag.resamples;
  report.flag = flag.rows();
  const BinaryForm delta = pencil_invariants(pencil_cubic(flag)).delta;
  if (delta.is_zero()) throw Error(ErrorCode::kNonGeneric, "non-generic flag: discriminant vanishes identically");
  report.disc = delta.primitive();
  if (report.disc.degree() != 12) throw Error(ErrorCode::kNonGeneric, "non-generic flag: discriminant degree is not 12");
  report.profile = binary_profile(report.disc);
  report.a_inf = report.profile.distinct_roots();
  for (const auto& f : squarefree_decomposition(report.disc.dehomogenize())) {
    if (f.multiplicity == 1) report.simple_root_factor = f.factor;
    if (f.multiplicity == 2) report.double_root_factor = f.factor;
  }
  return report;
}

std::vector<VeroneseHit> veronese_points(const Flag& flag) {
  // Conics h with h . r_k = 0 for all four rows cut out the 3-plane; pulled
  // back along (u,v,w) -> (u^2, v^2, w^2, 2uv, 2uw, 2vw) they become conics.
  const auto annihilator = null_space(flag.rows());
  std::vector<RatForm> pulled;
  for (const auto& h : annihilator) {
    const Rat two(2);
    pulled.push_back(conic_from_vector<Rat>({h[0], h[1], h[2], two * h[3], two * h[4], two * h[5]}));
  }
  const ZeroSet zs = common_zeros(pulled, flag.seed);
  if (zs.positive_dimensional) throw Error(ErrorCode::kNonGeneric, "non-generic flag: 3-plane meets the Veronese surface in a curve");

  CMat basis(6, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 6; ++c) basis(c, r) = to_complex(flag.rows()(r, c));
  const auto decomposition = basis.completeOrthogonalDecomposition();

  std::vector<VeroneseHit> hits;
  for (const auto& p : zs.points) {
    VeroneseHit hit;
    hit.source = p;
    const auto& [u, v, w] = p.approx;
    hit.conic = {u * u, v * v, w * w, 2.0 * u * v, 2.0 * u * w, 2.0 * v * w};
    CVec q(6);
    for (int i = 0; i < 6; ++i) q(i) = hit.conic[i];
    const CVec c = decomposition.solve(q);
    for (int i = 0; i < 4; ++i) hit.coords[i] = c(i);
    hit.membership_residual = (basis * c - q).norm() / q.norm();
    hit.conic_rank = conic_rank_c(hit.conic);
    hits.push_back(hit);
  }
  return hits;
}

std::vector<VeroneseHit> veronese_intersection(const Flag& flag) {
  auto hits = veronese_points(flag);
  if (hits.size() != 4) throw Error(ErrorCode::kNonGeneric, "non-generic flag: expected 4 Veronese points, found " + std::to_string(hits.size()));
  return hits;
}

void node_veronese_correlation(const Flag& flag, SweepReport& report) {
  if (!(report.profile == generic_sweep_profile()))
    throw Error(ErrorCode::kNonGeneric, "correlation needs the generic profile, got " + report.profile.to_string());
  report.veronese = veronese_intersection(flag);
  const PencilCubic pencil = pencil_cubic(flag);

  std::vector<CplxApprox> veronese_t;
  for (const auto& hit : report.veronese) veronese_t.push_back(hit.coords[3] / hit.coords[2]);

  const ZeroSet base = common_zeros({flag.conic(0), flag.conic(1)}, flag.seed);
  if (base.positive_dimensional || base.points.size() != 4)
    throw Error(ErrorCode::kNonGeneric, "non-generic flag: the line L needs 4 distinct base points");
  std::vector<CplxApprox> base_t;
  std::vector<std::array<CplxApprox, 6>> r_c;
  for (int k = 0; k < 4; ++k) r_c.push_back(to_complex6(flag.row(k)));
  auto eval_conic = [](const std::array<CplxApprox, 6>& q, const std::array<CplxApprox, 3>& p) {
    return q[0] * p[0] * p[0] + q[1] * p[1] * p[1] + q[2] * p[2] * p[2] + q[3] * p[0] * p[1] +
           q[4] * p[0] * p[2] + q[5] * p[1] * p[2];
  };
  for (const auto& p : base.points) base_t.push_back(-eval_conic(r_c[2], p.approx) / eval_conic(r_c[3], p.approx));

  auto plane_conic = [&](CplxApprox t, const std::array<CplxApprox, 3>& abc) {
    std::array<CplxApprox, 6> q{};
    for (int i = 0; i < 6; ++i) q[i] = abc[0] * r_c[0][i] + abc[1] * r_c[1][i] + abc[2] * (r_c[2][i] + t * r_c[3][i]);
    return q;
  };

  auto closest = [](CplxApprox t, const std::vector<CplxApprox>& targets) {
    int best = -1;
    double gap = 0.0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const double g = relative_gap(t, targets[i]);
      if (best < 0 || g < gap) {
        best = static_cast<int>(i);
        gap = g;
      }
    }
    return std::pair{best, gap};
  };

  report.node_checks.clear();
  std::vector<int> veronese_used(4, 0), base_used(4, 0);
  std::string failures;

  for (const auto& t : polished_roots(report.double_root_factor)) {
    NodeCheck nc;
    nc.t = t;
    nc.multiplicity = 2;
    const auto [idx, gap] = closest(t, veronese_t);
    nc.matched = idx;
    nc.match_residual = gap;
    const auto& hit = report.veronese[static_cast<std::size_t>(idx)];
    nc.node = normalized({hit.coords[0], hit.coords[1], hit.coords[2]});
    const CplxForm member = pencil_member(pencil, t);
    nc.gradient_residual = gradient_residual(member, nc.node);
    nc.conic_rank = conic_rank_c(plane_conic(t, nc.node));
    nc.kind = numeric_kind(member, nc.node);
    nc.on_veronese = gap < kMatchTol && nc.gradient_residual < kMatchTol && nc.conic_rank == 1 &&
                     hit.membership_residual < kMatchTol;
    if (nc.on_veronese) ++veronese_used[static_cast<std::size_t>(idx)];
    else failures += " double root t=" + std::to_string(t.real()) + "+" + std::to_string(t.imag()) + "i gap=" +
                     std::to_string(gap) + " grad=" + std::to_string(nc.gradient_residual);
    report.node_checks.push_back(nc);
  }

  for (const auto& t : polished_roots(report.simple_root_factor)) {
    NodeCheck nc;
    nc.t = t;
    nc.multiplicity = 1;
    const auto [idx, gap] = closest(t, base_t);
    nc.matched = idx;
    nc.match_residual = gap;
    // The node conic is the member of H_t singular at the base point v.
    const auto& v = base.points[static_cast<std::size_t>(idx)].approx;
    Eigen::Vector3cd vv(v[0], v[1], v[2]);
    Eigen::Matrix3cd sys;
    for (int k = 0; k < 3; ++k) {
      const auto rk = k < 2 ? r_c[static_cast<std::size_t>(k)] : plane_conic(t, {0.0, 0.0, 1.0});
      sys.col(k) = conic_matrix_c(rk) * vv;
    }
    Eigen::JacobiSVD<Eigen::Matrix3cd> svd(sys, Eigen::ComputeFullV);
    const Eigen::Vector3cd kernel = svd.matrixV().col(2);
    nc.node = normalized({kernel(0), kernel(1), kernel(2)});
    const CplxForm member = pencil_member(pencil, t);
    nc.gradient_residual = gradient_residual(member, nc.node);
    nc.conic_rank = conic_rank_c(plane_conic(t, nc.node));
    nc.kind = numeric_kind(member, nc.node);
    nc.on_veronese = false;
    const bool ok = gap < kMatchTol && nc.gradient_residual < kMatchTol && nc.conic_rank == 2 &&
                    nc.kind == SingularKind::kNode;
    if (ok) ++base_used[static_cast<std::size_t>(idx)];
    else failures += " simple root t=" + std::to_string(t.real()) + "+" + std::to_string(t.imag()) + "i gap=" +
                     std::to_string(gap) + " grad=" + std::to_string(nc.gradient_residual) +
                     " rank=" + std::to_string(nc.conic_rank);
    report.node_checks.push_back(nc);
  }

  for (int i = 0; i < 4; ++i) {
    if (veronese_used[static_cast<std::size_t>(i)] != 1) failures += " Veronese point " + std::to_string(i) + " matched " + std::to_string(veronese_used[static_cast<std::size_t>(i)]) + " times";
    if (base_used[static_cast<std::size_t>(i)] != 1) failures += " base point " + std::to_string(i) + " matched " + std::to_string(base_used[static_cast<std::size_t>(i)]) + " times";
  }
  if (!failures.empty()) throw Error(ErrorCode::kVerificationFailed, "node/Veronese correlation failed:" + failures);

  report.b1 = report.b2 = 0;
  report.l1 = report.l2 = 0;
  for (const auto& nc : report.node_checks) {
    int& count = nc.on_veronese ? report.b1 : report.b2;
    int& mult = nc.on_veronese ? report.l1 : report.l2;
    ++count;
    if (mult != 0 && mult != nc.multiplicity) throw Error(ErrorCode::kVerificationFailed, "mixed multiplicities within one orbit");
    mult = nc.multiplicity;
  }
  report.correlated = true;
}

FiberReport fiber_sweep(const Flag& flag, const Rat& j0, const Calibration& cal) {
  const BinaryInvariants inv = pencil_invariants(pencil_cubic(flag), cal);
  FiberReport out;
  out.j0 = j0;
  const BinaryForm form = BinaryForm(cal.kappa) * inv.s * inv.s * inv.s - BinaryForm(j0) * inv.delta;
  if (form.is_zero()) throw Error(ErrorCode::kNonGeneric, "fiber form vanishes identically");
  out.form = form.primitive();
  out.profile = binary_profile(out.form);
  out.distinct_roots = out.profile.distinct_roots();
  const UniPoly affine = squarefree_part(out.form.dehomogenize());
  const auto roots = polished_roots(affine);
  out.min_separation = roots.size() < 2 ? 1.0 : 1e300;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t k = i + 1; k < roots.size(); ++k)
      out.min_separation = std::min(out.min_separation, relative_gap(roots[i], roots[k]));
  return out;
}

TangentConeReport tangent_cone_check(const Flag& flag) {
  std::vector<VeroneseHit> hits;
  TangentConeReport report;
  try {
    hits = veronese_points(flag);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNonGeneric) throw;
    return report;
  }
  std::array<Eigen::Matrix3cd, 4> m;
  for (int k = 0; k < 4; ++k) m[static_cast<std::size_t>(k)] = conic_matrix_c(to_complex6(flag.row(k)));

  report.ok = hits.size() == 4;
  for (const auto& hit : hits) {
    Eigen::Matrix3cd a = Eigen::Matrix3cd::Zero();
    for (int k = 0; k < 4; ++k) a += hit.coords[static_cast<std::size_t>(k)] * m[static_cast<std::size_t>(k)];
    // Second derivatives of det(sum s_k M_k): replace two distinct columns
    // of A by the matching columns of M_k and M_l.
    Eigen::Matrix4cd h;
    for (int k = 0; k < 4; ++k) {
      for (int l = 0; l < 4; ++l) {
        CplxApprox acc = 0.0;
        for (int i = 0; i < 3; ++i) {
          for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            Eigen::Matrix3cd b = a;
            b.col(i) = m[static_cast<std::size_t>(k)].col(i);
            b.col(j) = m[static_cast<std::size_t>(l)].col(j);
            acc += b.determinant();
          }
        }
        h(k, l) = acc;
      }
    }
    // The point spans the kernel of h; dropping its dominant coordinate
    // leaves the quadratic part in three local coordinates.
    int pivot = 0;
    for (int k = 1; k < 4; ++k)
      if (std::abs(hit.coords[static_cast<std::size_t>(k)]) > std::abs(hit.coords[static_cast<std::size_t>(pivot)])) pivot = k;
    Eigen::Matrix3cd local;
    for (int r = 0, rr = 0; r < 4; ++r) {
      if (r == pivot) continue;
      for (int c = 0, cc = 0; c < 4; ++c) {
        if (c == pivot) continue;
        local(rr, cc++) = h(r, c);
      }
      ++rr;
    }
    const Eigen::Vector3d sv = Eigen::JacobiSVD<Eigen::Matrix3cd>(local).singularValues();
    TangentConeRecord rec;
    rec.point = hit.coords;
    for (int i = 0; i < 3; ++i) rec.singular_values[static_cast<std::size_t>(i)] = sv(i);
    rec.rank = numeric_rank(sv, 1e-6);
    report.ok = report.ok && rec.rank == 3;
    report.records.push_back(rec);
  }
  return report;
}

H0Report verify_h0() {
  H0Report r;
  r.basis = {parse_form("x*y"), parse_form("x^2 + y*z"), parse_form("y^2 + x*z")};
  const Net net(r.basis);
  r.cubic = net_discriminant_cubic(net);
  r.expected = parse_form("-1/4*b^3 - 1/4*c^3 + 1/4*a*b*c");
  r.singularities = analyze_singularities(r.cubic);
  r.j = j_invariant(r.cubic);
  bool node_ok = r.singularities.points.size() == 1 && r.singularities.points[0].is_exact();
  if (node_ok) {
    const auto& p = *r.singularities.points[0].exact;
    node_ok = p[0] == Rat(1) && p[1].is_zero() && p[2].is_zero();
    r.node_conic = p[0] * r.basis[0] + p[1] * r.basis[1] + p[2] * r.basis[2];
    r.node_conic_rank = rank(conic_matrix(r.node_conic));
  }
  r.passed = r.cubic == r.expected && node_ok && r.singularities.kind == SingularKind::kNode &&
             r.j.is_infinite() && r.node_conic == parse_form("x*y") && r.node_conic_rank == 2;
  return r;
}

ClassLedger class_ledger(const std::vector<SweepReport>& reports, int fiber_degree) {
  if (reports.size() < 3) throw Error(ErrorCode::kInvalidInput, "class ledger needs at least three sweeps");
  if (fiber_degree <= 0) throw Error(ErrorCode::kInvalidInput, "fiber degree must be positive");
  ClassLedger ledger;
  ledger.seeds = reports.size();
  ledger.fiber_degree = fiber_degree;
  const SweepReport& first = reports.front();
  for (const auto& r : reports) {
    if (!r.correlated) throw Error(ErrorCode::kInvalidInput, "class ledger needs correlated sweeps");
    if (r.b1 != first.b1 || r.b2 != first.b2 || r.l1 != first.l1 || r.l2 != first.l2 || !(r.profile == first.profile))
      throw Error(ErrorCode::kVerificationFailed, "sweeps disagree between seeds");
  }
  ledger.b1 = first.b1;
  ledger.b2 = first.b2;
  ledger.l1 = first.l1;
  ledger.l2 = first.l2;
  ledger.f_class = ledger.l1 * ledger.b1 + ledger.l2 * ledger.b2;
  if (ledger.f_class != first.disc.degree())
    throw Error(ErrorCode::kVerificationFailed, "orbit classes do not add up to the discriminant degree");
  if (ledger.f_class % fiber_degree != 0) throw Error(ErrorCode::kVerificationFailed, "fiber class is not divisible by the fiber degree");
  ledger.o_class = ledger.f_class / fiber_degree;
  return ledger;
}

}  // namespace netconics
