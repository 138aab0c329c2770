#include <cmath>

#include "core/error.hpp"
#include "core/sweep.hpp"
#include "doctest.h"
#include "testkit.hpp"

using namespace netconics;

namespace {

RatForm member_at(const PencilCubic& pencil, const Rat& t0, const Rat& t1) {
  return pencil.map_coeffs<Rat>([&](const BinaryForm& c) { return c.eval(t0, t1); });
}

RatMatrix flag_rows(std::initializer_list<std::array<long, 6>> rows) {
  RatMatrix m(rows.size(), 6);
  std::size_t r = 0;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < 6; ++c) m(r, c) = Rat(row[c]);
    ++r;
  }
  return m;
}

}  // namespace

TEST_CASE("sampled flags pass their rank checks") {
  for (std::uint64_t seed : {1, 2, 3}) {
    const Flag f = sample_flag(seed);
    CHECK(rank(f.rows()) == 4);
    CHECK(f.seed == seed);
    CHECK(f.resamples >= 0);
    CHECK(f.resamples < 32);
  }
  CHECK(sample_flag(1).rows() == sample_flag(1).rows());
  CHECK_THROWS(Flag(RatMatrix(4, 6)));
  CHECK_THROWS(Flag(RatMatrix(3, 6)));
}

TEST_CASE("pencil cubic is graded by the c-exponent") {
  const PencilCubic p = pencil_cubic(sample_flag(2));
  CHECK(p.degree() == 3);
  for (const auto& [e, c] : p.terms()) CHECK(c.degree() == e[2]);
}

TEST_CASE("generic sweep has degree 12 and profile 4 simple + 4 double") {
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    const SweepReport r = discriminant_sweep(sample_flag(seed));
    CHECK(r.disc.degree() == 12);
    CHECK(r.profile == generic_sweep_profile());
    CHECK(r.profile.to_string() == "[(1,4),(2,4)]");
    CHECK(r.a_inf == 8);
    CHECK(r.double_root_factor.degree() == 4);
    CHECK(r.simple_root_factor.degree() == 4);
  }
}

TEST_CASE("re-basing the flag keeps the profile") {
  const Flag f = sample_flag(3);
  const RatMatrix& m = f.rows();
  RatMatrix mixed(4, 6);
  for (std::size_t c = 0; c < 6; ++c) {
    mixed(0, c) = m(0, c) + Rat(2) * m(1, c);
    mixed(1, c) = m(0, c) - m(1, c);
    mixed(2, c) = m(2, c) + m(0, c) - m(3, c);
    mixed(3, c) = Rat(2) * m(3, c) + m(2, c);
  }
  const SweepReport a = discriminant_sweep(f);
  const SweepReport b = discriminant_sweep(Flag(mixed));
  CHECK(b.disc.degree() == 12);
  CHECK(a.profile == b.profile);
}

TEST_CASE("Veronese intersection") {
  const Flag f = sample_flag(1);
  const auto hits = veronese_intersection(f);
  CHECK(hits.size() == 4);
  for (const auto& h : hits) {
    CHECK(h.membership_residual < 1e-8);
    CHECK(h.conic_rank == 1);
  }
}

TEST_CASE("a flag through x^2 returns that Veronese point exactly") {
  const Flag f(flag_rows({{1, 0, 0, 0, 0, 0}, {3, -2, 5, 1, 0, 7}, {-4, 1, 2, 6, -3, 1}, {2, 5, -1, -2, 4, 3}}));
  const auto hits = veronese_points(f);
  int exact_x2 = 0;
  for (const auto& h : hits) {
    if (!h.source.is_exact()) continue;
    const auto& p = *h.source.exact;
    if (p[0] == Rat(1) && p[1].is_zero() && p[2].is_zero()) {
      ++exact_x2;
      CHECK(std::abs(h.conic[0] - 1.0) < 1e-15);
      for (int i = 1; i < 6; ++i) CHECK(std::abs(h.conic[i]) < 1e-15);
    }
  }
  CHECK(exact_x2 == 1);
  CHECK(hits.size() == 4);
}

TEST_CASE("node/Veronese correlation and class ledger") {
  std::vector<SweepReport> reports;
  for (std::uint64_t seed : {1, 2, 3}) {
    const Flag f = sample_flag(seed);
    SweepReport r = discriminant_sweep(f);
    node_veronese_correlation(f, r);
    CHECK(r.correlated);
    CHECK(r.b1 == 4);
    CHECK(r.b2 == 4);
    CHECK(r.l1 == 2);
    CHECK(r.l2 == 1);
    REQUIRE(r.node_checks.size() == 8);
    for (const auto& nc : r.node_checks) {
      CHECK(nc.kind == SingularKind::kNode);
      CHECK(nc.gradient_residual < 1e-8);
      if (nc.on_veronese) {
        CHECK(nc.multiplicity == 2);
        CHECK(nc.conic_rank == 1);
        CHECK(nc.match_residual < 1e-8);
      } else {
        CHECK(nc.multiplicity == 1);
        CHECK(nc.conic_rank == 2);
      }
    }
    reports.push_back(std::move(r));
  }
  const ClassLedger l = class_ledger(reports, 3);
  CHECK(l.b1 == 4);
  CHECK(l.b2 == 4);
  CHECK(l.l1 == 2);
  CHECK(l.l2 == 1);
  CHECK(l.f_class == 12);
  CHECK(l.o_class == 4);
  CHECK_THROWS(class_ledger({reports[0], reports[1]}, 3));
}

TEST_CASE("finite fibers") {
  const Flag f = sample_flag(4);
  for (const Rat& j0 : {Rat(100), Rat::normalize(-7, 3), Rat(5000)}) {
    const FiberReport r = fiber_sweep(f, j0);
    CHECK(r.form.degree() == 12);
    CHECK(r.profile.total_degree() == 12);
    CHECK(r.profile == MultiplicityProfile{{{1, 12}}});
    CHECK(r.distinct_roots == 12);
    CHECK(r.min_separation > 1e-8);
  }
}

TEST_CASE("plant and recover: j of a swept member is hit at its own parameter") {
  const Flag f = sample_flag(2);
  const PencilCubic p = pencil_cubic(f);
  for (const auto& [t0, t1] : {std::pair{Rat(1), Rat(3)}, std::pair{Rat(2), Rat(-5)}, std::pair{Rat(0), Rat(1)}}) {
    const ExtendedJ j = j_invariant(member_at(p, t0, t1));
    REQUIRE(j.is_finite());
    const FiberReport r = fiber_sweep(f, j.value());
    CHECK(r.form.eval(t0, t1).is_zero());
    CHECK(r.profile.total_degree() == 12);
  }
}

TEST_CASE("tangent cones at the four nodes are smooth quadrics") {
  for (std::uint64_t seed : {1, 2}) {
    const TangentConeReport r = tangent_cone_check(sample_flag(seed));
    CHECK(r.ok);
    CHECK(r.records.size() == 4);
    for (const auto& rec : r.records) CHECK(rec.rank == 3);
  }
}

TEST_CASE("a 3-plane tangent to the Veronese surface fails the tangent-cone check") {
  // Contains x^2 and xy, so it contains the tangent line of the Veronese surface at x^2.
  const Flag f(flag_rows({{1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {-4, 1, 2, 6, -3, 1}, {2, 5, -1, -2, 4, 3}}));
  const TangentConeReport r = tangent_cone_check(f);
  CHECK_FALSE(r.ok);
  CHECK(r.records.size() < 4);
}

TEST_CASE("the nodal net H0") {
  const H0Report r = verify_h0();
  CHECK(r.passed);
  CHECK(r.cubic == Rat::normalize(1, 4) * parse_form("-b^3 - c^3 + a*b*c"));
  REQUIRE(r.singularities.points.size() == 1);
  CHECK(r.singularities.kind == SingularKind::kNode);
  CHECK(r.j.is_infinite());
  CHECK(r.node_conic == parse_form("x*y"));
  CHECK(r.node_conic_rank == 2);
}
