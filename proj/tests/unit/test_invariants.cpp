#include <cmath>

#include "core/error.hpp"
#include "core/hesse.hpp"
#include "core/invariants.hpp"
#include "core/verify.hpp"
#include "doctest.h"
#include "testkit.hpp"

using namespace netconics;

namespace {

RatForm P(const char* s) { return parse_form(s); }

bool is_point(const ProjectivePoint& p, std::array<Rat, 3> expected) {
  return p.is_exact() && *p.exact == expected;
}

}  // namespace

TEST_CASE("calibration constants are frozen") {
  const Calibration cal = Calibration::standard();
  CHECK(cal.delta_s3 == Rat::normalize(-1, 27648));
  CHECK(cal.delta_t2 == Rat::normalize(1, 27648));
  CHECK(cal.kappa == Rat::normalize(-1, 16));
}

TEST_CASE("Aronhold invariants scale with det^4, det^6 and mu^4, mu^6") {
  const RatForm f = P("x^3 + 2*y^3 - z^3 + x*y*z + 3*x^2*z");
  RatMatrix d = RatMatrix::identity(3);
  d(2, 2) = Rat(2);
  const auto [s, t] = aronhold(f);
  const auto [s2, t2] = aronhold(f.substitute(d));
  CHECK(s2 == Rat(16) * s);
  CHECK(t2 == Rat(64) * t);
  const Rat mu = Rat::normalize(-3, 2);
  const auto [s3, t3] = aronhold(mu * f);
  CHECK(s3 == pow(mu, 4) * s);
  CHECK(t3 == pow(mu, 6) * t);
  CHECK(aronhold(P("x^3 + y^3 + z^3")).first == Rat(0));
  CHECK_THROWS(aronhold(P("x^2")));
}

TEST_CASE("discriminant vanishes exactly on singular cubics") {
  CHECK(discriminant(P("-b^3 - c^3 + a*b*c")) == Rat(0));
  CHECK(discriminant(P("y^2*z - x^3")) == Rat(0));
  CHECK(discriminant(P("x^3 + y^3 + z^3")) != Rat(0));
  CHECK_THROWS(discriminant(P("x^2")));
}

TEST_CASE("j-invariant anchors") {
  const CubicInvariants w = cubic_invariants(P("y^2*z - x^3 - x*z^2"));
  CHECK(w.s == Rat(-48));
  CHECK(w.t == Rat(0));
  CHECK(w.delta == Rat(4));
  CHECK(w.j == ExtendedJ::finite(Rat(1728)));
  CHECK(j_invariant(P("x^3 + y^3 + z^3")) == ExtendedJ::finite(Rat(0)));
  CHECK(j_invariant(P("-b^3 - c^3 + a*b*c")) == ExtendedJ::infinite());
  CHECK(j_invariant(P("y^2*z - x^3")) == ExtendedJ::undefined());
  CHECK(j_invariant(P("x*y*z")) == ExtendedJ::infinite());
  CHECK_THROWS(j_invariant(RatForm::zero(3)));
}

TEST_CASE("j of the Hesse cubic at lambda = 1 under the calibrated normalization") {
  const ExtendedJ j = j_invariant(hesse_cubic(Rat(1)));
  REQUIRE(j.is_finite());
  CHECK(j.value() == Rat::normalize(9261, 8));
  CHECK(hesse_j_alt_normalization(Rat(1)) == Rat::normalize(-343, 216));
  CHECK(hesse_j_alt_normalization(Rat(1)) == Rat::normalize(-1, 729) * j.value());
}

TEST_CASE("ExtendedJ text forms") {
  CHECK(ExtendedJ::finite(Rat::normalize(-343, 216)).to_string() == "-343/216");
  CHECK(ExtendedJ::infinite().to_string() == "infinity");
  CHECK(ExtendedJ::undefined().to_string() == "undefined");
  CHECK_FALSE(ExtendedJ::infinite() == ExtendedJ::undefined());
}

TEST_CASE("Hessian cubics") {
  CHECK(hessian_cubic(P("x^3 + y^3 + z^3")) == Rat(216) * P("x*y*z"));
  CHECK(hessian_cubic(P("x*y*z")) == Rat(2) * P("x*y*z"));
  CHECK(hessian_cubic(hesse_cubic(Rat(1))) == Rat(54) * P("5*x*y*z - x^3 - y^3 - z^3"));
}

TEST_CASE("Hessian and Jacobian-net discriminant share j") {
  for (const Rat& lambda : random_admissible_lambdas(20, 7)) {
    const RatForm phi = hesse_cubic(lambda);
    CHECK(j_invariant(hessian_cubic(phi)) == j_invariant(net_discriminant_cubic(jacobian_net(phi))));
  }
}

TEST_CASE("singular points and their kinds") {
  const SingularityReport h0 = analyze_singularities(P("-b^3 - c^3 + a*b*c"));
  REQUIRE(h0.points.size() == 1);
  CHECK(is_point(h0.points[0], {1, 0, 0}));
  CHECK(h0.kind == SingularKind::kNode);

  CHECK(analyze_singularities(P("x^3 + y^3 + z^3")).points.empty());
  CHECK(analyze_singularities(P("x^3 + y^3 + z^3")).kind == SingularKind::kSmooth);

  const SingularityReport xyz = analyze_singularities(P("x*y*z"));
  REQUIRE(xyz.points.size() == 3);
  CHECK(is_point(xyz.points[0], {1, 0, 0}));
  CHECK(is_point(xyz.points[1], {0, 1, 0}));
  CHECK(is_point(xyz.points[2], {0, 0, 1}));
  for (SingularKind k : xyz.point_kinds) CHECK(k == SingularKind::kNode);
  CHECK(xyz.kind == SingularKind::kOther);

  const SingularityReport cusp = analyze_singularities(P("y^2*z - x^3"));
  REQUIRE(cusp.points.size() == 1);
  CHECK(is_point(cusp.points[0], {0, 0, 1}));
  CHECK(cusp.kind == SingularKind::kCusp);
  CHECK(classify_singularity(P("x*y*z"), make_point(std::array<Rat, 3>{0, 0, 1})) == SingularKind::kNode);
  CHECK_THROWS(classify_singularity(P("x*y*z"), make_point(std::array<Rat, 3>{1, 1, 1})));

  const SingularityReport line = analyze_singularities(P("x^2*y"));
  CHECK(line.kind == SingularKind::kOther);
  CHECK(line.one_dimensional);
}

TEST_CASE("nodes with irrational coordinates take the numeric path") {
  // Line y = 0 meets the conic x^2 - 2z^2 + y^2 at [+-sqrt(2) : 0 : 1].
  const SingularityReport r = analyze_singularities(P("x^2*y - 2*y*z^2 + y^3"));
  REQUIRE(r.points.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK_FALSE(r.points[i].is_exact());
    CHECK(r.points[i].residual < 1e-9);
    CHECK(r.point_kinds[i] == SingularKind::kNode);
    const auto& p = r.points[i].approx;
    CHECK(std::abs(p[1]) < 1e-9);
    CHECK(std::abs(p[0] * p[0] - 2.0 * p[2] * p[2]) < 1e-9);
  }

  const RatMatrix g{{1, 2, 0}, {0, 1, 3}, {1, 0, 1}};
  const SingularityReport moved = analyze_singularities(P("y^2*z - x^3 - x^2*z").substitute(g));
  REQUIRE(moved.points.size() == 1);
  CHECK(moved.kind == SingularKind::kNode);
}

TEST_CASE("discriminant vanishes iff singular points exist") {
  testkit::Gen g(99);
  int singular = 0;
  std::vector<RatForm> corpus;
  for (int i = 0; i < 100; ++i) corpus.push_back(g.form(3, 3));
  // Singular by construction: a cubic through [1:0:0] with vanishing gradient there.
  for (int i = 0; i < 20; ++i) {
    RatForm f = g.form(3, 3);
    for (const Exponent e : {Exponent{3, 0, 0}, Exponent{2, 1, 0}, Exponent{2, 0, 1}})
      f = f - RatForm::monomial(e, f.coeff(e));
    corpus.push_back(f.substitute(g.invertible(2)));
  }
  for (const char* s : {"x*y*z", "y^2*z - x^3", "x^2*y", "x^3", "x^3 + x*y*z", "y^2*z - x^3 - x^2*z"})
    corpus.push_back(P(s));
  for (const RatForm& f : corpus) {
    if (f.is_zero()) continue;
    const bool disc_zero = discriminant(f).is_zero();
    const SingularityReport r = analyze_singularities(f);
    const bool has_points = !r.points.empty() || r.one_dimensional;
    INFO(to_string(f));
    CHECK(disc_zero == has_points);
    CHECK((r.kind == SingularKind::kSmooth) == !disc_zero);
    singular += disc_zero ? 1 : 0;
  }
  CHECK(singular >= 20);
}

TEST_CASE("invariant suites") {
  for (const auto& r : {testkit::prop_j_gl_invariance(41, 30), testkit::prop_discriminant_covariance(42, 30),
                        testkit::prop_weierstrass_anchor(43, 50)}) {
    INFO(r.name << ": " << r.first_failure);
    CHECK(r.ok());
  }
}
