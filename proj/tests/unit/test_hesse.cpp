#include <algorithm>

#include "core/error.hpp"
#include "core/hesse.hpp"
#include "core/invariants.hpp"
#include "core/verify.hpp"
#include "doctest.h"
#include "testkit.hpp"

using namespace netconics;

namespace {

RatForm P(const char* s) { return parse_form(s); }

}  // namespace

TEST_CASE("Hesse cubics") {
  CHECK(hesse_cubic(Rat(0)) == P("x^3 + y^3 + z^3"));
  CHECK(hesse_cubic(Rat(1)) == P("x^3 + y^3 + z^3 + 3*x*y*z"));
  const RatForm f = hesse_cubic(Rat::normalize(5, 7));
  RatMatrix cyc{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  RatMatrix swap{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  CHECK(f.substitute(cyc) == f);
  CHECK(f.substitute(swap) == f);
}

TEST_CASE("excluded parameters") {
  const EisRat w = EisRat::omega();
  for (const EisRat& l : {EisRat(-1), -w, -(w * w), EisRat(0), EisRat(2), EisRat(2) * w, EisRat(2) * w * w})
    CHECK(hesse_param(l).excluded);
  for (const EisRat& l : {EisRat(1), EisRat(3), w, EisRat(Rat(1), Rat(2))}) CHECK_FALSE(hesse_param(l).excluded);
  // (l + 1)(l + w)(l + w^2) = l^3 + 1 in Q(w).
  testkit::Gen g(4);
  for (int i = 0; i < 20; ++i) {
    const EisRat l = g.eis();
    CHECK((l + EisRat(1)) * (l + w) * (l + w * w) == pow(l, 3) + EisRat(1));
  }
}

TEST_CASE("closed-form j of the Hesse pencil") {
  CHECK(hesse_j(Rat(1)) == Rat::normalize(9261, 8));
  CHECK(hesse_j(Rat(0)) == Rat(0));
  CHECK(hesse_j(Rat(2)) == Rat(0));
  CHECK_THROWS(hesse_j(Rat(-1)));
  CHECK(hesse_j_alt_normalization(Rat(1)) == Rat::normalize(-343, 216));
  for (const Rat& l : random_admissible_lambdas(20, 9)) {
    CHECK(j_invariant(hesse_cubic(l)) == ExtendedJ::finite(hesse_j(l)));
    CHECK(hesse_j_alt_normalization(l) == Rat::normalize(-1, 729) * hesse_j(l));
  }
}

TEST_CASE("W_lambda is the Jacobian net of the Hesse cubic") {
  const Net w1 = w_lambda(Rat(1));
  CHECK(w1.basis()[0] == P("x^2 + y*z"));
  CHECK(w1.basis()[1] == P("y^2 + x*z"));
  CHECK(w1.basis()[2] == P("z^2 + x*y"));
  for (const Rat& l : random_admissible_lambdas(10, 10)) {
    const Net w = w_lambda(l);
    const Net j = jacobian_net(hesse_cubic(l));
    RatMatrix stacked(6, 6);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 6; ++c) {
        stacked(r, c) = w.coefficient_matrix()(r, c);
        stacked(r + 3, c) = j.coefficient_matrix()(r, c);
      }
    CHECK(rank(stacked) == 3);
    CHECK(net_contains(P("x^2") + l * P("y*z"), w));
  }
}

TEST_CASE("Hessian identity, cross-checked against the Hesse normal form of the discriminant") {
  for (const Rat& l : {Rat(1), Rat(3), Rat::normalize(-5, 2), Rat::normalize(7, 11)}) {
    const HessianIdentityResult r = hessian_identity_check(l);
    CHECK(r.equal);
    CHECK(r.j_phi == hesse_j(l));
    CHECK(r.j_formula == hesse_j(l));
    REQUIRE(r.j_gamma.is_finite());
    // Gamma(W_l) = (-l^2 (a^3 + b^3 + c^3) + (l^3 + 4) abc) / 4 is a Hesse cubic with
    // nu = -(l^3 + 4) / (3 l^2).
    const Rat nu = -(pow(l, 3) + Rat(4)) / (Rat(3) * l * l);
    CHECK(net_discriminant_cubic(w_lambda(l)) ==
          Rat::normalize(1, 4) * ((-(l * l)) * P("a^3 + b^3 + c^3") + (pow(l, 3) + Rat(4)) * P("a*b*c")));
    CHECK(r.j_gamma.value() == testkit::hesse_j_closed(nu));
    const Rat j = hesse_j(l);
    CHECK(r.rhs == pow(Rat(6912) - j, 3) / (Rat(27) * j * j));
  }
  CHECK(hessian_identity_check(Rat(1)).j_phi == Rat::normalize(9261, 8));
  CHECK_THROWS_WITH(hessian_identity_check(Rat(0)), doctest::Contains("formula pole"));
  CHECK_THROWS(hessian_identity_check(Rat(-1)));
}

TEST_CASE("f_b polynomial") {
  const UniPoly x = UniPoly::monomial(1);
  CHECK(fb_poly(Rat(0)) == pow(UniPoly(Rat(6912)) - x, 3));
  for (const Rat& b : {Rat(5), Rat::normalize(-2, 3), Rat(1728)}) {
    CHECK(fb_poly(b).eval(Rat(6912)) == Rat(-27) * b * Rat(6912) * Rat(6912));
    CHECK(fb_poly(b).leading() == Rat(-1));
    CHECK(fb_poly(b).degree() == 3);
  }
}

TEST_CASE("f_b root analysis") {
  const FbAnalysis a0 = fb_root_analysis(Rat(0));
  CHECK(a0.profile == MultiplicityProfile{{{3, 1}}});
  REQUIRE(a0.roots.size() == 1);
  CHECK(a0.roots[0].exact == Rat(6912));
  CHECK(a0.roots[0].multiplicity == 3);

  const FbAnalysis a1 = fb_root_analysis(Rat(1728));
  CHECK(a1.profile == MultiplicityProfile{{{1, 1}, {2, 1}}});
  REQUIRE(a1.roots.size() == 2);
  const auto find = [&](const Rat& v) {
    return std::find_if(a1.roots.begin(), a1.roots.end(), [&](const FbRoot& r) { return r.exact == v; });
  };
  REQUIRE(find(Rat(1728)) != a1.roots.end());
  CHECK(find(Rat(1728))->multiplicity == 1);
  REQUIRE(find(Rat(-13824)) != a1.roots.end());
  CHECK(find(Rat(-13824))->multiplicity == 2);

  CHECK(fb_root_analysis(Rat(5)).profile == MultiplicityProfile{{{1, 3}}});
  for (const Rat& b : random_rationals(10, 3, 100000, 50)) {
    const FbAnalysis a = fb_root_analysis(b);
    CHECK(a.profile.total_degree() == 3);
    if (!(b == Rat(0)) && !(b == Rat(1728))) CHECK(a.profile == MultiplicityProfile{{{1, 3}}});
  }
}

TEST_CASE("critical values of b") {
  const FbCritical c = fb_critical_b();
  CHECK_FALSE(c.discriminant.is_zero());
  CHECK(c.values == std::vector<Rat>{Rat(0), Rat(1728)});
  std::vector<Rat> sample = random_rationals(10, 4, 5000, 1);
  sample.push_back(Rat(0));
  sample.push_back(Rat(1728));
  for (const Rat& b : sample) {
    const bool repeated = fb_root_analysis(b).profile.distinct_roots() < 3;
    const bool critical = std::find(c.values.begin(), c.values.end(), b) != c.values.end();
    CHECK(repeated == critical);
  }
}

TEST_CASE("fiber decompositions add up to 12") {
  const FiberDecomposition d0 = fiber_decomposition(Rat(0));
  REQUIRE(d0.terms.size() == 1);
  CHECK(d0.terms[0].exact == Rat(6912));
  CHECK(d0.terms[0].multiplicity == 3);
  CHECK(d0.multiplicity_sum * 4 == 12);
  const FiberDecomposition d1 = fiber_decomposition(Rat(1728));
  CHECK(d1.terms.size() == 2);
  CHECK(d1.multiplicity_sum * 4 == 12);
  const FiberDecomposition d5 = fiber_decomposition(Rat(5));
  CHECK(d5.terms.size() == 3);
  for (const auto& t : d5.terms) CHECK(t.multiplicity == 1);
  CHECK(d5.multiplicity_sum * 4 == 12);
}
