#include "core/error.hpp"
#include "core/hesse.hpp"
#include "core/invariants.hpp"
#include "core/ternary.hpp"
#include "doctest.h"
#include "testkit.hpp"

using namespace netconics;

namespace {

RatForm P(const char* s) { return parse_form(s); }

// Oracle: det(a M1 + b M2 + c M3) expanded by Sarrus over linear forms in a, b, c.
RatForm sarrus_discriminant(const std::array<RatForm, 3>& basis) {
  std::array<std::array<RatForm, 3>, 3> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = RatForm::zero(1);
  for (int k = 0; k < 3; ++k) {
    const RatMatrix mk = conic_matrix(basis[k]);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = m[i][j] + mk(i, j) * RatForm::variable(k);
  }
  return testkit::sarrus(m);
}

}  // namespace

TEST_CASE("partial derivatives") {
  CHECK(P("x^3").partial(0) == P("3*x^2"));
  const Rat lambda(5);
  CHECK(hesse_cubic(lambda).partial(1) == P("3*y^2 + 15*x*z"));
  CHECK(P("x*y").partial(2).is_zero());
  CHECK(RatForm(Rat(4)).partial(0).is_zero());
  CHECK_THROWS(P("x*y").partial(3));
}

TEST_CASE("substitution by a matrix") {
  const RatForm f = P("x^2 + 3*y*z - x*y");
  CHECK(f.substitute(RatMatrix::identity(3)) == f);

  const EisRat w = EisRat::omega();
  EisMatrix b(3, 3);
  b(0, 0) = EisRat(1);
  b(1, 1) = w;
  b(2, 2) = w * w;
  const EisForm xyz = to_eis(P("x*y*z"));
  CHECK(xyz.substitute(b) == xyz);

  RatMatrix swap(3, 3);
  swap(0, 1) = swap(1, 0) = swap(2, 2) = Rat(1);
  CHECK(P("x^2 + 7*y*z").substitute(swap) == P("y^2 + 7*x*z"));
  CHECK_THROWS(f.substitute(RatMatrix(2, 2)));
}

TEST_CASE("conic matrices carry halves off the diagonal") {
  CHECK(conic_matrix(P("x*y")) == RatMatrix{{0, Rat::normalize(1, 2), 0}, {Rat::normalize(1, 2), 0, 0}, {0, 0, 0}});
  CHECK(conic_matrix(P("x^2 + y*z")) == RatMatrix{{1, 0, 0}, {0, 0, Rat::normalize(1, 2)}, {0, Rat::normalize(1, 2), 0}});
  const RatMatrix m = conic_matrix(P("x^2"));
  CHECK(m == RatMatrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  CHECK(rank(m) == 1);
  CHECK_THROWS(matrix_conic(RatMatrix{{1, 2, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("conic matrix round trip and quadratic-form identity") {
  testkit::Gen g(5);
  for (int i = 0; i < 100; ++i) {
    const RatForm q = g.form(2, 9);
    const RatMatrix m = conic_matrix(q);
    CHECK(matrix_conic(m) == q);
    const std::array<Rat, 3> v{g.rat(), g.rat(), g.rat()};
    Rat vmv(0);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) vmv = vmv + v[r] * m(r, c) * v[c];
    CHECK(vmv == q.eval(v));
  }
}

TEST_CASE("Jacobian nets") {
  const Net fermat = jacobian_net(P("x^3 + y^3 + z^3"));
  for (const char* q : {"x^2", "y^2", "z^2"}) CHECK(net_contains(P(q), fermat));
  CHECK_FALSE(net_contains(P("x*y"), fermat));
  CHECK_THROWS_WITH(jacobian_net(P("x^3")), doctest::Contains("degenerate Jacobian net"));

  const Rat lambda = Rat::normalize(-7, 3);
  const Net j = jacobian_net(hesse_cubic(lambda));
  const Net w = w_lambda(lambda);
  for (const auto& q : w.basis()) CHECK(net_contains(q, j));
}

TEST_CASE("net discriminant cubics") {
  const Net h0({P("x*y"), P("x^2 + y*z"), P("y^2 + x*z")});
  CHECK(net_discriminant_cubic(h0) == Rat::normalize(1, 4) * P("-b^3 - c^3 + a*b*c"));
  CHECK(net_discriminant_cubic(Net({P("x^2"), P("y^2"), P("z^2")})) == P("a*b*c"));

  const RatForm w1 = net_discriminant_cubic(w_lambda(Rat(1)));
  CHECK(w1 == Rat::normalize(1, 4) * P("5*a*b*c - a^3 - b^3 - c^3"));
  CHECK(hessian_cubic(hesse_cubic(Rat(1))) == Rat(54) * P("5*x*y*z - x^3 - y^3 - z^3"));

  testkit::Gen g(21);
  for (int i = 0; i < 20; ++i) {
    std::array<RatForm, 3> basis{g.form(2), g.form(2), g.form(2)};
    try {
      const Net w(basis);
      CHECK(net_discriminant_cubic(w) == sarrus_discriminant(basis));
    } catch (const Error&) {
      // Dependent draws are not nets.
    }
  }
}

TEST_CASE("re-basing a net leaves j of its discriminant cubic unchanged") {
  testkit::Gen g(31);
  int checked = 0;
  for (int i = 0; i < 15; ++i) {
    const std::array<RatForm, 3> basis{g.form(2, 4), g.form(2, 4), g.form(2, 4)};
    const RatMatrix a = g.invertible(2);
    std::array<RatForm, 3> rebased;
    for (int r = 0; r < 3; ++r) {
      rebased[r] = RatForm::zero(2);
      for (int c = 0; c < 3; ++c) rebased[r] = rebased[r] + a(r, c) * basis[c];
    }
    try {
      const Net w(basis), v(rebased);
      CHECK(j_invariant(net_discriminant_cubic(w)) == j_invariant(net_discriminant_cubic(v)));
      ++checked;
    } catch (const Error&) {
    }
  }
  CHECK(checked >= 10);
}

TEST_CASE("net membership") {
  const Rat lambda(4);
  const Net w = w_lambda(lambda);
  CHECK(net_contains(P("x^2 + 4*y*z"), w));
  CHECK_FALSE(net_contains(P("x^2"), w));
  CHECK(net_contains(RatForm::zero(2), w));
  CHECK(w_lambda_contains(P("x^2 + 4*y*z"), lambda));
  CHECK_FALSE(w_lambda_contains(P("x^2"), lambda));
  testkit::Gen g(8);
  for (int i = 0; i < 50; ++i) {
    const RatForm q = g.form(2, 3);
    CHECK(net_contains(q, w) == w_lambda_contains(q, lambda));
  }
}

TEST_CASE("parser and printer") {
  const RatForm f = P("x^2 + 2/3*y*z - 5*x*y");
  CHECK(f.degree() == 2);
  CHECK(f.coeff({0, 1, 1}) == Rat::normalize(2, 3));
  CHECK(P(to_string(f).c_str()) == f);
  CHECK(to_string(P("a*b*c - b^3"), "abc").find('a') != std::string::npos);
  CHECK_THROWS(P("x^2 + y"));
  CHECK_THROWS(P("x^2 + a*b"));
  CHECK_THROWS(P("x^^2"));
}

TEST_CASE("form invariants and operator laws") {
  CHECK_THROWS(RatForm(2, RatForm::Terms{{{1, 1, 1}, Rat(1)}}));
  CHECK(RatForm(2, RatForm::Terms{{{2, 0, 0}, Rat(0)}}).is_zero());
  for (const auto& r : {testkit::prop_euler_identity(3, 100), testkit::prop_substitution_action(4, 40)}) {
    INFO(r.name << ": " << r.first_failure);
    CHECK(r.ok());
  }
}
