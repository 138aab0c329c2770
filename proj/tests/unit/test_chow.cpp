#include "core/chow.hpp"
#include "core/error.hpp"
#include "doctest.h"
#include "testkit.hpp"

using namespace netconics;

namespace {

// Oracle: expand (d lambda - 2 sum e_i)(d-1 lambda - sum e_i)^2 by hand:
// lambda^3 term d (d-1)^2; each e_i^3 term -2 * 1 with deg e_i^3 = 1.
long expanded_dual_degree(long d, long n) { return d * (d - 1) * (d - 1) - 2 * n; }

}  // namespace

TEST_CASE("multiplication relations") {
  const int n = 4;
  const ChowClass l = ChowClass::lambda(n), e1 = ChowClass::exceptional(n, 1);
  CHECK(multiply(l, l) == ChowClass(n, 2, 1, {0, 0, 0, 0}));
  CHECK(multiply(e1, e1) == ChowClass(n, 2, 0, {-1, 0, 0, 0}));
  CHECK(multiply(l, e1) == ChowClass::zero(n, 2));
  CHECK(multiply(e1, multiply(e1, e1)) == ChowClass(n, 3, 0, {1, 0, 0, 0}));
  CHECK(multiply(ChowClass::one(n), e1) == e1);
  CHECK_THROWS(multiply(multiply(l, l), multiply(l, l)));
  CHECK_THROWS(multiply(ChowClass::lambda(3), ChowClass::lambda(4)));
  CHECK_THROWS(ChowClass(2, 0, 1, {1, 0}));
}

TEST_CASE("degrees") {
  const int n = 4;
  CHECK(degree(ChowClass(n, 3, 12, {-2, -2, -2, -2})) == 4);
  CHECK(degree(ChowClass(n, 3, 1, {0, 0, 0, 0})) == 1);
  const ChowClass e1 = ChowClass::exceptional(n, 1);
  CHECK(degree(multiply(e1, multiply(e1, e1))) == 1);
  CHECK_THROWS(degree(ChowClass::lambda(n)));
}

TEST_CASE("strict transform and polar map classes") {
  CHECK(strict_transform_class(3, {2, 2, 2, 2}).to_lambda_e_string() == "3λ - 2e1 - 2e2 - 2e3 - 2e4");
  CHECK(strict_transform_class(3, {0, 0, 0, 0}).to_lambda_e_string() == "3λ");
  // Restricting to E_i picks up -m_i times the line class; an ordinary double point has m_i = 2.
  const ChowClass x = strict_transform_class(3, {2, 2, 2, 2});
  const ChowClass e2 = ChowClass::exceptional(4, 2);
  CHECK(multiply(x, e2).gamma_coeffs()[1] == 2);
  CHECK(polar_map_class(3, 4).to_lambda_e_string() == "2λ - e1 - e2 - e3 - e4");
  CHECK(polar_map_class(2, 0).to_lambda_e_string() == "λ");
  CHECK(polar_map_class(4, 1).to_lambda_e_string() == "3λ - e1");
  CHECK(polar_map_class(3, 4).to_string() == "2Λ_1 - Γ_{1,1} - Γ_{1,2} - Γ_{1,3} - Γ_{1,4}");
  CHECK_THROWS(polar_map_class(1, 0));
}

TEST_CASE("dual degree") {
  CHECK(dual_degree(3, 4) == 4);
  CHECK(dual_degree(3, 0) == 12);
  CHECK(dual_degree(2, 0) == 2);
  const DualDegreeTrace t = dual_degree_trace(3, 4);
  CHECK(t.product.to_lambda_e_string() == "12λ^3 - 2e1^3 - 2e2^3 - 2e3^3 - 2e4^3");
  for (int d = 2; d <= 6; ++d)
    for (int n = 0; n <= 8; ++n) CHECK(dual_degree(d, n) == expanded_dual_degree(d, n));
}

TEST_CASE("Chow ring suite") {
  const auto r = testkit::prop_chow_ring_laws(61, 300);
  INFO(r.first_failure);
  CHECK(r.ok());
}
