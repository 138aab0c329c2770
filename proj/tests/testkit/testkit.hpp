#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "core/chow.hpp"
#include "core/invariants.hpp"
#include "core/matrix.hpp"
#include "core/scalars.hpp"
#include "core/ternary.hpp"
#include "core/unipoly.hpp"

namespace testkit {

using netconics::BinaryForm;
using netconics::EisRat;
using netconics::Rat;
using netconics::RatForm;
using netconics::RatMatrix;
using netconics::UniPoly;

/// Hand-rolled generator used by every property test.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Rat rat(long bound = 50, long max_den = 12);
  Rat nonzero_rat(long bound = 50, long max_den = 12);
  EisRat eis(long bound = 20, long max_den = 6);
  RatForm form(int degree, long bound = 5);
  RatMatrix invertible(long bound = 3);
  UniPoly poly(int degree, long bound = 9);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// 1728 * 4a^3 / (4a^3 + 27b^2), the anchor formula for
/// y^2 z - x^3 - a x z^2 - b z^3.
Rat weierstrass_j(const Rat& a, const Rat& b);
RatForm weierstrass_cubic(const Rat& a, const Rat& b);

/// j of x^3 + y^3 + z^3 + 3 nu xyz, written out directly in Q.
Rat hesse_j_closed(const Rat& nu);

/// Determinant of a 3x3 matrix by the rule of Sarrus, over forms.
RatForm sarrus(const std::array<std::array<RatForm, 3>, 3>& m);

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }
};

PropertyResult prop_rat_field_axioms(std::uint64_t seed, int cases);
PropertyResult prop_eis_field_axioms(std::uint64_t seed, int cases);
PropertyResult prop_euler_identity(std::uint64_t seed, int cases);
PropertyResult prop_substitution_action(std::uint64_t seed, int cases);
PropertyResult prop_j_gl_invariance(std::uint64_t seed, int cases);
PropertyResult prop_discriminant_covariance(std::uint64_t seed, int cases);
PropertyResult prop_weierstrass_anchor(std::uint64_t seed, int cases);
PropertyResult prop_yun_reconstruction(std::uint64_t seed, int cases);
PropertyResult prop_binary_profile_degree(std::uint64_t seed, int cases);
PropertyResult prop_chow_ring_laws(std::uint64_t seed, int cases);

/// Every suite above with its default case count.
std::vector<PropertyResult> all_properties(std::uint64_t seed);

}  // namespace testkit
