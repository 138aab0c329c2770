#include "core/hesse.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"

namespace netconics {

HesseParam hesse_param(const EisRat& lambda) {
  const EisRat cube = pow(lambda, 3);
  return {lambda, lambda.is_zero() || cube == EisRat(-1) || cube == EisRat(8)};
}

namespace {

Rat checked_cube_plus_one(const Rat& lambda) {
  const Rat denom = pow(lambda, 3) + Rat(1);
  if (denom.is_zero()) throw Error(ErrorCode::kDomain, "singular Hesse member: lambda^3 = -1");
  return denom;
}

}  // namespace

Rat hesse_j(const Rat& lambda) {
  const Rat denom = checked_cube_plus_one(lambda);
  const Rat l3 = pow(lambda, 3);
  return Rat(-27) * l3 * pow(l3 - Rat(8), 3) / pow(denom, 3);
}

Rat hesse_j_alt_normalization(const Rat& lambda) {
  const Rat denom = checked_cube_plus_one(lambda);
  const Rat l3 = pow(lambda, 3);
  return l3 * pow(l3 - Rat(8), 3) / (Rat(27) * pow(denom, 3));
}

HessianIdentityResult hessian_identity_check(const Rat& lambda, const Calibration& cal) {
  checked_cube_plus_one(lambda);
  HessianIdentityResult r;
  r.lambda = lambda;
  const ExtendedJ j_phi = j_invariant(hesse_cubic(lambda), cal);
  if (!j_phi.is_finite()) throw Error(ErrorCode::kDomain, "Hesse member is singular");
  r.j_phi = j_phi.value();
  if (r.j_phi.is_zero()) throw Error(ErrorCode::kDomain, "formula pole: j = 0");
  r.j_formula = hesse_j(lambda);
  r.j_gamma = j_invariant(net_discriminant_cubic(w_lambda(lambda)), cal);
  r.rhs = pow(Rat(6912) - r.j_phi, 3) / (Rat(27) * r.j_phi * r.j_phi);
  r.equal = r.j_gamma.is_finite() && r.j_gamma.value() == r.rhs && r.j_formula == r.j_phi;
  return r;
}

UniPoly fb_poly(const Rat& b) {
  const UniPoly j = UniPoly::monomial(1);
  return pow(UniPoly(Rat(6912)) - j, 3) - UniPoly(Rat(27) * b) * j * j;
}

FbAnalysis fb_root_analysis(const Rat& b) {
  FbAnalysis a;
  a.b = b;
  a.poly = fb_poly(b);
  const auto factors = squarefree_decomposition(a.poly);
  a.profile = profile_of(factors);
  for (const auto& f : factors) {
    UniPoly rest = f.factor.monic();
    for (const auto& r : rational_roots(rest)) {
      a.roots.push_back({r, to_complex(r), f.multiplicity});
      rest = exact_div(rest, UniPoly({-r, Rat(1)}));
    }
    if (rest.degree() > 0)
      for (auto z : complex_roots(rest, 1e-13)) {
        z = newton_polish(rest, z);
        if (std::abs(z.imag()) < 1e-12 * std::abs(z)) z = {z.real(), 0.0};
        a.roots.push_back({std::nullopt, z, f.multiplicity});
      }
  }
  std::stable_sort(a.roots.begin(), a.roots.end(), [](const FbRoot& x, const FbRoot& y) {
    if (x.exact.has_value() != y.exact.has_value()) return x.exact.has_value();
    if (x.exact) return *x.exact < *y.exact;
    if (x.approx.real() != y.approx.real()) return x.approx.real() < y.approx.real();
    return x.approx.imag() < y.approx.imag();
  });
  return a;
}

FbCritical fb_critical_b() {
  // f_b = -j^3 + (3k - 27b) j^2 - 3k^2 j + k^3 with k = 6912; each
  // coefficient in j is a polynomial in b.
  const UniPoly b = UniPoly::monomial(1);
  const Rat k(6912);
  const std::vector<UniPoly> f{UniPoly(k * k * k), UniPoly(Rat(-3) * k * k), UniPoly(Rat(3) * k) - UniPoly(Rat(27)) * b,
                               UniPoly(Rat(-1))};
  std::vector<UniPoly> df;
  for (std::size_t i = 1; i < f.size(); ++i) df.push_back(UniPoly(Rat(static_cast<long>(i))) * f[i]);
  FbCritical out;
  out.discriminant = det_cofactor(sylvester(f, df)).primitive();
  out.values = rational_roots(out.discriminant);
  std::sort(out.values.begin(), out.values.end());
  return out;
}

FiberDecomposition fiber_decomposition(const Rat& b) {
  FiberDecomposition d;
  d.b = b;
  d.terms = fb_root_analysis(b).roots;
  for (const auto& t : d.terms) d.multiplicity_sum += t.multiplicity;
  return d;
}

}  // namespace netconics
