#include "core/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "core/error.hpp"
#include "core/unipoly.hpp"

namespace netconics {

namespace {

constexpr int kAttempts = 16;
constexpr double kResidualTol = 1e-9;

std::array<CplxApprox, 3> normalize_numeric(std::array<CplxApprox, 3> p) {
  std::size_t big = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(p[i]) > std::abs(p[big]) * (1 + 1e-12)) big = i;
  const CplxApprox s = p[big];
  for (auto& v : p) v /= s;
  return p;
}

// Dehomogenized at z = 1 and collected by powers of x; entry i is the
// coefficient of x^i as a polynomial in y.
std::vector<UniPoly> as_bivariate(const RatForm& f) {
  std::vector<UniPoly> c(static_cast<std::size_t>(f.degree()) + 1);
  for (const auto& [e, v] : f.terms()) c[e[0]] += UniPoly::monomial(e[1], v);
  return c;
}

UniPoly restrict_to_y(const RatForm& f, const Rat& y) {
  std::vector<Rat> c(static_cast<std::size_t>(f.degree()) + 1, Rat(0));
  for (const auto& [e, v] : f.terms()) c[e[0]] += v * pow(y, static_cast<unsigned>(e[1]));
  return UniPoly(std::move(c));
}

// Binary form f(x, 1, 0) as a polynomial in x.
UniPoly restrict_to_infinity(const RatForm& f) {
  std::vector<Rat> c(static_cast<std::size_t>(f.degree()) + 1, Rat(0));
  for (const auto& [e, v] : f.terms())
    if (e[2] == 0) c[e[0]] += v;
  return UniPoly(std::move(c));
}

UniPoly eliminate_x(const RatForm& a, const RatForm& b) {
  return det_cofactor(sylvester(as_bivariate(a), as_bivariate(b)));
}

CplxForm to_cplx(const RatForm& f) {
  return f.map_coeffs<CplxApprox>([](const Rat& c) { return to_complex(c); });
}

// Two-variable Newton on (f, g) over the chart z = 1.
std::pair<CplxApprox, CplxApprox> polish(const CplxForm& f, const CplxForm& g, CplxApprox x, CplxApprox y) {
  const CplxForm fx = f.partial(0), fy = f.partial(1), gx = g.partial(0), gy = g.partial(1);
  for (int it = 0; it < 12; ++it) {
    const std::array<CplxApprox, 3> p{x, y, 1.0};
    const CplxApprox fv = f.eval<CplxApprox>(p), gv = g.eval<CplxApprox>(p);
    const CplxApprox a = fx.eval<CplxApprox>(p), b = fy.eval<CplxApprox>(p);
    const CplxApprox c = gx.eval<CplxApprox>(p), d = gy.eval<CplxApprox>(p);
    const CplxApprox det = a * d - b * c;
    if (std::abs(det) < 1e-300) break;
    const CplxApprox dx = (d * fv - b * gv) / det;
    const CplxApprox dy = (a * gv - c * fv) / det;
    x -= dx;
    y -= dy;
    if (std::abs(dx) + std::abs(dy) < 1e-16 * (1.0 + std::abs(x) + std::abs(y))) break;
  }
  return {x, y};
}

std::vector<CplxApprox> roots_in_x(const CplxForm& f, CplxApprox y) {
  std::vector<CplxApprox> c(static_cast<std::size_t>(f.degree()) + 1);
  for (const auto& [e, v] : f.terms()) c[e[0]] += v * std::pow(y, e[1]);
  while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
  if (c.size() < 2) return {};
  return complex_roots(c, 1e-13);
}

RatMatrix random_change(std::mt19937_64& rng) {
  while (true) {
    RatMatrix g(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g(i, j) = Rat(static_cast<long>(rng() % 9) - 4);
    if (!det_field(g).is_zero()) return g;
  }
}

Rat random_small(std::mt19937_64& rng) { return Rat(static_cast<long>(rng() % 11) - 5); }

}  // namespace

ProjectivePoint make_point(std::array<Rat, 3> p) {
  std::size_t big = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (p[i].abs() > p[big].abs()) big = i;
  if (p[big].is_zero()) throw Error(ErrorCode::kInvalidInput, "the zero vector is not a projective point");
  const Rat s = p[big];
  for (auto& v : p) v /= s;
  ProjectivePoint out;
  for (std::size_t i = 0; i < 3; ++i) out.approx[i] = to_complex(p[i]);
  out.exact = std::move(p);
  return out;
}

ProjectivePoint make_point(std::array<CplxApprox, 3> p) {
  ProjectivePoint out;
  out.approx = normalize_numeric(p);
  return out;
}

ZeroSet common_zeros(const std::vector<RatForm>& input, std::uint64_t seed) {
  std::vector<RatForm> forms;
  for (const auto& f : input)
    if (!f.is_zero()) forms.push_back(f);
  ZeroSet result;
  if (forms.size() < 2) {
    // One curve (or the whole plane) is never a finite set.
    result.positive_dimensional = true;
    if (forms.size() == 1 && forms[0].degree() == 0) result.positive_dimensional = false;
    return result;
  }
  const int degree = forms[0].degree();
  for (const auto& f : forms)
    if (f.degree() != degree) throw Error(ErrorCode::kInvalidInput, "common_zeros needs forms of equal degree");
  if (degree == 0) return result;

  std::mt19937_64 rng(0x6e6574636f6e6963ULL ^ seed);
  int vanishing_resultants = 0;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const RatMatrix g = random_change(rng);
    std::vector<RatForm> moved;
    for (const auto& f : forms) moved.push_back(f.substitute(g));
    RatForm q1 = RatForm::zero(degree), q2 = RatForm::zero(degree);
    for (const auto& f : moved) {
      q1 = q1 + random_small(rng) * f;
      q2 = q2 + random_small(rng) * f;
    }
    const Exponent lead{degree, 0, 0};
    if (q1.coeff(lead).is_zero() || q2.coeff(lead).is_zero()) continue;

    const UniPoly res = eliminate_x(q1, q2);
    if (res.is_zero()) {
      if (++vanishing_resultants >= 3) {
        result.positive_dimensional = true;
        return result;
      }
      continue;
    }

    UniPoly at_infinity;
    for (const auto& f : moved) {
      const UniPoly r = restrict_to_infinity(f);
      at_infinity = at_infinity.is_zero() ? r.monic() : (r.is_zero() ? at_infinity : gcd(at_infinity, r));
    }
    if (at_infinity.is_zero() || at_infinity.degree() > 0) continue;

    UniPoly h = res;
    for (const auto& f : moved) {
      const UniPoly r = eliminate_x(q1, f);
      if (!r.is_zero()) h = gcd(h, r);
    }
    if (h.degree() <= 0) return result;

    std::vector<std::array<Rat, 3>> exact_pts;
    std::vector<std::array<CplxApprox, 3>> numeric_pts;
    bool degenerate = false;

    const std::vector<Rat> ys = rational_roots(h);
    UniPoly irrational = squarefree_part(h);
    for (const auto& y : ys) {
      irrational = exact_div(irrational, UniPoly({-y, Rat(1)}));
      UniPoly gx;
      for (const auto& f : moved) {
        const UniPoly r = restrict_to_y(f, y);
        if (!r.is_zero()) gx = gx.is_zero() ? r.monic() : gcd(gx, r);
      }
      if (gx.is_zero()) { degenerate = true; break; }
      if (gx.degree() <= 0) continue;
      const std::vector<Rat> xs = rational_roots(gx);
      UniPoly rest = squarefree_part(gx);
      for (const auto& x : xs) {
        exact_pts.push_back({x, y, Rat(1)});
        rest = exact_div(rest, UniPoly({-x, Rat(1)}));
      }
      if (rest.degree() > 0)
        for (auto x : complex_roots(rest, 1e-13))
          numeric_pts.push_back({newton_polish(rest, x), to_complex(y), 1.0});
    }
    if (degenerate) {
      result.positive_dimensional = true;
      return result;
    }

    if (irrational.degree() > 0) {
      const CplxForm c1 = to_cplx(q1), c2 = to_cplx(q2);
      std::vector<CplxForm> cmoved;
      for (const auto& f : moved) cmoved.push_back(to_cplx(f));
      for (auto y : complex_roots(irrational, 1e-13)) {
        y = newton_polish(irrational, y);
        for (auto x : roots_in_x(c1, y)) {
          auto [px, py] = polish(c1, c2, x, y);
          const auto p = normalize_numeric({px, py, 1.0});
          double worst = 0.0;
          for (const auto& f : cmoved) worst = std::max(worst, scaled_residual(f, p));
          if (worst > 1e-7) continue;
          bool dup = false;
          for (const auto& q : numeric_pts)
            dup = dup || std::abs(q[0] - px) + std::abs(q[1] - py) < 1e-7 * (1.0 + std::abs(px) + std::abs(py));
          if (!dup) numeric_pts.push_back({px, py, 1.0});
        }
      }
    }

    // Back to the original coordinates: the zero v of F o g maps to g v.
    for (const auto& v : exact_pts) {
      std::array<Rat, 3> p{Rat(0), Rat(0), Rat(0)};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) p[i] += g(i, j) * v[j];
      ProjectivePoint pt = make_point(p);
      for (const auto& f : forms)
        if (!f.eval<Rat>(*pt.exact).is_zero()) throw Error(ErrorCode::kVerificationFailed, "exact zero failed verification");
      result.points.push_back(std::move(pt));
    }
    std::sort(result.points.begin(), result.points.end(), [](const ProjectivePoint& a, const ProjectivePoint& b) {
      const auto& x = *a.exact;
      const auto& y = *b.exact;
      for (std::size_t i = 0; i < 3; ++i)
        if (!(x[i] == y[i])) return x[i] > y[i];
      return false;
    });
    for (const auto& v : numeric_pts) {
      std::array<CplxApprox, 3> p{};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) p[i] += to_complex(g(i, j)) * v[j];
      ProjectivePoint pt = make_point(p);
      for (const auto& f : forms) pt.residual = std::max(pt.residual, scaled_residual(f, pt.approx));
      if (pt.residual > kResidualTol) continue;
      result.points.push_back(std::move(pt));
    }
    return result;
  }
  throw Error(ErrorCode::kNumericFailure, "no generic coordinate change found for zero-set computation");
}

}  // namespace netconics
