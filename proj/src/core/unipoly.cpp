#include "core/unipoly.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "core/error.hpp"

namespace netconics {

UniPoly UniPoly::monomial(int k, const Rat& c) {
  std::vector<Rat> v(static_cast<std::size_t>(k) + 1, Rat(0));
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat UniPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

CplxApprox UniPoly::eval(CplxApprox x) const {
  CplxApprox acc{};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  const Rat inv = leading().inverse();
  std::vector<Rat> v = c_;
  for (auto& x : v) x *= inv;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return {};
  mpz_class lcm_den = 1;
  for (const auto& x : c_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.den().get_mpz_t());
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& x : c_) {
    mpz_class v = x.num() * (lcm_den / x.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (sgn(ints.back()) < 0) g = -g;
  std::vector<Rat> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(mpz_class(v / g));
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[i];
    if (c.is_zero()) continue;
    const Rat mag = c.abs();
    if (first) os << (c.sign() < 0 ? "-" : "");
    else os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    const bool unit = mag == Rat(1);
    if (i == 0) { os << mag; continue; }
    if (!unit) os << mag << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::vector<double> UniPoly::to_doubles() const {
  std::vector<double> v;
  v.reserve(c_.size());
  for (const auto& x : c_) v.push_back(x.to_double());
  return v;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator-(const UniPoly& a) {
  std::vector<Rat> v = a.c_;
  for (auto& x : v) x = -x;
  return UniPoly(std::move(v));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly pow(const UniPoly& p, unsigned e) {
  UniPoly result(1);
  UniPoly sq = p;
  while (e != 0) {
    if (e & 1U) result = result * sq;
    sq = sq * sq;
    e >>= 1U;
  }
  return result;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g) {
  if (g.is_zero()) throw Error(ErrorCode::kDomain, "polynomial division by zero");
  std::vector<Rat> rem = f.coeffs();
  const int dg = g.degree();
  if (f.degree() < dg) return {UniPoly(), f};
  std::vector<Rat> quo(static_cast<std::size_t>(f.degree() - dg) + 1, Rat(0));
  const Rat inv = g.leading().inverse();
  for (int k = f.degree() - dg; k >= 0; --k) {
    const Rat q = rem[k + dg] * inv;
    quo[k] = q;
    if (q.is_zero()) continue;
    for (int i = 0; i <= dg; ++i) rem[k + i] -= q * g.coeff(i);
  }
  rem.resize(static_cast<std::size_t>(dg));
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& f, const UniPoly& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) throw Error(ErrorCode::kDomain, "inexact polynomial division");
  return q;
}

UniPoly gcd(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::kDomain, "gcd of two zero polynomials");
  UniPoly a = f.monic();
  UniPoly b = g.monic();
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::kDomain, "square-free decomposition of zero");
  std::vector<SquarefreeFactor> out;
  if (f.degree() == 0) return out;
  const UniPoly fp = f.derivative();
  const UniPoly a0 = gcd(f, fp);
  UniPoly b = exact_div(f, a0);
  UniPoly c = exact_div(fp, a0);
  UniPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    const UniPoly a = gcd(b, d);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
    if (a.degree() > 0) out.push_back({a.monic(), i});
  }
  return out;
}

UniPoly squarefree_part(const UniPoly& f) {
  UniPoly p(1);
  for (const auto& sf : squarefree_decomposition(f)) p = p * sf.factor;
  return p;
}

Rat resultant(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::kDomain, "resultant with zero polynomial");
  if (f.degree() == 0) return pow(f.leading(), static_cast<unsigned>(g.degree()));
  if (g.degree() == 0) return pow(g.leading(), static_cast<unsigned>(f.degree()));
  return det_field(sylvester(f.coeffs(), g.coeffs()));
}

Rat discriminant(const UniPoly& f) {
  const int n = f.degree();
  if (n < 1) throw Error(ErrorCode::kDomain, "discriminant of a constant");
  Rat d = resultant(f, f.derivative()) / f.leading();
  if ((n * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

namespace {

double residual_ratio(const std::vector<CplxApprox>& a, CplxApprox z) {
  CplxApprox v{};
  double scale = 0.0;
  const double r = std::abs(z);
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    v = v * z + *it;
    scale = scale * r + std::abs(*it);
  }
  return scale == 0.0 ? 0.0 : std::abs(v) / scale;
}

}  // namespace

std::vector<CplxApprox> complex_roots(const std::vector<CplxApprox>& coeffs, double tol) {
  std::vector<CplxApprox> a = coeffs;
  while (!a.empty() && a.back() == CplxApprox{}) a.pop_back();
  const int n = static_cast<int>(a.size()) - 1;
  if (n < 1) throw Error(ErrorCode::kInvalidInput, "root finding needs degree >= 1");
  const CplxApprox lead = a.back();
  for (auto& c : a) c /= lead;
  if (n == 1) return {-a[0]};

  double bound = 0.0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(a[i]));
  bound += 1.0;

  std::vector<CplxApprox> z(static_cast<std::size_t>(n));
  const CplxApprox seed(0.4, 0.9);
  CplxApprox p(1.0, 0.0);
  for (int i = 0; i < n; ++i) {
    z[i] = bound * p;
    p *= seed;
  }

  auto worst = [&] {
    double w = 0.0;
    for (const auto& zi : z) w = std::max(w, residual_ratio(a, zi));
    return w;
  };

  double best = worst();
  std::vector<CplxApprox> best_z = z;
  for (int iter = 0; iter < 1000 && best >= tol; ++iter) {
    for (int i = 0; i < n; ++i) {
      CplxApprox num{};
      for (auto it = a.rbegin(); it != a.rend(); ++it) num = num * z[i] + *it;
      CplxApprox den(1.0, 0.0);
      for (int j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      if (den == CplxApprox{}) den = CplxApprox(1e-300, 0.0);
      z[i] -= num / den;
    }
    const double w = worst();
    if (w < best) {
      best = w;
      best_z = z;
    }
  }
  if (best >= tol) {
    std::ostringstream os;
    os << "Durand-Kerner did not converge; best residual " << best;
    throw Error(ErrorCode::kNumericFailure, os.str());
  }
  return best_z;
}

std::vector<CplxApprox> complex_roots(const UniPoly& f, double tol) {
  if (f.degree() < 1) throw Error(ErrorCode::kInvalidInput, "root finding needs degree >= 1");
  std::vector<CplxApprox> c;
  for (double v : f.monic().to_doubles()) c.emplace_back(v, 0.0);
  return complex_roots(c, tol);
}

CplxApprox newton_polish(const UniPoly& f, CplxApprox z, int steps) {
  const UniPoly fp = f.derivative();
  for (int i = 0; i < steps; ++i) {
    const CplxApprox d = fp.eval(z);
    if (d == CplxApprox{}) break;
    const CplxApprox step = f.eval(z) / d;
    z -= step;
    if (std::abs(step) <= 1e-17 * (1.0 + std::abs(z))) break;
  }
  return z;
}

namespace {

// High-precision Newton on an integer polynomial near a real root, then the
// continued-fraction convergents with denominator bounded by the leading
// coefficient (rational roots p/q of a primitive polynomial have q | lc).
std::optional<Rat> recover_rational_root(const UniPoly& prim, double approx) {
  constexpr unsigned kBits = 1024;
  std::vector<mpf_class> c;
  for (const auto& x : prim.coeffs()) c.emplace_back(mpf_class(x.num(), kBits));
  mpf_class x(approx, kBits);
  for (int it = 0; it < 200; ++it) {
    mpf_class v(0, kBits), d(0, kBits);
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
      d = d * x + v;
      v = v * x + c[i];
    }
    if (d == 0) break;
    mpf_class step(v / d, kBits);
    x -= step;
    if (abs(step) <= abs(x) * mpf_class(1e-280, kBits) || step == 0) break;
  }
  const mpz_class qmax = abs(prim.leading().num());
  // Convergents h/k of x.
  mpz_class h_prev = 1, h = 0, k_prev = 0, k = 1;
  mpf_class rem = x;
  for (int it = 0; it < 4000; ++it) {
    mpf_class fl(0, kBits);
    mpf_floor(fl.get_mpf_t(), rem.get_mpf_t());
    mpz_class a(fl);
    mpz_class h_new = a * h_prev + h;
    mpz_class k_new = a * k_prev + k;
    h = h_prev; k = k_prev;
    h_prev = h_new; k_prev = k_new;
    if (k_prev > qmax) break;
    Rat cand = Rat::normalize(h_prev, k_prev);
    if (prim.eval(cand).is_zero()) return cand;
    mpf_class frac(rem - fl, kBits);
    if (frac == 0) break;
    rem = mpf_class(1, kBits) / frac;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Rat> rational_roots(const UniPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::kDomain, "rational roots of the zero polynomial");
  std::vector<Rat> roots;
  UniPoly rest = squarefree_part(f).primitive();
  // Exact zero root first keeps the convergent search away from 0.
  if (rest.degree() >= 1 && rest.coeff(0).is_zero()) {
    roots.emplace_back(0);
    rest = exact_div(rest, UniPoly::monomial(1)).primitive();
  }
  while (rest.degree() >= 1) {
    if (rest.degree() == 1) {
      roots.push_back(-rest.coeff(0) / rest.coeff(1));
      break;
    }
    std::vector<CplxApprox> approx;
    try {
      approx = complex_roots(rest, 1e-13);
    } catch (const Error&) {
      approx = complex_roots(rest, 1e-9);
    }
    bool found = false;
    for (const auto& z : approx) {
      if (std::abs(z.imag()) > 1e-6 * (1.0 + std::abs(z))) continue;
      if (auto r = recover_rational_root(rest, z.real())) {
        roots.push_back(*r);
        const mpz_class neg_num = -r->num();
        rest = exact_div(rest, UniPoly({Rat(neg_num), Rat(r->den())})).primitive();
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

BinaryForm::BinaryForm(int degree, std::vector<Rat> coeffs) : degree_(degree), c_(std::move(coeffs)) {
  if (degree < 0 || c_.size() != static_cast<std::size_t>(degree) + 1)
    throw Error(ErrorCode::kInvalidInput, "binary form needs degree+1 coefficients");
}

BinaryForm BinaryForm::variable(int which) {
  return which == 0 ? BinaryForm(1, {Rat(1), Rat(0)}) : BinaryForm(1, {Rat(0), Rat(1)});
}

bool BinaryForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x.is_zero(); });
}

Rat BinaryForm::eval(const Rat& t0, const Rat& t1) const {
  Rat acc(0);
  for (int i = 0; i <= degree_; ++i)
    acc += c_[i] * pow(t0, static_cast<unsigned>(degree_ - i)) * pow(t1, static_cast<unsigned>(i));
  return acc;
}

UniPoly BinaryForm::dehomogenize() const { return UniPoly(c_); }

BinaryForm BinaryForm::primitive() const {
  if (is_zero()) return *this;
  UniPoly p = UniPoly(c_).primitive();
  std::vector<Rat> v = p.coeffs();
  v.resize(c_.size(), Rat(0));
  // UniPoly::primitive fixes the sign of the top coefficient; flip to make the
  // first nonzero coefficient positive instead.
  auto first = std::find_if(v.begin(), v.end(), [](const Rat& x) { return !x.is_zero(); });
  if (first->sign() < 0)
    for (auto& x : v) x = -x;
  return {degree_, std::move(v)};
}

std::string BinaryForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree_; ++i) {
    const Rat& c = c_[i];
    if (c.is_zero()) continue;
    os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
    first = false;
    const Rat mag = c.abs();
    const int e0 = degree_ - i;
    const bool has_var = e0 > 0 || i > 0;
    if (!(mag == Rat(1)) || !has_var) os << mag << (has_var ? "*" : "");
    if (e0 > 0) os << "t0" << (e0 > 1 ? "^" + std::to_string(e0) : "");
    if (e0 > 0 && i > 0) os << "*";
    if (i > 0) os << "t1" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return first ? "0" : os.str();
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree_ != b.degree_)
    throw Error(ErrorCode::kInvalidInput, "adding binary forms of different degree");
  BinaryForm s = a;
  for (std::size_t i = 0; i < s.c_.size(); ++i) s.c_[i] += b.c_[i];
  return s;
}

BinaryForm operator-(const BinaryForm& a) {
  BinaryForm n = a;
  for (auto& x : n.c_) x = -x;
  return n;
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + (-b); }

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  std::vector<Rat> v(static_cast<std::size_t>(a.degree_ + b.degree_) + 1, Rat(0));
  for (int i = 0; i <= a.degree_; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j <= b.degree_; ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return {a.degree_ + b.degree_, std::move(v)};
}

int MultiplicityProfile::total_degree() const {
  int t = 0;
  for (auto [m, c] : counts) t += m * c;
  return t;
}

int MultiplicityProfile::distinct_roots() const {
  int t = 0;
  for (auto [m, c] : counts) t += c;
  return t;
}

std::string MultiplicityProfile::to_string() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (auto [m, c] : counts) {
    os << (first ? "" : ",") << "(" << m << "," << c << ")";
    first = false;
  }
  os << "]";
  return os.str();
}

MultiplicityProfile profile_of(const std::vector<SquarefreeFactor>& factors) {
  MultiplicityProfile p;
  for (const auto& f : factors) p.counts[f.multiplicity] += f.factor.degree();
  return p;
}

MultiplicityProfile binary_profile(const BinaryForm& form) {
  if (form.is_zero()) throw Error(ErrorCode::kDomain, "profile of the zero binary form");
  const UniPoly affine = form.dehomogenize();
  MultiplicityProfile p = profile_of(squarefree_decomposition(affine));
  const int defect = form.degree() - affine.degree();
  if (defect > 0) p.counts[defect] += 1;
  return p;
}

}  // namespace netconics
