#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "core/matrix.hpp"
#include "core/scalars.hpp"

namespace netconics {

/// Dense univariate polynomial over Q, lowest degree first. The zero
/// polynomial is the empty coefficient list.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(int c) : UniPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  UniPoly(const Rat& c) { if (!c.is_zero()) c_.push_back(c); }  // NOLINT
  explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// The monomial x^k.
  static UniPoly monomial(int k, const Rat& c = Rat(1));

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rat coeff(int i) const { return i >= 0 && i <= degree() ? c_[i] : Rat(0); }
  const Rat& leading() const { return c_.back(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& x) const;
  CplxApprox eval(CplxApprox x) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  UniPoly primitive() const;
  std::string to_string(const std::string& var = "x") const;
  std::vector<double> to_doubles() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rat> c_;
};

inline bool is_zero(const UniPoly& p) { return p.is_zero(); }

UniPoly pow(const UniPoly& p, unsigned e);

/// Quotient and remainder; throws on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g);
/// Exact division; throws if g does not divide f.
UniPoly exact_div(const UniPoly& f, const UniPoly& g);

/// Monic gcd. gcd(f, 0) = monic(f); both zero is an error.
UniPoly gcd(const UniPoly& f, const UniPoly& g);

struct SquarefreeFactor {
  UniPoly factor;  // monic, square-free
  int multiplicity;
};

/// Yun's algorithm. Factors are pairwise coprime; product of factor^m equals
/// f up to the unit lc(f). Ordered by increasing multiplicity.
std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& f);

/// Product of the distinct monic irreducible factors of f.
UniPoly squarefree_part(const UniPoly& f);

/// Sylvester determinant; Res(f, g) = lc(f)^deg g * prod g(roots of f).
Rat resultant(const UniPoly& f, const UniPoly& g);
/// (-1)^(n(n-1)/2) Res(f, f') / lc(f).
Rat discriminant(const UniPoly& f);

/// Sylvester matrix of two polynomials given by coefficient lists (lowest
/// degree first) over any commutative ring.
template <class R>
Matrix<R> sylvester(const std::vector<R>& f, const std::vector<R>& g) {
  const std::size_t m = f.size() - 1;
  const std::size_t n = g.size() - 1;
  Matrix<R> s(m + n, m + n, R(0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s(r, r + k) = f[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s(n + r, r + k) = g[n - k];
  return s;
}

/// Durand-Kerner simultaneous iteration. Starting points are powers of
/// 0.4 + 0.9i scaled by the Cauchy root bound; at most 1000 sweeps. Stops once
/// every |f(z)| / sum|a_k||z|^k falls below tol. Throws kNumericFailure with
/// the best residual otherwise.
std::vector<CplxApprox> complex_roots(const UniPoly& f, double tol = 1e-12);
/// Same iteration for complex coefficients (lowest degree first).
std::vector<CplxApprox> complex_roots(const std::vector<CplxApprox>& coeffs, double tol = 1e-12);

/// A few Newton steps on f starting at z.
CplxApprox newton_polish(const UniPoly& f, CplxApprox z, int steps = 8);

/// The distinct rational roots of f, ascending.
std::vector<Rat> rational_roots(const UniPoly& f);

/// Homogeneous polynomial sum_i c_i t0^(d-i) t1^i of formal degree d.
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(int c) : BinaryForm(Rat(c)) {}                              // NOLINT
  BinaryForm(const Rat& c) : degree_(0), c_{c} {}                        // NOLINT
  BinaryForm(int degree, std::vector<Rat> coeffs);

  /// t0 when which == 0, t1 when which == 1.
  static BinaryForm variable(int which);

  int degree() const { return degree_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const;
  Rat eval(const Rat& t0, const Rat& t1) const;
  /// Substitutes t0 = 1; the result is a polynomial in t1.
  UniPoly dehomogenize() const;
  /// Divides out the rational content so coefficients are coprime integers
  /// with the first nonzero one positive.
  BinaryForm primitive() const;
  std::string to_string() const;

  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a);
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.degree_ == b.degree_ && a.c_ == b.c_;
  }

 private:
  int degree_ = 0;
  std::vector<Rat> c_{Rat(0)};
};

inline bool is_zero(const BinaryForm& f) { return f.is_zero(); }

/// Multiplicity m -> number of distinct roots of exactly that multiplicity.
struct MultiplicityProfile {
  std::map<int, int> counts;

  int total_degree() const;
  int distinct_roots() const;
  std::string to_string() const;
  friend bool operator==(const MultiplicityProfile&, const MultiplicityProfile&) = default;
};

MultiplicityProfile profile_of(const std::vector<SquarefreeFactor>& factors);

/// Roots over the algebraic closure, including (0:1) with multiplicity equal
/// to the degree defect of the dehomogenization.
MultiplicityProfile binary_profile(const BinaryForm& form);

}  // namespace netconics
