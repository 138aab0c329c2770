#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "core/error.hpp"
#include "core/matrix.hpp"
#include "core/scalars.hpp"

namespace netconics {

using Exponent = std::array<int, 3>;

namespace detail {
template <class R>
bool coeff_is_zero(const R& c) { return is_zero(c); }
}  // namespace detail

/// Homogeneous polynomial of a fixed degree in three variables over a
/// commutative ring R. Sparse: zero coefficients are never stored.
template <class R>
class TernaryForm {
 public:
  using Terms = std::map<Exponent, R, std::greater<>>;

  TernaryForm() = default;
  /// Constant form of degree 0.
  TernaryForm(const R& c) { if (!detail::coeff_is_zero(c)) terms_.emplace(Exponent{0, 0, 0}, c); }  // NOLINT
  TernaryForm(int c) : TernaryForm(R(c)) {}  // NOLINT
  explicit TernaryForm(int degree, Terms terms) : degree_(degree), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      const auto& e = it->first;
      if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != degree_)
        throw Error(ErrorCode::kInvalidInput, "exponent does not match form degree");
      it = detail::coeff_is_zero(it->second) ? terms_.erase(it) : std::next(it);
    }
  }

  static TernaryForm zero(int degree) { return TernaryForm(degree, {}); }
  static TernaryForm monomial(const Exponent& e, const R& c) {
    return TernaryForm(e[0] + e[1] + e[2], Terms{{e, c}});
  }
  /// x, y, z for which = 0, 1, 2.
  static TernaryForm variable(int which) {
    Exponent e{0, 0, 0};
    e.at(static_cast<std::size_t>(which)) = 1;
    return monomial(e, R(1));
  }

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  R coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? R(0) : it->second;
  }

  friend TernaryForm operator+(const TernaryForm& a, const TernaryForm& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree_ != b.degree_) throw Error(ErrorCode::kInvalidInput, "adding forms of different degree");
    TernaryForm s = a;
    for (const auto& [e, c] : b.terms_) s.accumulate(e, c);
    return s;
  }
  friend TernaryForm operator-(const TernaryForm& a) {
    TernaryForm n = a;
    for (auto& [e, c] : n.terms_) c = -c;
    return n;
  }
  friend TernaryForm operator-(const TernaryForm& a, const TernaryForm& b) { return a + (-b); }
  friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
    TernaryForm p = zero(a.degree_ + b.degree_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        p.accumulate({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return p;
  }
  friend TernaryForm operator*(const R& k, const TernaryForm& a) {
    TernaryForm p = zero(a.degree_);
    for (const auto& [e, c] : a.terms_) p.accumulate(e, k * c);
    return p;
  }
  friend bool operator==(const TernaryForm& a, const TernaryForm& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// Partial derivative in variable 0, 1 or 2. Degree-0 input gives zero.
  TernaryForm partial(int var) const {
    if (var < 0 || var > 2) throw Error(ErrorCode::kInvalidInput, "variable index must be 0, 1 or 2");
    if (degree_ == 0) return zero(0);
    TernaryForm d = zero(degree_ - 1);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponent f = e;
      f[var] -= 1;
      d.accumulate(f, R(e[var]) * c);
    }
    return d;
  }

  /// F(g v): variable i becomes sum_j g(i, j) x_j. This is a right action:
  /// substitute(F, g * h) == substitute(substitute(F, g), h).
  TernaryForm substitute(const Matrix<R>& g) const {
    if (g.rows() != 3 || g.cols() != 3) throw Error(ErrorCode::kInvalidInput, "substitution needs a 3x3 matrix");
    std::array<std::vector<TernaryForm>, 3> powers;
    for (int i = 0; i < 3; ++i) {
      TernaryForm lin = zero(1);
      for (int j = 0; j < 3; ++j) lin = lin + g(i, j) * variable(j);
      powers[i].push_back(TernaryForm(R(1)));
      for (int k = 1; k <= degree_; ++k) powers[i].push_back(powers[i].back() * lin);
    }
    TernaryForm out = zero(degree_);
    for (const auto& [e, c] : terms_)
      out = out + c * (powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]]);
    if (out.is_zero()) return zero(degree_);
    return out;
  }

  template <class V>
  V eval(const std::array<V, 3>& p) const {
    V acc(0);
    for (const auto& [e, c] : terms_) {
      V term = to_value<V>(c);
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < e[i]; ++k) term = term * p[i];
      acc = acc + term;
    }
    return acc;
  }

  template <class S, class Fn>
  TernaryForm<S> map_coeffs(Fn&& fn) const {
    typename TernaryForm<S>::Terms t;
    for (const auto& [e, c] : terms_) t.emplace(e, fn(c));
    return TernaryForm<S>(degree_, std::move(t));
  }

 private:
  template <class V>
  static V to_value(const R& c) {
    if constexpr (std::is_same_v<V, R>) return c;
    else return to_complex(c);
  }

  void accumulate(const Exponent& e, const R& c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) it->second = it->second + c;
    if (detail::coeff_is_zero(it->second)) terms_.erase(it);
  }

  int degree_ = 0;
  Terms terms_;
};

template <class R>
bool is_zero(const TernaryForm<R>& f) { return f.is_zero(); }

using RatForm = TernaryForm<Rat>;
using EisForm = TernaryForm<EisRat>;
using CplxForm = TernaryForm<CplxApprox>;

/// Canonical conic basis order: x^2, y^2, z^2, xy, xz, yz.
inline constexpr std::array<Exponent, 6> kConicBasis = {
    Exponent{2, 0, 0}, Exponent{0, 2, 0}, Exponent{0, 0, 2},
    Exponent{1, 1, 0}, Exponent{1, 0, 1}, Exponent{0, 1, 1}};

template <class R>
TernaryForm<R> conic_from_vector(const std::array<R, 6>& v) {
  typename TernaryForm<R>::Terms t;
  for (std::size_t i = 0; i < 6; ++i) t.emplace(kConicBasis[i], v[i]);
  return TernaryForm<R>(2, std::move(t));
}

template <class R>
std::array<R, 6> conic_vector(const TernaryForm<R>& q) {
  if (q.degree() != 2 && !q.is_zero()) throw Error(ErrorCode::kInvalidInput, "not a conic");
  std::array<R, 6> v;
  for (std::size_t i = 0; i < 6; ++i) v[i] = q.coeff(kConicBasis[i]);
  return v;
}

/// Symmetric matrix M with v^T M v = q(v); off-diagonal entries are halves.
template <class R>
Matrix<R> conic_matrix_from_vector(const std::array<R, 6>& v) {
  const R half = R(1) / R(2);
  Matrix<R> m(3, 3);
  m(0, 0) = v[0];
  m(1, 1) = v[1];
  m(2, 2) = v[2];
  m(0, 1) = m(1, 0) = half * v[3];
  m(0, 2) = m(2, 0) = half * v[4];
  m(1, 2) = m(2, 1) = half * v[5];
  return m;
}

template <class R>
Matrix<R> conic_matrix(const TernaryForm<R>& q) {
  return conic_matrix_from_vector(conic_vector(q));
}

/// Inverse of conic_matrix; throws on non-symmetric input.
template <class R>
TernaryForm<R> matrix_conic(const Matrix<R>& m) {
  if (m.rows() != 3 || m.cols() != 3) throw Error(ErrorCode::kInvalidInput, "conic matrix must be 3x3");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!(m(i, j) == m(j, i))) throw Error(ErrorCode::kInvalidInput, "conic matrix is not symmetric");
  const R two(2);
  return conic_from_vector<R>({m(0, 0), m(1, 1), m(2, 2), two * m(0, 1), two * m(0, 2), two * m(1, 2)});
}

/// A net of conics: three conics spanning a 3-dimensional subspace of V2.
template <class F>
class BasicNet {
 public:
  explicit BasicNet(std::array<TernaryForm<F>, 3> basis, const char* what = "degenerate net")
      : basis_(std::move(basis)), coeffs_(3, 6) {
    for (std::size_t r = 0; r < 3; ++r) {
      const auto v = conic_vector(basis_[r]);
      for (std::size_t c = 0; c < 6; ++c) coeffs_(r, c) = v[c];
    }
    if (rank(coeffs_) != 3) throw Error(ErrorCode::kDomain, what);
  }

  const std::array<TernaryForm<F>, 3>& basis() const { return basis_; }
  const Matrix<F>& coefficient_matrix() const { return coeffs_; }

 private:
  std::array<TernaryForm<F>, 3> basis_;
  Matrix<F> coeffs_;
};

using Net = BasicNet<Rat>;
using EisNet = BasicNet<EisRat>;

/// Span of the three partials of a cubic. Throws "degenerate Jacobian net"
/// when they are dependent.
template <class F>
BasicNet<F> jacobian_net(const TernaryForm<F>& phi) {
  if (phi.degree() != 3) throw Error(ErrorCode::kInvalidInput, "Jacobian net needs a cubic");
  return BasicNet<F>({phi.partial(0), phi.partial(1), phi.partial(2)}, "degenerate Jacobian net");
}

/// det(a M1 + b M2 + c M3) as a cubic in the plane coordinates (a, b, c).
template <class F>
TernaryForm<F> net_discriminant_cubic(const BasicNet<F>& w) {
  Matrix<TernaryForm<F>> pencil(3, 3, TernaryForm<F>::zero(1));
  for (int k = 0; k < 3; ++k) {
    const Matrix<F> m = conic_matrix(w.basis()[k]);
    const auto var = TernaryForm<F>::variable(k);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) pencil(i, j) = pencil(i, j) + m(i, j) * var;
  }
  TernaryForm<F> d = det_cofactor(pencil);
  return d.is_zero() ? TernaryForm<F>::zero(3) : d;
}

/// True iff q lies in the span of the net (rank of the stacked 4x6 matrix is 3).
template <class F>
bool net_contains(const TernaryForm<F>& q, const BasicNet<F>& w) {
  if (q.is_zero()) return true;
  Matrix<F> m(4, 6);
  const auto v = conic_vector(q);
  for (std::size_t c = 0; c < 6; ++c) {
    for (std::size_t r = 0; r < 3; ++r) m(r, c) = w.coefficient_matrix()(r, c);
    m(3, c) = v[c];
  }
  return rank(m) == 3;
}

/// Determinant of the matrix of second partials.
template <class R>
TernaryForm<R> hessian_form(const TernaryForm<R>& f) {
  Matrix<TernaryForm<R>> h(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h(i, j) = f.partial(i).partial(j);
  TernaryForm<R> d = det_cofactor(h);
  const int deg = f.degree() >= 2 ? 3 * (f.degree() - 2) : 0;
  return d.is_zero() ? TernaryForm<R>::zero(deg) : d;
}

/// Parses sums of terms such as "x^2 + 2/3*y*z - 5*x*y". Variables are x, y, z
/// or a, b, c (not mixed). The result must be homogeneous.
RatForm parse_form(std::string_view text);

/// Human-readable form; vars is "xyz" or "abc".
std::string to_string(const RatForm& f, std::string_view vars = "xyz");
std::string to_string(const EisForm& f, std::string_view vars = "xyz");

EisForm to_eis(const RatForm& f);

}  // namespace netconics
