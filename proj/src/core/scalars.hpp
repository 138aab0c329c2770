#pragma once

#include <gmpxx.h>

#include <complex>
#include <ostream>
#include <string>
#include <string_view>

namespace netconics {

/// Exact rational number backed by GMP. Always stored in lowest terms with a
/// positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Rat(const mpz_class& integer) : v_(integer) {}
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Throws Error(kDomain, "zero denominator") when den == 0.
  static Rat normalize(const mpz_class& num, const mpz_class& den);
  /// Accepts "p", "-p", "p/q". Throws Error(kInvalidInput) otherwise.
  static Rat parse(std::string_view text);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rat inverse() const;
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  double to_double() const { return v_.get_d(); }
  std::string to_string() const;

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
  }

 private:
  mpq_class v_{0};
};

Rat pow(const Rat& base, unsigned exponent);

using CplxApprox = std::complex<double>;

/// Element a + b*w of Q(w), w a primitive cube root of unity (w^2 = -1 - w).
class EisRat {
 public:
  EisRat() = default;
  EisRat(int a) : a_(a) {}         // NOLINT(google-explicit-constructor)
  EisRat(const Rat& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  EisRat(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

  static EisRat omega() { return {Rat(0), Rat(1)}; }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_real() const { return b_.is_zero(); }
  /// a + b*w^2 = (a - b) - b*w
  EisRat conjugate() const { return {a_ - b_, -b_}; }
  /// a^2 - ab + b^2, positive for nonzero values.
  Rat norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }
  EisRat inverse() const;
  std::string to_string() const;

  EisRat& operator+=(const EisRat& o) { a_ += o.a_; b_ += o.b_; return *this; }
  EisRat& operator-=(const EisRat& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  EisRat& operator*=(const EisRat& o);
  EisRat& operator/=(const EisRat& o) { return *this *= o.inverse(); }

  friend EisRat operator+(EisRat x, const EisRat& y) { return x += y; }
  friend EisRat operator-(EisRat x, const EisRat& y) { return x -= y; }
  friend EisRat operator*(EisRat x, const EisRat& y) { return x *= y; }
  friend EisRat operator/(EisRat x, const EisRat& y) { return x /= y; }
  friend EisRat operator-(const EisRat& x) { return {-x.a_, -x.b_}; }
  friend bool operator==(const EisRat& x, const EisRat& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::ostream& operator<<(std::ostream& os, const EisRat& x) {
    return os << x.to_string();
  }

 private:
  Rat a_;
  Rat b_;
};

EisRat pow(const EisRat& base, unsigned exponent);

/// Evaluates with w = (-1 + i*sqrt(3))/2. The only bridge from the exact layer
/// to the numeric one.
CplxApprox to_complex(const EisRat& x);
inline CplxApprox to_complex(const Rat& x) { return {x.to_double(), 0.0}; }

inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline bool is_zero(const EisRat& x) { return x.is_zero(); }
inline bool is_zero(const CplxApprox& x) { return x == CplxApprox{}; }

}  // namespace netconics
