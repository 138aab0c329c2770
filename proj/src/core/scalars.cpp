#include "core/scalars.hpp"

#include <cmath>

#include "core/error.hpp"

namespace netconics {

Rat Rat::normalize(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::kDomain, "zero denominator");
  return Rat(mpq_class(num, den));
}

Rat Rat::parse(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto to_mpz = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text))
      throw Error(ErrorCode::kInvalidInput, "not a rational number: '" + std::string(text) + "'");
    return Rat(to_mpz(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorCode::kInvalidInput, "not a rational number: '" + std::string(text) + "'");
  const mpz_class d = to_mpz(den);
  if (d == 0) throw Error(ErrorCode::kInvalidInput, "zero denominator in '" + std::string(text) + "'");
  return normalize(to_mpz(num), d);
}

Rat Rat::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDomain, "division by zero");
  return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorCode::kDomain, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rat::to_string() const { return v_.get_str(10); }

Rat pow(const Rat& base, unsigned exponent) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), exponent);
  return Rat::normalize(n, d);
}

EisRat& EisRat::operator*=(const EisRat& o) {
  // (a1 + b1 w)(a2 + b2 w) = a1a2 + (a1b2 + a2b1) w + b1b2 w^2, w^2 = -1 - w
  const Rat bb = b_ * o.b_;
  Rat a = a_ * o.a_ - bb;
  Rat b = a_ * o.b_ + b_ * o.a_ - bb;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

EisRat EisRat::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDomain, "division by zero in Q(w)");
  const Rat n = norm();
  const EisRat c = conjugate();
  return {c.a() / n, c.b() / n};
}

std::string EisRat::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string out;
  if (!a_.is_zero()) out = a_.to_string() + (b_.sign() < 0 ? " - " : " + ");
  else if (b_.sign() < 0) out = "-";
  const Rat mag = b_.abs();
  if (!(mag == Rat(1))) out += mag.to_string() + "*";
  return out + "w";
}

EisRat pow(const EisRat& base, unsigned exponent) {
  EisRat result(1);
  EisRat sq = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= sq;
    sq *= sq;
    exponent >>= 1U;
  }
  return result;
}

CplxApprox to_complex(const EisRat& x) {
  const double half_sqrt3 = std::sqrt(3.0) / 2.0;
  const double a = x.a().to_double();
  const double b = x.b().to_double();
  return {a - 0.5 * b, b * half_sqrt3};
}

}  // namespace netconics
