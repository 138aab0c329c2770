#include "core/chow.hpp"

#include <sstream>

#include "core/error.hpp"

namespace netconics {

namespace {

void require_same_shape(const ChowClass& a, const ChowClass& b) {
  if (a.n() != b.n() || a.grade() != b.grade()) throw Error(ErrorCode::kInvalidInput, "Chow classes of different shape");
}

// Appends " + c·term" or " - |c|·term", omitting unit coefficients.
void append_term(std::ostringstream& os, bool& first, const mpz_class& c, const std::string& term) {
  if (c == 0) return;
  const mpz_class mag = abs(c);
  if (first) os << (c < 0 ? "-" : "");
  else os << (c < 0 ? " - " : " + ");
  first = false;
  if (term.empty()) os << mag;
  else if (mag != 1) os << mag << term;
  else os << term;
}

}  // namespace

ChowClass::ChowClass(int n, int grade, mpz_class lambda, std::vector<mpz_class> gamma)
    : n_(n), grade_(grade), lambda_(std::move(lambda)), gamma_(std::move(gamma)) {
  if (n < 0) throw Error(ErrorCode::kInvalidInput, "number of points must be non-negative");
  if (grade < 0 || grade > 3) throw Error(ErrorCode::kInvalidInput, "Chow grade must lie in 0..3");
  if (gamma_.size() != static_cast<std::size_t>(n)) throw Error(ErrorCode::kInvalidInput, "need one Gamma coefficient per point");
  if (grade == 0)
    for (const auto& g : gamma_)
      if (g != 0) throw Error(ErrorCode::kInvalidInput, "grade-0 classes have no Gamma part");
}

ChowClass ChowClass::zero(int n, int grade) {
  return ChowClass(n, grade, 0, std::vector<mpz_class>(static_cast<std::size_t>(n), 0));
}

ChowClass ChowClass::one(int n) { return ChowClass(n, 0, 1, std::vector<mpz_class>(static_cast<std::size_t>(n), 0)); }

ChowClass ChowClass::lambda(int n) { return ChowClass(n, 1, 1, std::vector<mpz_class>(static_cast<std::size_t>(n), 0)); }

ChowClass ChowClass::exceptional(int n, int i) {
  if (i < 1 || i > n) throw Error(ErrorCode::kInvalidInput, "exceptional divisor index out of range");
  ChowClass e = zero(n, 1);
  e.gamma_[static_cast<std::size_t>(i - 1)] = 1;
  return e;
}

std::string ChowClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  append_term(os, first, lambda_, grade_ == 0 ? "" : "Λ_" + std::to_string(grade_));
  for (int i = 0; i < n_; ++i)
    append_term(os, first, gamma_[static_cast<std::size_t>(i)],
                "Γ_{" + std::to_string(grade_) + "," + std::to_string(i + 1) + "}");
  if (first) os << "0";
  return os.str();
}

std::string ChowClass::to_lambda_e_string() const {
  std::ostringstream os;
  bool first = true;
  const std::string power = grade_ > 1 ? "^" + std::to_string(grade_) : "";
  append_term(os, first, lambda_, grade_ == 0 ? "" : "λ" + power);
  // Gamma_{2,i} = -e_i^2; Gamma_{1,i} = e_i and Gamma_{3,i} = e_i^3.
  for (int i = 0; i < n_; ++i) {
    const mpz_class c = grade_ == 2 ? mpz_class(-gamma_[static_cast<std::size_t>(i)]) : gamma_[static_cast<std::size_t>(i)];
    append_term(os, first, c, "e" + std::to_string(i + 1) + power);
  }
  if (first) os << "0";
  return os.str();
}

ChowClass operator+(const ChowClass& a, const ChowClass& b) {
  require_same_shape(a, b);
  ChowClass s = a;
  s.lambda_ += b.lambda_;
  for (std::size_t i = 0; i < s.gamma_.size(); ++i) s.gamma_[i] += b.gamma_[i];
  return s;
}

ChowClass operator-(const ChowClass& a, const ChowClass& b) { return a + mpz_class(-1) * b; }

ChowClass operator*(const mpz_class& k, const ChowClass& a) {
  ChowClass s = a;
  s.lambda_ *= k;
  for (auto& g : s.gamma_) g *= k;
  return s;
}

bool operator==(const ChowClass& a, const ChowClass& b) {
  return a.n_ == b.n_ && a.grade_ == b.grade_ && a.lambda_ == b.lambda_ && a.gamma_ == b.gamma_;
}

ChowClass multiply(const ChowClass& x, const ChowClass& y) {
  if (x.n() != y.n()) throw Error(ErrorCode::kInvalidInput, "Chow classes on different blow-ups");
  const int grade = x.grade() + y.grade();
  if (grade > 3) throw Error(ErrorCode::kInvalidInput, "Chow grade overflow: " + std::to_string(grade) + " > 3");
  if (x.grade() == 0) return x.lambda_coeff() * y;
  if (y.grade() == 0) return y.lambda_coeff() * x;
  std::vector<mpz_class> gamma(static_cast<std::size_t>(x.n()));
  for (std::size_t i = 0; i < gamma.size(); ++i) gamma[i] = -x.gamma_coeffs()[i] * y.gamma_coeffs()[i];
  return ChowClass(x.n(), grade, x.lambda_coeff() * y.lambda_coeff(), std::move(gamma));
}

mpz_class degree(const ChowClass& x) {
  if (x.grade() != 3) throw Error(ErrorCode::kInvalidInput, "degree needs a grade-3 class");
  mpz_class d = x.lambda_coeff();
  for (const auto& g : x.gamma_coeffs()) d += g;
  return d;
}

ChowClass strict_transform_class(int d, const std::vector<int>& mults) {
  if (d < 1) throw Error(ErrorCode::kInvalidInput, "surface degree must be positive");
  std::vector<mpz_class> gamma;
  for (int m : mults) gamma.emplace_back(-m);
  return ChowClass(static_cast<int>(mults.size()), 1, d, std::move(gamma));
}

ChowClass polar_map_class(int d, int n) {
  if (d < 2) throw Error(ErrorCode::kInvalidInput, "polar map needs degree at least 2");
  return ChowClass(n, 1, d - 1, std::vector<mpz_class>(static_cast<std::size_t>(n), -1));
}

DualDegreeTrace dual_degree_trace(int d, int n) {
  if (d < 2) throw Error(ErrorCode::kInvalidInput, "dual degree needs degree at least 2");
  ChowClass x = strict_transform_class(d, std::vector<int>(static_cast<std::size_t>(n), 2));
  ChowClass p = polar_map_class(d, n);
  ChowClass p2 = multiply(p, p);
  ChowClass prod = multiply(x, p2);
  mpz_class deg = degree(prod);
  return {std::move(x), std::move(p), std::move(p2), std::move(prod), std::move(deg)};
}

mpz_class dual_degree(int d, int n) { return dual_degree_trace(d, n).degree; }

}  // namespace netconics
