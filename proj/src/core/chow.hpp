#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace netconics {

/// Homogeneous class of grade k in the Chow ring of P^3 blown up at n
/// points, on the basis Lambda_k, Gamma_{k,1..n}. With lambda = Lambda_1 and
/// e_i = Gamma_{1,i}: Lambda_k Lambda_l = Lambda_{k+l}, Lambda_k Gamma_{l,i} = 0
/// and Gamma_{k,i} Gamma_{l,i} = -Gamma_{k+l,i} for k, l >= 1, so
/// e_i^2 = -Gamma_{2,i} and e_i^3 = Gamma_{3,i}. Grade 0 is Z, with no Gamma part.
class ChowClass {
 public:
  /// Throws kInvalidInput unless 0 <= grade <= 3 and gamma has n entries
  /// (all zero in grade 0).
  ChowClass(int n, int grade, mpz_class lambda, std::vector<mpz_class> gamma);

  static ChowClass zero(int n, int grade);
  static ChowClass one(int n);
  static ChowClass lambda(int n);
  /// e_i for 1 <= i <= n.
  static ChowClass exceptional(int n, int i);

  int n() const { return n_; }
  int grade() const { return grade_; }
  const mpz_class& lambda_coeff() const { return lambda_; }
  const std::vector<mpz_class>& gamma_coeffs() const { return gamma_; }

  /// "a Λ_k + c_1 Γ_{k,1} + ...".
  std::string to_string() const;
  /// The same class written in lambda and the e_i, e.g. "3λ - 2e1 - 2e2".
  std::string to_lambda_e_string() const;

  friend ChowClass operator+(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator-(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator*(const mpz_class& k, const ChowClass& a);
  friend bool operator==(const ChowClass& a, const ChowClass& b);

 private:
  int n_;
  int grade_;
  mpz_class lambda_;
  std::vector<mpz_class> gamma_;
};

/// Throws kInvalidInput for mismatched n or grade overflow.
ChowClass multiply(const ChowClass& x, const ChowClass& y);

/// deg Lambda_3 = deg Gamma_{3,i} = 1. Throws kInvalidInput unless grade 3.
mpz_class degree(const ChowClass& x);

/// d lambda - sum m_i e_i.
ChowClass strict_transform_class(int d, const std::vector<int>& mults);

/// (d - 1) lambda - sum e_i: pullback of the hyperplane class under the
/// polar map given by the partials.
ChowClass polar_map_class(int d, int n);

/// Degree of the dual of a degree-d surface with n ordinary double points,
/// from the class product (d lambda - 2 sum e_i)((d - 1) lambda - sum e_i)^2.
mpz_class dual_degree(int d, int n);

struct DualDegreeTrace {
  ChowClass strict_transform;
  ChowClass polar;
  ChowClass polar_squared;
  ChowClass product;
  mpz_class degree;
};

DualDegreeTrace dual_degree_trace(int d, int n);

}  // namespace netconics
