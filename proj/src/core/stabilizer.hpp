#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "core/matrix.hpp"
#include "core/scalars.hpp"
#include "core/ternary.hpp"

namespace netconics {

/// Element of PGL(3) over Q(w), scaled so the first nonzero entry in
/// row-major order is 1. Equality is equality of canonical matrices.
class PGLElement {
 public:
  /// Throws kDomain for a singular matrix.
  explicit PGLElement(EisMatrix m);

  static PGLElement identity();

  const EisMatrix& matrix() const { return m_; }
  PGLElement inverse() const;
  std::string to_string() const;

  friend PGLElement operator*(const PGLElement& a, const PGLElement& b) { return PGLElement(a.m_ * b.m_); }
  friend bool operator==(const PGLElement& a, const PGLElement& b) { return a.m_ == b.m_; }

 private:
  EisMatrix m_;
};

/// diag(1, w, w^2).
PGLElement hesse_b();
/// Permutation matrix with (A_g)_{ij} = 1 iff j = g(i); g is 0-based.
PGLElement permutation_element(const std::array<int, 3>& g);

/// The 18 classes B^k A_g, k in {0, 1, 2}, g in S3, ordered by k then by g
/// in lexicographic order.
std::vector<PGLElement> candidate_group();

/// True iff each basis conic of W_lambda, substituted through sigma, stays
/// in W_lambda.
bool stabilizes(const PGLElement& sigma, const EisRat& lambda);

struct GroupStructureReport {
  std::size_t order = 0;
  bool distinct = false;
  bool closed = false;
  std::size_t products_checked = 0;
  bool has_identity = false;
  bool has_inverses = false;
  /// Relation name -> holds, for a = [A_(123)], b = [B], c = [A_(12)].
  std::vector<std::pair<std::string, bool>> relations;
  bool passed = false;
};

/// Throws kVerificationFailed naming the first failing check.
GroupStructureReport verify_group_structure(const std::vector<PGLElement>& elements);

/// For g, h in the cyclic group generated by (123), the quadratic
/// 2 a_{g1 h2} a_{g1 h3} + lambda (a_{g2 h3} a_{g3 h2} + a_{g2 h2} a_{g3 h3})
///   - lambda a_{g1 h1}^2 - lambda^2 a_{g2 h1} a_{g3 h1}
/// in the entries of sigma. It is minus the membership condition for the
/// (h1, h2, h3) coefficients of the image of x_{g1}^2 + lambda x_{g2} x_{g3},
/// so all nine vanish iff sigma stabilizes W_lambda. Ordered g-major.
std::array<EisRat, 9> quadratic_residuals(const PGLElement& sigma, const EisRat& lambda);

struct SurveyRow {
  Rat lambda;
  int candidates_ok = 0;
  int candidates_total = 0;
  int probes_tried = 0;
  int extra_found = 0;
};

/// Checks all candidates and then probes seeded random elements outside the
/// candidate set: half with independent entries in Z[w], half candidates with
/// one entry perturbed. A zero extra_found is evidence, not a proof, that the
/// candidates exhaust the stabilizer.
std::vector<SurveyRow> stabilizer_survey(const std::vector<Rat>& lambdas, int probes, std::uint64_t seed);

/// The probe element used by the survey for a given seed and index.
PGLElement survey_probe(std::uint64_t seed, int index);

}  // namespace netconics
