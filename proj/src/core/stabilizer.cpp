#include "core/stabilizer.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "core/error.hpp"
#include "core/hesse.hpp"

namespace netconics {

PGLElement::PGLElement(EisMatrix m) : m_(std::move(m)) {
  if (m_.rows() != 3 || m_.cols() != 3) throw Error(ErrorCode::kInvalidInput, "PGL(3) elements are 3x3");
  if (det_field(m_).is_zero()) throw Error(ErrorCode::kDomain, "singular matrix is not in PGL(3)");
  EisRat lead;
  for (std::size_t i = 0; i < 3 && lead.is_zero(); ++i)
    for (std::size_t j = 0; j < 3 && lead.is_zero(); ++j) lead = m_(i, j);
  const EisRat inv = lead.inverse();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m_(i, j) = m_(i, j) * inv;
}

PGLElement PGLElement::identity() { return PGLElement(EisMatrix::identity(3)); }

PGLElement PGLElement::inverse() const {
  // Column k of the inverse spans the kernel of [m | -e_k] with last entry 1.
  EisMatrix out(3, 3);
  for (std::size_t k = 0; k < 3; ++k) {
    EisMatrix sys(3, 4);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) sys(i, j) = m_(i, j);
      sys(i, 3) = i == k ? EisRat(-1) : EisRat(0);
    }
    const auto kernel = null_space(sys);
    const auto& v = kernel.at(0);
    for (std::size_t i = 0; i < 3; ++i) out(i, k) = v[i] / v[3];
  }
  return PGLElement(std::move(out));
}

std::string PGLElement::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < 3; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < 3; ++j) os << (j ? ", " : "") << m_(i, j);
  }
  os << "]";
  return os.str();
}

PGLElement hesse_b() {
  EisMatrix m(3, 3);
  m(0, 0) = EisRat(1);
  m(1, 1) = EisRat::omega();
  m(2, 2) = EisRat::omega() * EisRat::omega();
  return PGLElement(std::move(m));
}

PGLElement permutation_element(const std::array<int, 3>& g) {
  EisMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i) m(i, static_cast<std::size_t>(g[i])) = EisRat(1);
  return PGLElement(std::move(m));
}

std::vector<PGLElement> candidate_group() {
  std::array<int, 3> g{0, 1, 2};
  std::vector<std::array<int, 3>> perms;
  do perms.push_back(g);
  while (std::next_permutation(g.begin(), g.end()));
  std::vector<PGLElement> out;
  PGLElement bk = PGLElement::identity();
  for (int k = 0; k < 3; ++k) {
    for (const auto& p : perms) out.push_back(bk * permutation_element(p));
    bk = bk * hesse_b();
  }
  return out;
}

bool stabilizes(const PGLElement& sigma, const EisRat& lambda) {
  const EisNet w = w_lambda(lambda);
  for (const auto& q : w.basis())
    if (!net_contains(q.substitute(sigma.matrix()), w)) return false;
  return true;
}

namespace {

bool contains(const std::vector<PGLElement>& set, const PGLElement& x) {
  return std::find(set.begin(), set.end(), x) != set.end();
}

PGLElement power(const PGLElement& x, int e) {
  PGLElement r = PGLElement::identity();
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

}  // namespace

GroupStructureReport verify_group_structure(const std::vector<PGLElement>& elements) {
  GroupStructureReport r;
  r.order = elements.size();
  r.distinct = true;
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t k = i + 1; k < elements.size(); ++k) r.distinct = r.distinct && !(elements[i] == elements[k]);
  r.closed = true;
  for (const auto& x : elements) {
    for (const auto& y : elements) {
      ++r.products_checked;
      r.closed = r.closed && contains(elements, x * y);
    }
  }
  const PGLElement e = PGLElement::identity();
  r.has_identity = contains(elements, e);
  r.has_inverses = true;
  for (const auto& x : elements) r.has_inverses = r.has_inverses && contains(elements, x.inverse());

  const PGLElement a = permutation_element({1, 2, 0});
  const PGLElement b = hesse_b();
  const PGLElement c = permutation_element({1, 0, 2});
  r.relations = {
      {"a^3 = 1", power(a, 3) == e},
      {"b^3 = 1", power(b, 3) == e},
      {"c^2 = 1", power(c, 2) == e},
      {"ab = ba", a * b == b * a},
      {"cbc = b^-1", c * b * c == b.inverse()},
      {"cac = a^-1", c * a * c == a.inverse()},
  };
  bool relations_ok = true;
  for (const auto& [name, ok] : r.relations) relations_ok = relations_ok && ok;
  r.passed = r.order == 18 && r.distinct && r.closed && r.has_identity && r.has_inverses && relations_ok &&
             contains(elements, a) && contains(elements, b) && contains(elements, c);

  if (r.order != 18) throw Error(ErrorCode::kVerificationFailed, "group order is " + std::to_string(r.order) + ", expected 18");
  if (!r.distinct) throw Error(ErrorCode::kVerificationFailed, "candidate elements are not distinct");
  if (!r.closed) throw Error(ErrorCode::kVerificationFailed, "candidate set is not closed under multiplication");
  if (!r.has_identity) throw Error(ErrorCode::kVerificationFailed, "identity missing");
  if (!r.has_inverses) throw Error(ErrorCode::kVerificationFailed, "inverse missing");
  for (const auto& [name, ok] : r.relations)
    if (!ok) throw Error(ErrorCode::kVerificationFailed, "relation fails: " + name);
  if (!r.passed) throw Error(ErrorCode::kVerificationFailed, "generators a, b, c are not in the candidate set");
  return r;
}

std::array<EisRat, 9> quadratic_residuals(const PGLElement& sigma, const EisRat& lambda) {
  const auto& m = sigma.matrix();
  const auto a = [&](int i, int j) -> const EisRat& { return m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); };
  std::array<EisRat, 9> out;
  std::size_t idx = 0;
  for (int gs = 0; gs < 3; ++gs) {
    const int g1 = gs, g2 = (gs + 1) % 3, g3 = (gs + 2) % 3;
    for (int hs = 0; hs < 3; ++hs) {
      const int h1 = hs, h2 = (hs + 1) % 3, h3 = (hs + 2) % 3;
      out[idx++] = EisRat(2) * a(g1, h2) * a(g1, h3) + lambda * (a(g2, h3) * a(g3, h2) + a(g2, h2) * a(g3, h3)) -
                   lambda * a(g1, h1) * a(g1, h1) - lambda * lambda * a(g2, h1) * a(g3, h1);
    }
  }
  return out;
}

PGLElement survey_probe(std::uint64_t seed, int index) {
  static const std::vector<PGLElement> candidates = candidate_group();
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  auto small = [&rng] { return Rat(static_cast<long>(rng() % 7) - 3); };
  while (true) {
    EisMatrix m(3, 3);
    if (index % 2 == 0) {
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = EisRat(small(), small());
    } else {
      m = candidates[rng() % candidates.size()].matrix();
      const std::size_t i = rng() % 3, j = rng() % 3;
      m(i, j) = m(i, j) + EisRat(small(), small());
    }
    if (det_field(m).is_zero()) continue;
    PGLElement p(std::move(m));
    if (!contains(candidates, p)) return p;
  }
}

std::vector<SurveyRow> stabilizer_survey(const std::vector<Rat>& lambdas, int probes, std::uint64_t seed) {
  const auto candidates = candidate_group();
  std::vector<SurveyRow> rows;
  for (const auto& l : lambdas) {
    if (hesse_param(EisRat(l)).excluded) throw Error(ErrorCode::kDomain, "excluded lambda " + l.to_string());
    SurveyRow row;
    row.lambda = l;
    row.candidates_total = static_cast<int>(candidates.size());
    for (const auto& c : candidates) row.candidates_ok += stabilizes(c, EisRat(l)) ? 1 : 0;
    for (int i = 0; i < probes; ++i) {
      ++row.probes_tried;
      row.extra_found += stabilizes(survey_probe(seed, i), EisRat(l)) ? 1 : 0;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace netconics
