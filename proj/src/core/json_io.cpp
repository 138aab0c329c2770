#include "core/json_io.hpp"

#include "core/error.hpp"

namespace netconics {

namespace {

template <class R>
Json form_json(const TernaryForm<R>& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f.terms()) out.push_back({{"exps", {e[0], e[1], e[2]}}, {"coeff", to_json(c)}});
  return out;
}

Json point_list(const std::vector<ProjectivePoint>& points) {
  Json out = Json::array();
  for (const auto& p : points) out.push_back(to_json(p));
  return out;
}

template <std::size_t N>
Json complex_array(const std::array<CplxApprox, N>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(to_json(z));
  return out;
}

}  // namespace

Json to_json(const Rat& x) { return x.to_string(); }
Json to_json(const EisRat& x) { return {{"a", x.a().to_string()}, {"b", x.b().to_string()}}; }
Json to_json(const CplxApprox& x) { return {x.real(), x.imag()}; }
Json to_json(const RatForm& f) { return form_json(f); }
Json to_json(const EisForm& f) { return form_json(f); }

Json to_json(const UniPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

Json to_json(const BinaryForm& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(c.to_string());
  return out;
}

Json to_json(const MultiplicityProfile& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.counts) out.push_back({m, c});
  return out;
}

Json to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    out.push_back(row);
  }
  return out;
}

Json to_json(const ExtendedJ& j) {
  if (j.is_finite()) return {{"finite", j.value().to_string()}};
  return j.is_infinite() ? "infinity" : "undefined";
}

Json to_json(const CubicInvariants& inv) {
  return {{"S", to_json(inv.s)}, {"T", to_json(inv.t)}, {"discriminant", to_json(inv.delta)}, {"j", to_json(inv.j)}};
}

Json to_json(const ProjectivePoint& p) {
  Json out;
  if (p.exact) out["exact"] = {to_json((*p.exact)[0]), to_json((*p.exact)[1]), to_json((*p.exact)[2])};
  else out["exact"] = nullptr;
  out["approx"] = complex_array(p.approx);
  out["residual"] = p.residual;
  return out;
}

Json to_json(const SingularityReport& r) {
  Json kinds = Json::array();
  for (auto k : r.point_kinds) kinds.push_back(to_string(k));
  return {{"kind", to_string(r.kind)}, {"points", point_list(r.points)}, {"point_kinds", kinds},
          {"one_dimensional", r.one_dimensional}};
}

Json to_json(const SweepReport& r) {
  Json out{{"seed", r.seed},
           {"resamples", r.resamples},
           {"flag", to_json(r.flag)},
           {"disc", to_json(r.disc)},
           {"disc_degree", r.disc.degree()},
           {"profile", to_json(r.profile)},
           {"a_inf", r.a_inf},
           {"double_root_factor", to_json(r.double_root_factor)},
           {"simple_root_factor", to_json(r.simple_root_factor)}};
  Json veronese = Json::array();
  for (const auto& h : r.veronese)
    veronese.push_back({{"source", to_json(h.source)},
                        {"coords", complex_array(h.coords)},
                        {"membership_residual", h.membership_residual},
                        {"conic_rank", h.conic_rank}});
  out["veronese_points"] = veronese;
  Json checks = Json::array();
  for (const auto& nc : r.node_checks)
    checks.push_back({{"t", to_json(nc.t)},
                      {"multiplicity", nc.multiplicity},
                      {"on_veronese", nc.on_veronese},
                      {"matched", nc.matched},
                      {"match_residual", nc.match_residual},
                      {"node", complex_array(nc.node)},
                      {"gradient_residual", nc.gradient_residual},
                      {"conic_rank", nc.conic_rank},
                      {"kind", to_string(nc.kind)}});
  out["node_checks"] = checks;
  out["b1"] = r.b1;
  out["b2"] = r.b2;
  out["l1"] = r.l1;
  out["l2"] = r.l2;
  out["correlated"] = r.correlated;
  return out;
}

Json to_json(const FiberReport& r) {
  return {{"j0", to_json(r.j0)},
          {"form", to_json(r.form)},
          {"degree", r.form.degree()},
          {"profile", to_json(r.profile)},
          {"distinct_roots", r.distinct_roots},
          {"min_separation", r.min_separation}};
}

Json to_json(const TangentConeReport& r) {
  Json recs = Json::array();
  for (const auto& rec : r.records)
    recs.push_back({{"point", complex_array(rec.point)},
                    {"singular_values", {rec.singular_values[0], rec.singular_values[1], rec.singular_values[2]}},
                    {"rank", rec.rank}});
  return {{"records", recs}, {"ok", r.ok}};
}

Json to_json(const H0Report& r) {
  Json basis = Json::array();
  for (const auto& q : r.basis) basis.push_back(to_string(q));
  return {{"basis", basis},
          {"discriminant_cubic", to_string(r.cubic, "abc")},
          {"expected", to_string(r.expected, "abc")},
          {"singularities", to_json(r.singularities)},
          {"j", to_json(r.j)},
          {"node_conic", to_string(r.node_conic)},
          {"node_conic_rank", r.node_conic_rank},
          {"pass", r.passed}};
}

Json to_json(const ClassLedger& l) {
  return {{"b1", l.b1}, {"b2", l.b2}, {"l1", l.l1},         {"l2", l.l2},
          {"F", l.f_class}, {"fiber_degree", l.fiber_degree}, {"O", l.o_class}, {"seeds", l.seeds}};
}

Json to_json(const HessianIdentityResult& r) {
  return {{"lambda", to_json(r.lambda)}, {"j_phi", to_json(r.j_phi)}, {"j_formula", to_json(r.j_formula)},
          {"j_gamma", to_json(r.j_gamma)}, {"rhs", to_json(r.rhs)},   {"equal", r.equal}};
}

Json to_json(const FbRoot& r) {
  Json out;
  if (r.exact) out["exact"] = to_json(*r.exact);
  else out["exact"] = nullptr;
  out["approx"] = to_json(r.approx);
  out["multiplicity"] = r.multiplicity;
  return out;
}

Json to_json(const FbAnalysis& a) {
  Json roots = Json::array();
  for (const auto& r : a.roots) roots.push_back(to_json(r));
  return {{"b", to_json(a.b)}, {"poly", a.poly.to_string("j")}, {"profile", to_json(a.profile)}, {"roots", roots}};
}

Json to_json(const FbCritical& c) {
  Json vals = Json::array();
  for (const auto& v : c.values) vals.push_back(to_json(v));
  return {{"discriminant", c.discriminant.to_string("b")}, {"critical_b", vals}};
}

Json to_json(const FiberDecomposition& d) {
  Json terms = Json::array();
  for (const auto& t : d.terms) terms.push_back(to_json(t));
  return {{"b", to_json(d.b)}, {"terms", terms}, {"multiplicity_sum", d.multiplicity_sum}};
}

Json to_json(const ChowClass& c) {
  return {{"n", c.n()}, {"grade", c.grade()}, {"class", c.to_string()}, {"lambda_e", c.to_lambda_e_string()}};
}

Json to_json(const DualDegreeTrace& t) {
  return {{"strict_transform", to_json(t.strict_transform)},
          {"polar", to_json(t.polar)},
          {"polar_squared", to_json(t.polar_squared)},
          {"product", to_json(t.product)},
          {"degree", t.degree.get_str()}};
}

Json to_json(const PGLElement& e) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < 3; ++j) row.push_back(to_json(e.matrix()(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const GroupStructureReport& r) {
  Json rel = Json::object();
  for (const auto& [name, ok] : r.relations) rel[name] = ok;
  return {{"order", r.order},         {"distinct", r.distinct},         {"closed", r.closed},
          {"products_checked", r.products_checked}, {"has_identity", r.has_identity}, {"has_inverses", r.has_inverses},
          {"relations", rel},         {"pass", r.passed}};
}

Json to_json(const SurveyRow& r) {
  return {{"lambda", to_json(r.lambda)},
          {"candidates_ok", r.candidates_ok},
          {"candidates_total", r.candidates_total},
          {"probes_tried", r.probes_tried},
          {"extra_found", r.extra_found}};
}

ExtendedJ extended_j_from_json(const Json& j) {
  if (j.is_string()) {
    if (j == "infinity") return ExtendedJ::infinite();
    if (j == "undefined") return ExtendedJ::undefined();
  } else if (j.is_object() && j.contains("finite") && j["finite"].is_string()) {
    return ExtendedJ::finite(Rat::parse(j["finite"].get<std::string>()));
  }
  throw Error(ErrorCode::kInvalidInput, "malformed j value");
}

RatForm form_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kInvalidInput, "a form is an array of terms");
  RatForm f;
  bool first = true;
  for (const auto& term : j) {
    if (!term.contains("exps") || !term.contains("coeff")) throw Error(ErrorCode::kInvalidInput, "malformed form term");
    const auto e = term["exps"].get<std::array<int, 3>>();
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw Error(ErrorCode::kInvalidInput, "negative exponent");
    const RatForm m = RatForm::monomial(e, Rat::parse(term["coeff"].get<std::string>()));
    f = first ? m : f + m;
    first = false;
  }
  return f;
}

}  // namespace netconics
