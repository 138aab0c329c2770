#pragma once

#include "json.hpp"

#include "core/chow.hpp"
#include "core/hesse.hpp"
#include "core/invariants.hpp"
#include "core/scalars.hpp"
#include "core/stabilizer.hpp"
#include "core/sweep.hpp"
#include "core/ternary.hpp"
#include "core/unipoly.hpp"

namespace netconics {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "netconics/1";

Json to_json(const Rat& x);
Json to_json(const EisRat& x);
Json to_json(const CplxApprox& x);
/// [{"exps": [i, j, k], "coeff": "p/q"}, ...] in decreasing exponent order.
Json to_json(const RatForm& f);
Json to_json(const EisForm& f);
Json to_json(const UniPoly& p);
Json to_json(const BinaryForm& f);
Json to_json(const MultiplicityProfile& p);
Json to_json(const RatMatrix& m);
/// {"finite": "p/q"} | "infinity" | "undefined".
Json to_json(const ExtendedJ& j);
Json to_json(const CubicInvariants& inv);
Json to_json(const ProjectivePoint& p);
Json to_json(const SingularityReport& r);
Json to_json(const SweepReport& r);
Json to_json(const FiberReport& r);
Json to_json(const TangentConeReport& r);
Json to_json(const H0Report& r);
Json to_json(const ClassLedger& l);
Json to_json(const HessianIdentityResult& r);
Json to_json(const FbRoot& r);
Json to_json(const FbAnalysis& a);
Json to_json(const FbCritical& c);
Json to_json(const FiberDecomposition& d);
Json to_json(const ChowClass& c);
Json to_json(const DualDegreeTrace& t);
Json to_json(const PGLElement& e);
Json to_json(const GroupStructureReport& r);
Json to_json(const SurveyRow& r);

ExtendedJ extended_j_from_json(const Json& j);
RatForm form_from_json(const Json& j);

}  // namespace netconics
