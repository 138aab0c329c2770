// One PASS/FAIL line per acceptance criterion. Seeds, sample counts,
// tolerances and runtime limits are pinned here; exit status is 0 only if
// every criterion passes.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "core/chow.hpp"
#include "core/hesse.hpp"
#include "core/stabilizer.hpp"
#include "core/sweep.hpp"
#include "core/verify.hpp"
#include "testkit.hpp"

using namespace netconics;

namespace {

constexpr std::uint64_t kSeed = 1;
constexpr double kNumericTol = 1e-8;
constexpr double kSeparationTol = 1e-8;
constexpr double kBatteryLimitMs = 120000.0;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int failures = 0;

// limit_ms applies to the whole criterion unless the body reports its own
// timing through worst_ms (per-flag limits).
void criterion(int id, const char* title, double limit_ms, const std::function<Outcome(double& worst_ms)>& body) {
  Outcome out;
  double worst_ms = -1.0;
  const auto t0 = Clock::now();
  try {
    out = body(worst_ms);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double elapsed = ms_since(t0);
  const double timed = worst_ms >= 0.0 ? worst_ms : elapsed;
  const bool in_time = timed < limit_ms;
  const bool pass = out.ok && in_time;
  failures += pass ? 0 : 1;
  std::printf("criterion %d %s  %s  [%.0f ms%s, limit %.0f ms]%s%s\n", id, pass ? "PASS" : "FAIL", title, elapsed,
              worst_ms >= 0.0 ? (", worst item " + std::to_string(static_cast<long>(worst_ms)) + " ms").c_str() : "",
              limit_ms, out.detail.empty() ? "" : "  ", out.detail.c_str());
  if (!in_time) std::printf("    runtime limit exceeded\n");
  std::fflush(stdout);
}

std::vector<Flag> flags;
std::vector<SweepReport> reports;

}  // namespace

int main() {
  const auto battery_start = Clock::now();

  criterion(1, "Hessian j identity, 20 seeded admissible lambda, exact", 5000.0, [](double&) {
    Outcome o;
    const auto lambdas = random_admissible_lambdas(20, kSeed);
    o.require(lambdas.size() == 20, "wrong sample count");
    for (const Rat& l : lambdas) {
      const HessianIdentityResult r = hessian_identity_check(l);
      o.require(r.equal, "identity fails at lambda = " + l.to_string());
      // Independent route: the discriminant cubic is a Hesse cubic with nu = -(l^3 + 4) / (3 l^2).
      const Rat nu = -(pow(l, 3) + Rat(4)) / (Rat(3) * l * l);
      o.require(r.j_gamma.is_finite() && r.j_gamma.value() == testkit::hesse_j_closed(nu),
                "closed-form oracle disagrees at lambda = " + l.to_string());
      const Rat j = hesse_j(l);
      o.require(r.rhs == pow(Rat(6912) - j, 3) / (Rat(27) * j * j), "rhs mismatch at lambda = " + l.to_string());
    }
    o.detail = o.ok ? "20/20 exact" : o.detail;
    return o;
  });

  criterion(2, "nodal net H0: cubic, node [1:0:0], j infinite, node conic rank 2", 1000.0, [](double&) {
    Outcome o;
    const H0Report r = verify_h0();
    o.require(r.cubic == Rat::normalize(1, 4) * parse_form("-b^3 - c^3 + a*b*c"), "discriminant cubic");
    o.require(r.singularities.points.size() == 1 && r.singularities.points[0].is_exact() &&
                  *r.singularities.points[0].exact == std::array<Rat, 3>{1, 0, 0},
              "singular point");
    o.require(r.singularities.kind == SingularKind::kNode, "kind");
    o.require(r.j.is_infinite(), "j");
    o.require(r.node_conic == parse_form("x*y") && r.node_conic_rank == 2, "node conic");
    o.require(r.passed, "report verdict");
    return o;
  });

  criterion(3, "sweep over 5 seeded flags: degree 12, profile [(1,4),(2,4)], a_inf = 8", 10000.0, [](double& worst) {
    Outcome o;
    worst = 0.0;
    for (std::uint64_t seed = kSeed; seed < kSeed + 5; ++seed) {
      const auto t0 = Clock::now();
      flags.push_back(sample_flag(seed));
      reports.push_back(discriminant_sweep(flags.back()));
      worst = std::max(worst, ms_since(t0));
      const SweepReport& r = reports.back();
      const std::string tag = " (seed " + std::to_string(seed) + ")";
      o.require(r.disc.degree() == 12, "degree" + tag);
      o.require(r.profile == generic_sweep_profile(), "profile " + r.profile.to_string() + tag);
      o.require(r.a_inf == 8, "a_inf" + tag);
    }
    return o;
  });

  criterion(4, "node/Veronese correlation: b1 = b2 = 4, l1 = 2, l2 = 1, F = 12, O = 4", 10000.0, [](double& worst) {
    Outcome o;
    worst = 0.0;
    o.require(reports.size() == 5, "criterion 3 did not produce 5 sweeps");
    double max_residual = 0.0;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto t0 = Clock::now();
      node_veronese_correlation(flags[i], reports[i]);
      worst = std::max(worst, ms_since(t0));
      const SweepReport& r = reports[i];
      o.require(r.correlated && r.b1 == 4 && r.b2 == 4, "b1/b2 at flag " + std::to_string(i));
      for (const auto& nc : r.node_checks) {
        max_residual = std::max(max_residual, nc.gradient_residual);
        if (nc.on_veronese) max_residual = std::max(max_residual, nc.match_residual);
      }
      for (const auto& h : r.veronese) max_residual = std::max(max_residual, h.membership_residual);
    }
    o.require(max_residual < kNumericTol, "residual " + std::to_string(max_residual));
    const ClassLedger l = class_ledger(reports, 3);
    o.require(l.b1 == 4 && l.b2 == 4 && l.l1 == 2 && l.l2 == 1, "ledger multiplicities");
    o.require(l.f_class == 12 && l.o_class == 4, "ledger classes");
    if (o.ok) {
      std::ostringstream s;
      s << "max residual " << max_residual << "; [F] = " << l.f_class << ", [O] = " << l.o_class;
      o.detail = s.str();
    }
    return o;
  });

  criterion(5, "finite fibers: 3 random j0 per flag, 12 distinct roots", 10000.0, [](double& worst) {
    Outcome o;
    worst = 0.0;
    double min_sep = 1.0;
    for (std::size_t i = 0; i < flags.size(); ++i) {
      const auto t0 = Clock::now();
      for (const Rat& j0 : random_rationals(3, kSeed + 100 + i, 100000, 97)) {
        const FiberReport r = fiber_sweep(flags[i], j0);
        o.require(r.form.degree() == 12 && r.profile.total_degree() == 12, "total multiplicity at j0 = " + j0.to_string());
        o.require(r.distinct_roots == 12, "distinct roots at j0 = " + j0.to_string());
        min_sep = std::min(min_sep, r.min_separation);
      }
      worst = std::max(worst, ms_since(t0));
    }
    o.require(flags.size() == 5, "criterion 3 did not produce 5 flags");
    o.require(min_sep > kSeparationTol, "separation " + std::to_string(min_sep));
    if (o.ok) o.detail = "min relative separation " + std::to_string(min_sep);
    return o;
  });

  criterion(6, "dual degree 4 with verbatim intermediate classes", 1000.0, [](double&) {
    Outcome o;
    o.require(dual_degree(3, 4) == 4, "dual_degree(3, 4)");
    o.require(dual_degree(3, 0) == 12 && dual_degree(2, 0) == 2, "cross checks");
    // Class-product expansion by hand: d (d-1)^2 lambda^3 - 2 sum e_i^3.
    for (int d = 2; d <= 6; ++d)
      for (int n = 0; n <= 8; ++n) o.require(dual_degree(d, n) == d * (d - 1) * (d - 1) - 2 * n, "closed form");
    const std::string doc = run_dual_degree(3, 4).doc.dump();
    for (const char* s : {"3λ - 2e1 - 2e2 - 2e3 - 2e4", "2λ - e1 - e2 - e3 - e4", "12 - 2(4)"})
      o.require(doc.find(s) != std::string::npos, std::string("missing \"") + s + "\"");
    return o;
  });

  criterion(7, "f_b critical values {0, 1728} and root structure", 1000.0, [](double&) {
    Outcome o;
    o.require(fb_critical_b().values == std::vector<Rat>{Rat(0), Rat(1728)}, "critical set");
    const FbAnalysis a0 = fb_root_analysis(Rat(0));
    o.require(a0.roots.size() == 1 && a0.roots[0].exact == Rat(6912) && a0.roots[0].multiplicity == 3, "b = 0");
    const FbAnalysis a1 = fb_root_analysis(Rat(1728));
    bool simple = false, dbl = false;
    for (const auto& r : a1.roots) {
      simple = simple || (r.exact == Rat(1728) && r.multiplicity == 1);
      dbl = dbl || (r.exact == Rat(-13824) && r.multiplicity == 2);
    }
    o.require(a1.roots.size() == 2 && simple && dbl, "b = 1728");
    for (const Rat& b : random_rationals(10, kSeed + 7, 1000000, 1000)) {
      if (b == Rat(0) || b == Rat(1728)) continue;
      o.require(fb_root_analysis(b).profile == MultiplicityProfile{{{1, 3}}}, "b = " + b.to_string());
    }
    return o;
  });

  criterion(8, "stabilizer: 18 candidates, C3 x| S3 presentation, quadratic conditions, 1000 probes", 20000.0, [](double&) {
    Outcome o;
    const auto group = candidate_group();
    const GroupStructureReport g = verify_group_structure(group);
    o.require(g.order == 18 && g.products_checked == 324 && g.closed && g.passed, "group structure");
    const std::vector<Rat> lambdas{Rat(-7), Rat(-5), Rat(-3), Rat(1), Rat(3), Rat(5), Rat(7)};
    for (const Rat& l : lambdas) {
      for (const auto& e : group) {
        o.require(stabilizes(e, EisRat(l)), "candidate fails at lambda = " + l.to_string());
        for (const auto& r : quadratic_residuals(e, EisRat(l)))
          o.require(r.is_zero(), "nonzero residual at lambda = " + l.to_string());
      }
    }
    int extras = 0;
    for (const auto& row : stabilizer_survey(lambdas, 1000, kSeed)) {
      o.require(row.candidates_ok == 18 && row.probes_tried == 1000, "survey row " + row.lambda.to_string());
      extras += row.extra_found;
    }
    o.require(extras == 0, "extra stabilizers found: " + std::to_string(extras));
    if (o.ok) o.detail = "no extra stabilizer in 7 x 1000 probes (evidence, not proof)";
    return o;
  });

  criterion(9, "property suites under seed 20240601", 60000.0, [](double&) {
    Outcome o;
    int cases = 0;
    for (const auto& r : testkit::all_properties(20240601)) {
      cases += r.cases;
      o.require(r.ok(), r.name + ": " + r.first_failure);
    }
    if (o.ok) o.detail = std::to_string(cases) + " cases";
    return o;
  });

  const double total = ms_since(battery_start);
  const bool battery_ok = total < kBatteryLimitMs;
  std::printf("battery %s  total %.0f ms, limit %.0f ms\n", battery_ok ? "PASS" : "FAIL", total, kBatteryLimitMs);
  failures += battery_ok ? 0 : 1;
  return failures == 0 ? 0 : 1;
}
