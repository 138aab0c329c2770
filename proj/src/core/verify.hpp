#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/invariants.hpp"
#include "core/json_io.hpp"

namespace netconics {

struct RunConfig {
  std::uint64_t seed = 1;
  int samples = 20;
  /// Upper bound on numeric residuals accepted by the sweep checks.
  double tolerance = 1e-8;
  int probes = 1000;
  Calibration calibration = Calibration::standard();
};

/// One command's outcome: a JSON document (with "schema"), a human-readable
/// rendering, and whether every check passed.
struct CommandResult {
  Json doc;
  std::string text;
  bool passed = false;
};

/// Seeded rationals p/q that avoid the excluded Hesse parameters.
std::vector<Rat> random_admissible_lambdas(int count, std::uint64_t seed);
std::vector<Rat> random_rationals(int count, std::uint64_t seed, long numerator_bound, long denominator_bound);

/// An empty lambda list means cfg.samples seeded random values.
CommandResult run_hessian_identity(const std::vector<Rat>& lambdas, const RunConfig& cfg);
CommandResult run_verify_h0(const RunConfig& cfg);
/// An empty j0 list means three seeded random values per flag. The class
/// ledger is included when at least three seeds are swept.
CommandResult run_sweep(const std::vector<std::uint64_t>& seeds, const std::vector<Rat>& j0s, const RunConfig& cfg);
/// Without b: the critical set, b = 0, b = 1728 and cfg.samples random b.
CommandResult run_fb(const std::optional<Rat>& b, const RunConfig& cfg);
CommandResult run_dual_degree(int d, int nodes);
/// An empty lambda list means -7, -5, -3, 1, 3, 5, 7.
CommandResult run_stabilizer(const std::vector<Rat>& lambdas, const RunConfig& cfg);
CommandResult run_cubic(const RatForm& cubic, const RunConfig& cfg);
/// The whole battery in one document.
CommandResult run_report(const RunConfig& cfg);

}  // namespace netconics
