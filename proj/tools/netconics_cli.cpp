#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "netconics/netconics.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int exit_code(nc_status s) {
  switch (s) {
    case NC_OK: return kExitPass;
    case NC_INVALID_ARGUMENT:
    case NC_DOMAIN_ERROR: return kExitUsage;
    default: return kExitFail;
  }
}

// "a..b" (inclusive), "a,b,c" or a single seed.
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const std::uint64_t lo = std::stoull(text.substr(0, dots));
    const std::uint64_t hi = std::stoull(text.substr(dots + 2));
    if (hi < lo || hi - lo > 10000) throw CLI::ValidationError("--seeds", "range must be increasing and short");
    for (std::uint64_t s = lo; s <= hi; ++s) out.push_back(s);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    out.push_back(std::stoull(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of invariants, intersection numbers and stabilizers for nets of conics"};
  app.require_subcommand(1);
  app.fallthrough();

  nc_config config;
  nc_config_default(&config);
  std::string format = "json";
  std::string output;
  std::string kappa;
  app.add_option("--seed", config.seed, "Random seed")->capture_default_str();
  app.add_option("--samples", config.samples, "Number of random samples")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--tolerance", config.tolerance, "Numeric residual bound, in (0, 1e-3]")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1e-3));
  app.add_option("--probes", config.probes, "Random stabilizer probes per lambda")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--output", output, "Write to this file instead of standard output");
  app.add_option("--kappa", kappa, "Override the j normalization constant (negative control)")->group("");

  std::vector<std::string> lambdas;
  int random_count = 0;
  auto* hessian = app.add_subcommand("hessian-identity", "Hessian j-invariant identity on the Hesse pencil");
  hessian->add_option("--lambda", lambdas, "Rational lambda (repeatable)");
  hessian->add_option("--random", random_count, "Number of seeded random lambdas")->check(CLI::PositiveNumber);

  std::string seeds_text;
  std::vector<std::string> j_values;
  auto* sweep = app.add_subcommand("sweep", "Discriminant sweep over a pencil of planes in a seeded flag");
  sweep->add_option("--seeds", seeds_text, "Seed range a..b or list a,b,c");
  sweep->add_option("--j", j_values, "Finite j for the fiber count (repeatable)");

  std::string b_value;
  auto* fb = app.add_subcommand("fb", "Root multiplicities of f_b(j) = (6912 - j)^3 - 27 b j^2");
  fb->add_option("--b", b_value, "Rational b; omit for the full battery");

  int d = 3;
  int nodes = 4;
  auto* dual = app.add_subcommand("dual-degree", "Dual degree of a surface with ordinary double points");
  dual->add_option("--d", d, "Surface degree")->capture_default_str()->check(CLI::Range(2, 1000));
  dual->add_option("--nodes", nodes, "Number of nodes")->capture_default_str()->check(CLI::NonNegativeNumber);

  std::vector<std::string> stab_lambdas;
  auto* stab = app.add_subcommand("stabilizer", "The 18 candidate stabilizers of W_lambda over Q(w)");
  stab->add_option("--lambda", stab_lambdas, "Rational lambda (repeatable)");

  auto* h0 = app.add_subcommand("verify-h0", "Exact checks on the nodal net <xy, x^2 + yz, y^2 + xz>");
  auto* report = app.add_subcommand("report", "Full verification battery");

  std::string cubic_text;
  auto* cubic = app.add_subcommand("cubic", "Invariants and singularities of a plane cubic");
  cubic->add_option("form", cubic_text, "Cubic such as \"y^2*z - x^3 - x*z^2\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (!kappa.empty()) config.kappa_override = kappa.c_str();
  if (random_count > 0) config.samples = random_count;

  nc_result* result = nullptr;
  nc_status status = NC_INTERNAL_ERROR;
  try {
    if (*hessian) {
      const auto lv = c_strings(lambdas);
      status = nc_hessian_identity(&config, lv.data(), lv.size(), &result);
    } else if (*sweep) {
      const auto seeds = seeds_text.empty() ? std::vector<std::uint64_t>{config.seed} : parse_seeds(seeds_text);
      const auto jv = c_strings(j_values);
      status = nc_sweep(&config, seeds.data(), seeds.size(), jv.data(), jv.size(), &result);
    } else if (*fb) {
      status = nc_fb(&config, b_value.empty() ? nullptr : b_value.c_str(), &result);
    } else if (*dual) {
      status = nc_dual_degree(d, nodes, &result);
    } else if (*stab) {
      const auto lv = c_strings(stab_lambdas);
      status = nc_stabilizer(&config, lv.data(), lv.size(), &result);
    } else if (*h0) {
      status = nc_verify_h0(&config, &result);
    } else if (*report) {
      status = nc_report(&config, &result);
    } else if (*cubic) {
      nc_cubic* parsed = nullptr;
      status = nc_cubic_parse(cubic_text.c_str(), &parsed);
      if (status == NC_OK) {
        status = nc_cubic_analyze(parsed, &config, &result);
        nc_cubic_destroy(parsed);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (result == nullptr) {
    std::cerr << "error: " << nc_status_string(status) << ": " << nc_last_error() << "\n";
    return exit_code(status);
  }
  const std::string body = format == "json" ? nc_result_json(result) : nc_result_text(result);
  nc_result_destroy(result);
  if (output.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out || !(out << body)) {
      std::cerr << "error: cannot write " << output << "\n";
      return kExitUsage;
    }
  }
  return exit_code(status);
}
