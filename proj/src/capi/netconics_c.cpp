#include "netconics/netconics.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/verify.hpp"

struct nc_result {
  std::string json;
  std::string text;
  bool passed = false;
};

struct nc_cubic {
  netconics::RatForm form;
  std::string text;
};

namespace {

thread_local std::string last_error;

nc_status status_of(netconics::ErrorCode code) {
  using netconics::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidInput: return NC_INVALID_ARGUMENT;
    case ErrorCode::kDomain: return NC_DOMAIN_ERROR;
    case ErrorCode::kNonGeneric: return NC_NON_GENERIC;
    case ErrorCode::kNumericFailure: return NC_NUMERIC_FAILURE;
    case ErrorCode::kVerificationFailed: return NC_VERIFICATION_FAILED;
  }
  return NC_INTERNAL_ERROR;
}

nc_status fail(nc_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

netconics::RunConfig run_config(const nc_config* config) {
  nc_config c;
  nc_config_default(&c);
  if (config != nullptr) c = *config;
  if (c.samples < 1) throw netconics::Error(netconics::ErrorCode::kInvalidInput, "samples must be at least 1");
  if (c.probes < 1) throw netconics::Error(netconics::ErrorCode::kInvalidInput, "probes must be at least 1");
  if (!(c.tolerance > 0.0 && c.tolerance <= 1e-3))
    throw netconics::Error(netconics::ErrorCode::kInvalidInput, "tolerance must lie in (0, 1e-3]");
  netconics::RunConfig rc;
  rc.seed = c.seed;
  rc.samples = c.samples;
  rc.tolerance = c.tolerance;
  rc.probes = c.probes;
  if (c.kappa_override != nullptr) rc.calibration.kappa = netconics::Rat::parse(c.kappa_override);
  return rc;
}

std::vector<netconics::Rat> rationals(const char* const* values, std::size_t count) {
  if (count > 0 && values == nullptr) throw netconics::Error(netconics::ErrorCode::kInvalidInput, "null value list");
  std::vector<netconics::Rat> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (values[i] == nullptr) throw netconics::Error(netconics::ErrorCode::kInvalidInput, "null rational");
    out.push_back(netconics::Rat::parse(values[i]));
  }
  return out;
}

// Runs body, which produces a CommandResult, and converts it or the thrown
// exception into the C contract.
template <class Body>
nc_status guarded(nc_result** out, Body&& body) {
  if (out == nullptr) return fail(NC_INVALID_ARGUMENT, "null output pointer");
  try {
    const netconics::CommandResult r = body();
    auto* res = new nc_result{r.doc.dump(2) + "\n", r.text, r.passed};
    *out = res;
    last_error.clear();
    return r.passed ? NC_OK : NC_VERIFICATION_FAILED;
  } catch (const netconics::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(NC_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(NC_INTERNAL_ERROR, e.what());
  }
}

}  // namespace

extern "C" {

void nc_config_default(nc_config* config) {
  if (config == nullptr) return;
  config->seed = 1;
  config->samples = 20;
  config->tolerance = 1e-8;
  config->probes = 1000;
  config->kappa_override = nullptr;
}

const char* nc_result_json(const nc_result* result) { return result ? result->json.c_str() : ""; }
const char* nc_result_text(const nc_result* result) { return result ? result->text.c_str() : ""; }
int nc_result_passed(const nc_result* result) { return result && result->passed ? 1 : 0; }
void nc_result_destroy(nc_result* result) { delete result; }

nc_status nc_hessian_identity(const nc_config* config, const char* const* lambdas, size_t count, nc_result** out) {
  return guarded(out, [&] { return netconics::run_hessian_identity(rationals(lambdas, count), run_config(config)); });
}

nc_status nc_verify_h0(const nc_config* config, nc_result** out) {
  return guarded(out, [&] { return netconics::run_verify_h0(run_config(config)); });
}

nc_status nc_sweep(const nc_config* config, const uint64_t* seeds, size_t seed_count, const char* const* j0s,
                   size_t j0_count, nc_result** out) {
  return guarded(out, [&] {
    if (seed_count == 0 || seeds == nullptr) throw netconics::Error(netconics::ErrorCode::kInvalidInput, "no seeds given");
    return netconics::run_sweep(std::vector<std::uint64_t>(seeds, seeds + seed_count), rationals(j0s, j0_count),
                                run_config(config));
  });
}

nc_status nc_fb(const nc_config* config, const char* b, nc_result** out) {
  return guarded(out, [&] {
    std::optional<netconics::Rat> value;
    if (b != nullptr) value = netconics::Rat::parse(b);
    return netconics::run_fb(value, run_config(config));
  });
}

nc_status nc_dual_degree(int32_t d, int32_t nodes, nc_result** out) {
  return guarded(out, [&] { return netconics::run_dual_degree(d, nodes); });
}

nc_status nc_stabilizer(const nc_config* config, const char* const* lambdas, size_t count, nc_result** out) {
  return guarded(out, [&] { return netconics::run_stabilizer(rationals(lambdas, count), run_config(config)); });
}

nc_status nc_report(const nc_config* config, nc_result** out) {
  return guarded(out, [&] { return netconics::run_report(run_config(config)); });
}

nc_status nc_cubic_parse(const char* text, nc_cubic** out) {
  if (out == nullptr || text == nullptr) return fail(NC_INVALID_ARGUMENT, "null argument");
  try {
    netconics::RatForm f = netconics::parse_form(text);
    if (f.degree() != 3) return fail(NC_INVALID_ARGUMENT, "expected a cubic form");
    std::string s = netconics::to_string(f);
    *out = new nc_cubic{std::move(f), std::move(s)};
    last_error.clear();
    return NC_OK;
  } catch (const netconics::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(NC_INTERNAL_ERROR, e.what());
  }
}

const char* nc_cubic_to_string(const nc_cubic* cubic) { return cubic ? cubic->text.c_str() : ""; }

nc_status nc_cubic_analyze(const nc_cubic* cubic, const nc_config* config, nc_result** out) {
  if (cubic == nullptr) return fail(NC_INVALID_ARGUMENT, "null cubic");
  return guarded(out, [&] { return netconics::run_cubic(cubic->form, run_config(config)); });
}

void nc_cubic_destroy(nc_cubic* cubic) { delete cubic; }

const char* nc_last_error(void) { return last_error.c_str(); }

const char* nc_status_string(nc_status status) {
  switch (status) {
    case NC_OK: return "ok";
    case NC_VERIFICATION_FAILED: return "verification failed";
    case NC_INVALID_ARGUMENT: return "invalid argument";
    case NC_DOMAIN_ERROR: return "domain error";
    case NC_NON_GENERIC: return "non-generic input";
    case NC_NUMERIC_FAILURE: return "numeric failure";
    case NC_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char* nc_version(void) { return "1.0.0"; }

}  // extern "C"
