#ifndef NETCONICS_NETCONICS_H
#define NETCONICS_NETCONICS_H

#include <stddef.h>
#include <stdint.h>

#if defined(NETCONICS_BUILDING_LIBRARY)
#define NETCONICS_API __attribute__((visibility("default")))
#else
#define NETCONICS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* A command that ran to completion returns NC_OK or NC_VERIFICATION_FAILED
 * and hands back a result; every other status leaves *out untouched and
 * sets nc_last_error(). */
typedef enum nc_status {
  NC_OK = 0,
  NC_VERIFICATION_FAILED = 1,
  NC_INVALID_ARGUMENT = 2,
  NC_DOMAIN_ERROR = 3,
  NC_NON_GENERIC = 4,
  NC_NUMERIC_FAILURE = 5,
  NC_INTERNAL_ERROR = 6
} nc_status;

typedef struct nc_config {
  uint64_t seed;
  int32_t samples;   /* >= 1 */
  double tolerance;  /* in (0, 1e-3] */
  int32_t probes;    /* random stabilizer probes per lambda, >= 1 */
  /* Rational text replacing the j normalization constant, or NULL. Only
   * meant for negative controls. */
  const char* kappa_override;
} nc_config;

typedef struct nc_result nc_result;
typedef struct nc_cubic nc_cubic;

/* Commands taking a config treat NULL as these defaults. */
NETCONICS_API void nc_config_default(nc_config* config);

/* Strings stay valid until the owning object is destroyed. */
NETCONICS_API const char* nc_result_json(const nc_result* result);
NETCONICS_API const char* nc_result_text(const nc_result* result);
NETCONICS_API int nc_result_passed(const nc_result* result);
NETCONICS_API void nc_result_destroy(nc_result* result);

/* Lambda and b values are rational text "p" or "p/q". An empty lambda list
 * selects seeded random values (hessian identity) or the default list
 * -7, -5, -3, 1, 3, 5, 7 (stabilizer). */
NETCONICS_API nc_status nc_hessian_identity(const nc_config* config, const char* const* lambdas, size_t count,
                                            nc_result** out);
NETCONICS_API nc_status nc_verify_h0(const nc_config* config, nc_result** out);
/* An empty j0 list selects three seeded random values per flag. */
NETCONICS_API nc_status nc_sweep(const nc_config* config, const uint64_t* seeds, size_t seed_count,
                                 const char* const* j0s, size_t j0_count, nc_result** out);
/* b == NULL runs the full f_b battery. */
NETCONICS_API nc_status nc_fb(const nc_config* config, const char* b, nc_result** out);
NETCONICS_API nc_status nc_dual_degree(int32_t d, int32_t nodes, nc_result** out);
NETCONICS_API nc_status nc_stabilizer(const nc_config* config, const char* const* lambdas, size_t count,
                                      nc_result** out);
NETCONICS_API nc_status nc_report(const nc_config* config, nc_result** out);

/* Text such as "x^3 + y^3 + z^3 - 3*x*y*z"; variables x, y, z or a, b, c. */
NETCONICS_API nc_status nc_cubic_parse(const char* text, nc_cubic** out);
NETCONICS_API const char* nc_cubic_to_string(const nc_cubic* cubic);
NETCONICS_API nc_status nc_cubic_analyze(const nc_cubic* cubic, const nc_config* config, nc_result** out);
NETCONICS_API void nc_cubic_destroy(nc_cubic* cubic);

/* Message of the last failed call on this thread; empty if none. */
NETCONICS_API const char* nc_last_error(void);
NETCONICS_API const char* nc_status_string(nc_status status);
NETCONICS_API const char* nc_version(void);

#ifdef __cplusplus
}
#endif

#endif
