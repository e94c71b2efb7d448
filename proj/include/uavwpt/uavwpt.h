/* SPDX-License-Identifier: Apache-2.0 */

/*
 * C interface to the UAV wireless-power-transfer planner.
 *
 * All lengths are meters, times seconds, angles radians, powers watts and
 * energies joules. Functions return UAVWPT_OK on success; on failure the
 * returned status names the error class and uavwpt_last_error() holds a
 * message for the calling thread. Handles are opaque and owned by the
 * caller, who releases them with the matching *_destroy function.
 */

#ifndef UAVWPT_UAVWPT_H_
#define UAVWPT_UAVWPT_H_

#include <stddef.h>

#if defined(_WIN32)
#if defined(UAVWPT_BUILDING_LIBRARY)
#define UAVWPT_API __declspec(dllexport)
#else
#define UAVWPT_API __declspec(dllimport)
#endif
#else
#define UAVWPT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum uavwpt_status {
  UAVWPT_OK = 0,
  UAVWPT_ERR_INVALID_ARGUMENT = 1,
  UAVWPT_ERR_REGIME_VIOLATION = 2,
  UAVWPT_ERR_EMPTY_INTERVAL = 3,
  UAVWPT_ERR_DURATION_TOO_SHORT = 4,
  UAVWPT_ERR_OUT_OF_RANGE = 5,
  UAVWPT_ERR_STATIC_INFEASIBLE = 6,
  UAVWPT_ERR_IO = 7,
  UAVWPT_ERR_INTERNAL = 99
} uavwpt_status;

typedef enum uavwpt_regime {
  UAVWPT_REGIME_VALID = 0,
  UAVWPT_REGIME_NEVER_COVERS_BOTH = 1,
  UAVWPT_REGIME_ALWAYS_COVERS_BOTH = 2
} uavwpt_regime;

typedef enum uavwpt_case {
  UAVWPT_CASE_SINGLE_ER = 0,
  UAVWPT_CASE_DUAL_ER_EQUALITY = 1,
  UAVWPT_CASE_DUAL_ER_SLACK = 2
} uavwpt_case;

typedef enum uavwpt_gain_model {
  UAVWPT_GAIN_DIRECTIONAL = 0,
  UAVWPT_GAIN_OMNI = 1
} uavwpt_gain_model;

typedef enum uavwpt_segment_kind {
  UAVWPT_SEGMENT_HOVER = 0,
  UAVWPT_SEGMENT_FLY = 1
} uavwpt_segment_kind;

typedef struct uavwpt_scenario {
  double separation; /* D, ERs sit at -D/2 and +D/2 */
  double duration;   /* T */
} uavwpt_scenario;

typedef struct uavwpt_limits {
  double h_min;
  double h_max;
  double v_max;
  double theta_min;
  double theta_max;
} uavwpt_limits;

typedef struct uavwpt_radio {
  double beta0; /* linear channel gain at 1 m */
  double p_tx;
  double g0;    /* <= 0 selects the default 2.2846 */
} uavwpt_radio;

typedef struct uavwpt_state {
  double x;
  double h;
  double theta;
} uavwpt_state;

typedef struct uavwpt_hover_solution {
  double x_bar;
  double h_bar;
  double theta_bar;
  double value; /* per-ER average received power */
  uavwpt_case case_tag;
} uavwpt_hover_solution;

typedef struct uavwpt_energy_report {
  double e1;
  double e2;
  double common;
  double normalized_common;
} uavwpt_energy_report;

typedef struct uavwpt_segment {
  uavwpt_segment_kind kind;
  double t_start;
  double t_end;
  double x_start;
  double x_end;
  double h;
  int scheduled_beam; /* nonzero: beamwidth follows the in-flight rule */
  double theta;       /* fixed beamwidth when scheduled_beam == 0 */
} uavwpt_segment;

typedef struct uavwpt_oracle_result {
  double x;
  double h;
  double theta;
  double value;
} uavwpt_oracle_result;

typedef struct uavwpt_problem uavwpt_problem;
typedef struct uavwpt_trajectory uavwpt_trajectory;

UAVWPT_API const char* uavwpt_version(void);
UAVWPT_API const char* uavwpt_status_string(uavwpt_status status);
/* Message of the last failure on this thread; empty after a success. */
UAVWPT_API const char* uavwpt_last_error(void);

UAVWPT_API double uavwpt_db_to_linear(double db);
UAVWPT_API double uavwpt_dbm_to_watts(double dbm);

/* Checks field invariants only; the operating regime is reported separately. */
UAVWPT_API uavwpt_status uavwpt_problem_create(const uavwpt_scenario* scenario,
                                               const uavwpt_limits* limits,
                                               const uavwpt_radio* radio,
                                               uavwpt_problem** out);
UAVWPT_API void uavwpt_problem_destroy(uavwpt_problem* problem);

/* Writes the regime classification. Returns UAVWPT_ERR_REGIME_VIOLATION with
 * a diagnostic when it is not UAVWPT_REGIME_VALID. */
UAVWPT_API uavwpt_status uavwpt_problem_validate(const uavwpt_problem* problem,
                                                 uavwpt_regime* out);

UAVWPT_API uavwpt_status uavwpt_received_power(const uavwpt_problem* problem,
                                               const uavwpt_state* state, int er_index,
                                               uavwpt_gain_model model, double* out);

UAVWPT_API uavwpt_status uavwpt_solve_relaxed(const uavwpt_problem* problem,
                                              uavwpt_hover_solution* out);
UAVWPT_API uavwpt_status uavwpt_upper_bound(const uavwpt_problem* problem,
                                            const uavwpt_hover_solution* solution,
                                            double* out_energy);

UAVWPT_API uavwpt_status uavwpt_trajectory_build(const uavwpt_problem* problem,
                                                 const uavwpt_hover_solution* solution,
                                                 uavwpt_trajectory** out);
UAVWPT_API void uavwpt_trajectory_destroy(uavwpt_trajectory* trajectory);
UAVWPT_API size_t uavwpt_trajectory_segment_count(const uavwpt_trajectory* trajectory);
UAVWPT_API uavwpt_status uavwpt_trajectory_segment(const uavwpt_trajectory* trajectory,
                                                   size_t index, uavwpt_segment* out);
UAVWPT_API uavwpt_status uavwpt_trajectory_state_at(const uavwpt_trajectory* trajectory,
                                                    double t, uavwpt_state* out);
/* dt <= 0 selects min(1 ms, T_fly / 1000). */
UAVWPT_API uavwpt_status uavwpt_trajectory_energy(const uavwpt_trajectory* trajectory,
                                                  double dt, uavwpt_energy_report* out);
UAVWPT_API uavwpt_status uavwpt_trajectory_write_csv(const uavwpt_trajectory* trajectory,
                                                     double step, const char* path);

/* Benchmarks. out_trajectory may be NULL. */
UAVWPT_API uavwpt_status uavwpt_benchmark_omni(const uavwpt_problem* problem, double dt,
                                               uavwpt_energy_report* out_report,
                                               double* out_hover_offset,
                                               uavwpt_trajectory** out_trajectory);
UAVWPT_API uavwpt_status uavwpt_benchmark_static(const uavwpt_problem* problem,
                                                 uavwpt_energy_report* out_report,
                                                 double* out_h, double* out_theta,
                                                 uavwpt_trajectory** out_trajectory);

UAVWPT_API uavwpt_status uavwpt_oracle_brute_force(const uavwpt_problem* problem, size_t n_x,
                                                   size_t n_h, size_t n_theta,
                                                   uavwpt_oracle_result* out);

/* CSV formatting shared by every producer of result files. Writes at most
 * `size` bytes including the terminator and returns the full length, like
 * snprintf. */
UAVWPT_API const char* uavwpt_results_csv_header(void);
UAVWPT_API const char* uavwpt_solver_csv_header(void);
UAVWPT_API size_t uavwpt_results_csv_row(const char* scheme, double separation, double duration,
                                         const uavwpt_energy_report* report, char* buf,
                                         size_t size);
UAVWPT_API size_t uavwpt_solver_csv_row(double separation, const uavwpt_hover_solution* solution,
                                        char* buf, size_t size);
UAVWPT_API size_t uavwpt_format_number(double value, char* buf, size_t size);

#ifdef __cplusplus
}
#endif

#endif /* UAVWPT_UAVWPT_H_ */
