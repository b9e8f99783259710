/* C interface to the zeno library.
 *
 * Conventions:
 *   - Every fallible call returns a zeno_status; ZENO_OK is zero.  On failure
 *     zeno_last_error_message() describes the most recent error in the
 *     calling thread, and output parameters are left untouched.
 *   - Objects come back through out-parameters as opaque handles and must be
 *     released with the matching _destroy call (safe on NULL).
 *   - Complex arrays are passed as interleaved doubles (re, im), row-major
 *     for matrices.
 */

#ifndef ZENO_C_H
#define ZENO_C_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zeno_status {
    ZENO_OK = 0,
    ZENO_ERROR_INVALID_ARGUMENT = 1,
    ZENO_ERROR_NON_HERMITIAN = 2,
    ZENO_ERROR_CONVERGENCE_FAILURE = 3,
    ZENO_ERROR_SIZE_LIMIT = 4,
    ZENO_ERROR_NUMERIC_DRIFT = 5,
    ZENO_ERROR_BOUNDARY = 6,
    ZENO_ERROR_ZERO_EIGENVALUE = 7,
    ZENO_ERROR_INTERNAL = 8
} zeno_status;

/* Stable identifier for a status value, e.g. "numeric-drift". */
const char *zeno_status_name(zeno_status status);

/* Message of the last failing call on this thread; empty string if none. */
const char *zeno_last_error_message(void);

/* --------------------------------------------------------------------- */
/* Protocol traces                                                        */

typedef struct zeno_trace zeno_trace;

/* Number of rows in the trace: cycle count + 1, row 0 being the start. */
int64_t zeno_trace_rows(const zeno_trace *trace);

/* Reads row `index`.  Any output pointer may be NULL.  `rel_fluctuation`
 * is NaN and `*fluct_defined` is 0 when the expectation sits at zero. */
zeno_status zeno_trace_row(const zeno_trace *trace, int64_t index,
                           double *expectation, double *variance,
                           double *rel_fluctuation, int *fluct_defined);

void zeno_trace_destroy(zeno_trace *trace);

/* --------------------------------------------------------------------- */
/* Hopping chain with a monitored site                                    */

typedef struct zeno_xx_model zeno_xx_model;

/* `periodic` is 0 for an open chain, nonzero for a ring.
 * `apparatus_eigenvalue` is the pointer phase rate imprinted on site 0. */
zeno_status zeno_xx_model_create(int64_t sites, double omega, double hopping,
                                 int periodic, double apparatus_eigenvalue,
                                 zeno_xx_model **out);
void zeno_xx_model_destroy(zeno_xx_model *model);

typedef enum zeno_route {
    ZENO_ROUTE_STEPWISE = 0,
    ZENO_ROUTE_SUPEROPERATOR = 1
} zeno_route;

/* Runs `steps` cycles of free evolution (total_time / steps each) followed
 * by a measurement window of tau_m, recording the monitored-site occupation.
 * `initial_corr` is an interleaved sites*sites correlation matrix, or NULL
 * for one particle localized on the monitored site. */
zeno_status zeno_xx_run(const zeno_xx_model *model, double total_time,
                        int64_t steps, double tau_m, zeno_route route,
                        const double *initial_corr, zeno_trace **out);

/* Critical windows 2 pi k / |apparatus_eigenvalue|, k = 1..max_winding,
 * written to out[0..max_winding-1]. */
zeno_status zeno_xx_critical_times(double apparatus_eigenvalue,
                                   int64_t max_winding, double *out);

/* Runs every independent route (correlation stepwise, vectorized cycle map,
 * many-body oracle, bare wavefunction, powered cycle map) from a particle
 * localized on the monitored site and reports the worst disagreement.
 * `corrupt_phase_sign` nonzero deliberately breaks the many-body oracle to
 * demonstrate detection.  Disagreement is reported through `agree`, not as a
 * status.  Any output pointer may be NULL. */
zeno_status zeno_xx_cross_check(const zeno_xx_model *model, double total_time,
                                int64_t steps, double tau_m,
                                int corrupt_phase_sign,
                                double *max_step_deviation,
                                double *matpow_deviation, double *tolerance,
                                int *agree);

/* --------------------------------------------------------------------- */
/* Generic repeated-measurement model                                     */

typedef struct zeno_qnd_model zeno_qnd_model;

/* level_energies, observable_diag: system_dim reals.
 * transition: system_dim^2 interleaved complex entries, Hermitian.
 * meas_blocks: system_dim blocks of apparatus_dim^2 interleaved complex
 *              entries each, concatenated in level order; each Hermitian.
 * system_state, apparatus_state: normalized interleaved complex vectors. */
zeno_status zeno_qnd_model_create(int64_t system_dim, int64_t apparatus_dim,
                                  const double *level_energies,
                                  const double *observable_diag,
                                  const double *transition,
                                  const double *meas_blocks,
                                  const double *system_state,
                                  const double *apparatus_state,
                                  zeno_qnd_model **out);
void zeno_qnd_model_destroy(zeno_qnd_model *model);

/* 1 when at least two apparatus blocks differ (the measurement records the
 * level), 0 otherwise; negative on invalid handle. */
int zeno_qnd_model_measurement_coupled(const zeno_qnd_model *model);

/* Exact joint-space protocol run recording the monitored observable. */
zeno_status zeno_qnd_run(const zeno_qnd_model *model, double total_time,
                         int64_t steps, double tau_m, zeno_trace **out);

/* --------------------------------------------------------------------- */
/* Critical-window enumeration over explicit apparatus spectra            */

typedef struct zeno_critical_list zeno_critical_list;

/* `eigenvalues` holds n_levels * block_dim reals, level-major: the apparatus
 * spectrum attached to each system level.  Windows 2 pi k / gap for every
 * cross-level gap and k = 1..max_winding, ascending and deduplicated. */
zeno_status zeno_critical_enumerate(const double *eigenvalues, int64_t n_levels,
                                    int64_t block_dim, int64_t max_winding,
                                    zeno_critical_list **out);

int64_t zeno_critical_list_count(const zeno_critical_list *list);

/* Number of cross-level eigenvalue pairs that are exactly degenerate; such
 * pairs produce no window. */
int64_t zeno_critical_list_degenerate_count(const zeno_critical_list *list);

/* Reads degenerate pair `index`.  Any output pointer may be NULL. */
zeno_status zeno_critical_list_degenerate_entry(const zeno_critical_list *list,
                                                int64_t index, int64_t *level_n,
                                                int64_t *level_l, int64_t *beta,
                                                int64_t *alpha);

/* Reads entry `index`.  Any output pointer may be NULL. */
zeno_status zeno_critical_list_entry(const zeno_critical_list *list,
                                     int64_t index, double *tau_m,
                                     int64_t *level_n, int64_t *level_l,
                                     int64_t *beta, int64_t *alpha,
                                     int64_t *winding);

void zeno_critical_list_destroy(zeno_critical_list *list);

#ifdef __cplusplus
}
#endif

#endif /* ZENO_C_H */
