/* C interface to the observability lab. All handles are opaque; every call that
 * can fail returns an obslab_status and records a message for obslab_last_error(). */
#ifndef OBSLAB_H
#define OBSLAB_H

#include <stdint.h>

#if defined(OBSLAB_BUILDING_LIBRARY)
#define OBSLAB_API __attribute__((visibility("default")))
#else
#define OBSLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum obslab_status {
    OBSLAB_OK = 0,
    OBSLAB_FAIL = 1,              /* the verification ran and did not pass */
    OBSLAB_ERR_CONFIG = 2,        /* malformed or out-of-range input */
    OBSLAB_ERR_PRECONDITION = 3,  /* a hypothesis of the estimate (e.g. T above threshold) fails */
    OBSLAB_ERR_INTERNAL = 4,
    OBSLAB_ERR_IO = 5
} obslab_status;

typedef struct obslab_experiment obslab_experiment;
typedef struct obslab_report obslab_report;

OBSLAB_API const char* obslab_version(void);

/* Message of the most recent failing call on this thread; empty if none. */
OBSLAB_API const char* obslab_last_error(void);

OBSLAB_API obslab_status obslab_experiment_from_json(const char* json_text, obslab_experiment** out);
OBSLAB_API obslab_status obslab_experiment_from_file(const char* path, obslab_experiment** out);
OBSLAB_API obslab_status obslab_experiment_set_seed(obslab_experiment* experiment, uint64_t seed);
OBSLAB_API void obslab_experiment_free(obslab_experiment* experiment);

/* Runs one of: verify, scan-t, constants, diophantine, mab, symmetry, ingham,
 * oracle-check. Returns OBSLAB_OK or OBSLAB_FAIL with *out set; on any error
 * *out is NULL. */
OBSLAB_API obslab_status obslab_run(const obslab_experiment* experiment, const char* command, obslab_report** out);

/* Pretty-printed JSON; owned by the report. */
OBSLAB_API const char* obslab_report_json(const obslab_report* report);
/* CSV text for scan-t, NULL otherwise; owned by the report. */
OBSLAB_API const char* obslab_report_csv(const obslab_report* report);
OBSLAB_API int obslab_report_passed(const obslab_report* report);
OBSLAB_API void obslab_report_free(obslab_report* report);

/* Direct numerics. */
OBSLAB_API obslab_status obslab_m_ab(double a, double b, double* value, int* attained_n);
OBSLAB_API obslab_status obslab_symmetry_constants(double alpha, int* p, double* m_p, double* M_p);
OBSLAB_API obslab_status obslab_gamma_hat(int M, int64_t K_max, double* gamma_hat, int64_t* argmin_k);
/* Threshold on T and, when T is above it, the constant (*has_c = 1). Parameters
 * unused by the scenario are ignored. */
OBSLAB_API obslab_status obslab_predicted_constant(const char* scenario, double T, double m_ab, double m_cd,
                                                   double m_p, double M_p, double m_q, double M_q,
                                                   double* T_threshold, int* has_c, double* c);

#ifdef __cplusplus
}
#endif

#endif
