#ifndef K3QUARTIC_H
#define K3QUARTIC_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(K3_BUILDING_LIBRARY)
#define K3_API __attribute__((visibility("default")))
#else
#define K3_API
#endif

typedef enum {
  K3_OK = 0,
  K3_ERR_PARSE = 1,
  K3_ERR_DIVISION_BY_ZERO = 2,
  K3_ERR_REDUCIBILITY = 3,
  K3_ERR_CONFIGURATION = 4,
  K3_ERR_DOMAIN = 5,
  K3_ERR_PRECONDITION = 6,
  K3_ERR_NUMERIC = 7,
  K3_ERR_INVALID_ARGUMENT = 8,
  K3_ERR_INTERNAL = 9
} k3_status;

typedef struct k3_report k3_report;
typedef struct k3_lattice k3_lattice;

K3_API const char* k3_version(void);
/* Message of the last failed call on this thread; "" if none. */
K3_API const char* k3_last_error(void);
K3_API const char* k3_status_name(k3_status s);

/* Each command writes a new report to *out; release it with k3_report_free. */
K3_API k3_status k3_analyze(const char* alpha, int mw_rank /* -1: unset */, k3_report** out);
/* alpha may be NULL for the free parameter; degeneration is NULL, "inf" or "zero". */
K3_API k3_status k3_fibers(const char* alpha, const char* degeneration, k3_report** out);
K3_API k3_status k3_lattice_invariants(const char* preset, k3_report** out);
K3_API k3_status k3_lattice_tn(long n, k3_report** out);
K3_API k3_status k3_split(const char* alpha, const char* param_json, k3_report** out);
K3_API k3_status k3_cm(const char* beta4, int precision_bits, k3_report** out);
K3_API k3_status k3_moduli(const char* check, k3_report** out);
K3_API k3_status k3_verify(const char* suite, k3_report** out);

/* Owned by the report. */
K3_API const char* k3_report_json(const k3_report* r, int indent);
K3_API int k3_report_all_passed(const k3_report* r);
K3_API void k3_report_free(k3_report* r);

K3_API k3_status k3_lattice_from_preset(const char* name, k3_lattice** out);
/* Row-major n x n symmetric integer matrix. */
K3_API k3_status k3_lattice_from_gram(const long* entries, int n, k3_lattice** out);
K3_API int k3_lattice_rank(const k3_lattice* l);
K3_API k3_status k3_lattice_report(const k3_lattice* l, k3_report** out);
K3_API void k3_lattice_free(k3_lattice* l);

#ifdef __cplusplus
}
#endif

#endif
