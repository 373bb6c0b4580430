#ifndef SODCHECK_H
#define SODCHECK_H

#include <stddef.h>

#if defined(_WIN32)
#define SOD_API __declspec(dllexport)
#else
#define SOD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  SOD_OK = 0,
  SOD_INVALID_ARGUMENT = 1,
  SOD_UNDECIDED = 2,
  SOD_INTERNAL = 3,
  SOD_IO = 4
} sod_status;

typedef enum {
  SOD_COINCIDENT = 0,
  SOD_SHARED_P = 1,
  SOD_SHARED_Q = 2,
  SOD_DISJOINT = 3
} sod_incidence;

typedef struct sod_config sod_config;
typedef struct sod_report sod_report;
typedef struct sod_table sod_table;

typedef struct {
  int reversed_order;
  int cutoff; /* negative: 2d + 4 */
  int jobs;
} sod_verify_options;

/* Message for the last failing call on this thread; never NULL. */
SOD_API const char* sod_last_error(void);
SOD_API void sod_string_free(char* s);

SOD_API sod_status sod_config_create(int m, int n, int d, int cyclic, sod_config** out);
SOD_API void sod_config_destroy(sod_config* cfg);

SOD_API sod_status sod_verify(const sod_config* cfg, const sod_verify_options* options, sod_report** out);
SOD_API sod_status sod_check_p1(int d, sod_report** out);
SOD_API sod_status sod_hilbert(const sod_config* cfg, int cutoff, sod_report** out);

SOD_API int sod_report_passed(const sod_report* report);
SOD_API size_t sod_report_check_count(const sod_report* report);
SOD_API size_t sod_report_failure_count(const sod_report* report);
/* Number of checks of the given kind, e.g. "semiorthogonal". */
SOD_API size_t sod_report_count_kind(const sod_report* report, const char* kind);
SOD_API sod_status sod_report_to_json(const sod_report* report, char** out);
SOD_API sod_status sod_report_to_text(const sod_report* report, int verbose, char** out);
SOD_API sod_status sod_report_to_csv(const sod_report* report, int header, char** out);
SOD_API void sod_report_destroy(sod_report* report);

/* H^*(O_X(k) chi^c). */
SOD_API sod_status sod_cohomology_hypersurface(const sod_config* cfg, long long k, long long c, sod_table** out);
/* Ext^*(later, earlier); objects are written O(k,c), Pf(c), Pg(c) or L(k,c). */
SOD_API sod_status sod_ext(const sod_config* cfg, const char* later, const char* earlier, sod_incidence incidence,
                           sod_table** out);

SOD_API int sod_table_is_zero(const sod_table* table);
SOD_API int sod_table_invariant_zero(const sod_table* table);
/* Multiplicity of character c in degree; *infinite is set when the entry is INFINITE. */
SOD_API sod_status sod_table_entry(const sod_table* table, int degree, long long c, unsigned long long* count,
                                   int* infinite);
SOD_API sod_status sod_table_to_json(const sod_table* table, char** out);
SOD_API sod_status sod_table_to_string(const sod_table* table, char** out);
SOD_API void sod_table_destroy(sod_table* table);

#ifdef __cplusplus
}
#endif

#endif
