#ifndef BHC_H
#define BHC_H

/* C interface to the braided Hopf cyclic toolkit.
 *
 * Every function returns a bhc_status (BHC_OK on success). On failure the
 * message is available from bhc_last_error() until the next call on the same
 * thread. Strings handed out by a handle stay valid until the handle is freed.
 */

#include <stddef.h>

#if defined(_WIN32)
#define BHC_API __declspec(dllexport)
#else
#define BHC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef int bhc_status;

/* same values as bhc::Errc */
#define BHC_OK 0
#define BHC_E_DIVISION_BY_ZERO 1
#define BHC_E_FIELD_MISMATCH 2
#define BHC_E_SPACE_MISMATCH 3
#define BHC_E_OBJECT_NOT_IN_CATEGORY 4
#define BHC_E_NOT_A_MORPHISM 5
#define BHC_E_PRECONDITION_FAILED 6
#define BHC_E_HOST_MISMATCH 7
#define BHC_E_INDUCED_MAP_UNDEFINED 8
#define BHC_E_RESTRICTION_UNDEFINED 9
#define BHC_E_DEGREE_OUT_OF_RANGE 10
#define BHC_E_CALIBRATION_FAILED 11
#define BHC_E_UNSUPPORTED_MODE 12
#define BHC_E_TRUNCATION_OVERFLOW 13
#define BHC_E_TRUNCATION_TOO_SMALL 14
#define BHC_E_UNKNOWN_NAME 15
#define BHC_E_VERIFICATION_FAILED 16
#define BHC_E_PARSE_ERROR 17
#define BHC_E_INVALID_ARGUMENT 18
#define BHC_E_IO_ERROR 19
#define BHC_E_CAP_EXCEEDED 20
#define BHC_E_INTERNAL 99

typedef struct bhc_entry bhc_entry;
typedef struct bhc_report bhc_report;
typedef struct bhc_cocyclic bhc_cocyclic;

typedef enum { BHC_CHECK_HOPF, BHC_CHECK_PAIR, BHC_CHECK_BMPI, BHC_CHECK_SAYD, BHC_CHECK_CATEGORY } bhc_check_kind;
typedef enum { BHC_BUILD_CM, BHC_BUILD_CM_SUPER, BHC_BUILD_TRIPLE } bhc_builder;
typedef enum { BHC_HOCHSCHILD, BHC_CYCLIC, BHC_COTOR } bhc_theory;

BHC_API const char* bhc_last_error(void);
BHC_API const char* bhc_status_name(bhc_status s);
BHC_API unsigned bhc_default_cap(void);

/* ---- entries ---- */

/* catalog name, or a path to an interchange file (anything containing '/' or ending in .json) */
BHC_API bhc_status bhc_entry_load(const char* name_or_path, bhc_entry** out);
BHC_API bhc_status bhc_entry_import_text(const char* json_text, const char* source, bhc_entry** out);
BHC_API void bhc_entry_free(bhc_entry* e);
/* names of the built-in examples, NULL past the end */
BHC_API const char* bhc_example_name(size_t i);

BHC_API const char* bhc_entry_name(const bhc_entry* e);
BHC_API int bhc_entry_has_hopf(const bhc_entry* e);
BHC_API int bhc_entry_has_lie(const bhc_entry* e);
/* dimension of the Hopf algebra (0 for Lie entries) */
BHC_API size_t bhc_entry_dim(const bhc_entry* e);
BHC_API const char* bhc_entry_field(const bhc_entry* e);
BHC_API const char* bhc_entry_category(const bhc_entry* e);
BHC_API size_t bhc_entry_pair_count(const bhc_entry* e);
BHC_API const char* bhc_entry_pair_name(const bhc_entry* e, size_t i);
/* by name or decimal index; BHC_E_UNKNOWN_NAME if absent */
BHC_API bhc_status bhc_entry_find_pair(const bhc_entry* e, const char* name_or_index, size_t* out);
/* canonical JSON; free with bhc_string_free */
BHC_API bhc_status bhc_entry_export(const bhc_entry* e, char** out);
BHC_API void bhc_string_free(char* s);

/* ---- reports ---- */

BHC_API bhc_status bhc_check(const bhc_entry* e, bhc_check_kind kind, bhc_report** out);
BHC_API void bhc_report_free(bhc_report* r);
BHC_API const char* bhc_report_title(const bhc_report* r);
BHC_API int bhc_report_passed(const bhc_report* r);
BHC_API size_t bhc_report_size(const bhc_report* r);
/* any out-pointer may be NULL */
BHC_API bhc_status bhc_report_entry(const bhc_report* r, size_t i, const char** name, int* passed, int* required,
                                    const char** witness, const char** detail);
BHC_API size_t bhc_report_note_count(const bhc_report* r);
BHC_API bhc_status bhc_report_note(const bhc_report* r, size_t i, const char** key, const char** value);

/* ---- cocyclic modules ---- */

/* cap 0 means the default; BHC_E_CAP_EXCEEDED if n_max > cap */
BHC_API bhc_status bhc_cocyclic_build(const bhc_entry* e, bhc_builder b, size_t pair, unsigned n_max, unsigned cap,
                                      bhc_cocyclic** out);
BHC_API void bhc_cocyclic_free(bhc_cocyclic* c);
BHC_API unsigned bhc_cocyclic_max_degree(const bhc_cocyclic* c);
BHC_API size_t bhc_cocyclic_dim(const bhc_cocyclic* c, unsigned n);
BHC_API bhc_status bhc_cocyclic_verify(const bhc_cocyclic* c, bhc_report** out);
/* τ_n^{n+1} against (ψ_{H^{n-1},H})^n, and whether τ_n^{n+1} = id */
BHC_API bhc_status bhc_cocyclic_tau_power(const bhc_cocyclic* c, unsigned n, int* equal, int* is_identity);
BHC_API bhc_status bhc_cocyclic_restrict(const bhc_cocyclic* c, bhc_cocyclic** out);

/* ---- cohomology ---- */

/* dims[0..n_max]; cap 0 means the default */
BHC_API bhc_status bhc_cohomology(const bhc_entry* e, bhc_theory t, size_t pair, unsigned n_max, unsigned cap,
                                  size_t* dims);
/* HC^n against Σ_{i ≤ n, i ≡ n} HH^i; each array has n_max + 1 slots */
BHC_API bhc_status bhc_decomposition(const bhc_entry* e, unsigned n_max, unsigned cap, size_t* hc, size_t* hh,
                                     size_t* partial_sums, int* agree);

/* ---- super Lie algebras ---- */

BHC_API bhc_status bhc_lie_homology(const bhc_entry* e, unsigned n_max, unsigned cap, size_t* dims);
/* truncation 0 means max(2, n_max) */
BHC_API bhc_status bhc_lie_ba_check(const bhc_entry* e, unsigned n_max, unsigned truncation, unsigned cap,
                                    bhc_report** out);
BHC_API bhc_status bhc_lie_compare(const bhc_entry* e, unsigned n_max, unsigned cap, size_t* hc, size_t* lie,
                                   size_t* partial_sums, int* agree);

#ifdef __cplusplus
}
#endif

#endif
