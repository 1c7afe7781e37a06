/* C interface to the number-wall engine. */
#ifndef NUMWALL_H
#define NUMWALL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NW_API __declspec(dllexport)
#else
#define NW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nw_status {
    NW_OK = 0,
    NW_E_INVALID_ARGUMENT,
    NW_E_NOT_PRIME,
    NW_E_REDUCIBLE_MODULUS,
    NW_E_DEGREE_MISMATCH,
    NW_E_DIVISION_BY_ZERO,
    NW_E_FIELD_MISMATCH,
    NW_E_INSUFFICIENT_PRECISION,
    NW_E_REDUCIBLE_BASE,
    NW_E_ZERO_ARGUMENT,
    NW_E_NOT_ENOUGH_COEFFICIENTS,
    NW_E_OUT_OF_SUPPORT,
    NW_E_INTERNAL_INCONSISTENCY,
    NW_E_NON_SQUARE_ZERO_REGION,
    NW_E_NOT_COMPLETE,
    NW_E_NON_GEOMETRIC_EDGE,
    NW_E_TOO_SHORT,
    NW_E_EMBEDDING_INCOMPLETE,
    NW_E_INSUFFICIENT_PREFIX,
    NW_E_INVALID_PORTION,
    NW_E_OUT_OF_REGIME,
    NW_E_UNSUPPORTED_SHAPE_PAIR,
    NW_E_NO_SEED_WITH_BLADE,
    NW_E_SPACE_TOO_LARGE,
    NW_E_OVERLAPPING_PORTIONS,
    NW_E_PARSE_ERROR,
    NW_E_IO_ERROR,
    NW_E_UNKNOWN = 99
} nw_status;

typedef struct nw_field nw_field;
typedef struct nw_seq nw_seq;
typedef struct nw_wall nw_wall;

/* Message of the last failed call on this thread; never NULL. */
NW_API const char* nw_last_error(void);
NW_API const char* nw_status_name(int status);
NW_API const char* nw_version(void);

/* Strings and buffers returned by the library. */
NW_API void nw_string_free(char* s);
NW_API void nw_bytes_free(unsigned char* b);

/* Fields: "p", "p^k" or "p^k/modulus-code". */
NW_API int nw_field_parse(const char* spec, nw_field** out);
NW_API void nw_field_free(nw_field* f);
NW_API uint32_t nw_field_q(const nw_field* f);
NW_API int nw_field_name(const nw_field* f, char** out);
NW_API int nw_field_add(const nw_field* f, uint32_t a, uint32_t b, uint32_t* out);
NW_API int nw_field_mul(const nw_field* f, uint32_t a, uint32_t b, uint32_t* out);
NW_API int nw_field_inv(const nw_field* f, uint32_t a, uint32_t* out);

/* Sequences s_1..s_r of element codes. */
NW_API int nw_seq_from_codes(const nw_field* f, const uint32_t* codes, size_t n, nw_seq** out);
/* Integer symbols embedded into the field (reduced mod p for prime fields). */
NW_API int nw_seq_from_symbols(const nw_field* f, const int64_t* symbols, size_t n, nw_seq** out);
NW_API int nw_seq_paper_folding(const nw_field* f, unsigned level, int64_t length, nw_seq** out);
NW_API int nw_seq_random(const nw_field* f, uint64_t seed, int64_t length, nw_seq** out);
NW_API void nw_seq_free(nw_seq* s);
NW_API size_t nw_seq_length(const nw_seq* s);
NW_API int nw_seq_get(const nw_seq* s, int64_t i, uint32_t* out);

/* Walls. method 0 = frame recurrence, 1 = determinant oracle. */
NW_API int nw_wall_build(const nw_seq* s, int method, nw_wall** out);
NW_API void nw_wall_free(nw_wall* w);
NW_API int nw_wall_extend(nw_wall* w, uint32_t code);
NW_API int64_t nw_wall_length(const nw_wall* w);
NW_API int64_t nw_wall_depth(const nw_wall* w);
NW_API int nw_wall_get(const nw_wall* w, int64_t m, int64_t n, uint32_t* out);
NW_API int nw_wall_equal(const nw_wall* a, const nw_wall* b, int* out);
NW_API int nw_wall_csv(const nw_wall* w, char** out);
NW_API int nw_wall_windows_json(const nw_wall* w, char** out);
NW_API int nw_wall_ppm(const nw_wall* w, unsigned char** out, size_t* len);

/* Runs a JSON RunConfig; writes any requested artifacts and returns the report
   (a JSON object, or JSON lines for census). verdict: 0 pass/match, 1 mismatch/violation. */
NW_API int nw_run(const char* config_json, char** report, int* verdict);

#ifdef __cplusplus
}
#endif

#endif
