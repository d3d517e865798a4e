/* C interface to the scarfrel library: monomial ideals, Scarf complexes and
 * inclusion-exclusion reliability identities for coherent multistate systems.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_destroy function. Functions that can fail return a
 * scarfrel_status; on failure scarfrel_last_error() returns a message for the
 * calling thread. Generator and face-member indices are 1-based.
 */
#ifndef SCARFREL_H_
#define SCARFREL_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SCARFREL_BUILDING)
#    define SCARFREL_API __declspec(dllexport)
#  else
#    define SCARFREL_API __declspec(dllimport)
#  endif
#else
#  define SCARFREL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum scarfrel_status {
  SCARFREL_OK = 0,
  SCARFREL_E_INVALID_ARGUMENT = 1,
  SCARFREL_E_DIMENSION_MISMATCH = 2,
  SCARFREL_E_EMPTY_INPUT = 3,
  SCARFREL_E_NOT_GENERIC = 4,
  SCARFREL_E_TOO_LARGE = 5,
  SCARFREL_E_OVERFLOW = 6,
  SCARFREL_E_INVALID_SPEC = 7,
  SCARFREL_E_UNREACHABLE_CUTOFF = 8,
  SCARFREL_E_INTERNAL = 9,
  SCARFREL_E_BUFFER_TOO_SMALL = 10
} scarfrel_status;

typedef enum scarfrel_complex_kind {
  SCARFREL_TAYLOR = 0,
  SCARFREL_SCARF = 1,
  SCARFREL_SCARF_DEFORMED = 2
} scarfrel_complex_kind;

typedef enum scarfrel_bound_kind {
  SCARFREL_BOUND_UPPER = 0,
  SCARFREL_BOUND_LOWER = 1,
  SCARFREL_BOUND_EXACT = 2
} scarfrel_bound_kind;

typedef struct scarfrel_ideal scarfrel_ideal;
typedef struct scarfrel_complex scarfrel_complex;
typedef struct scarfrel_system scarfrel_system;
typedef struct scarfrel_spec scarfrel_spec;

SCARFREL_API const char* scarfrel_version(void);
SCARFREL_API const char* scarfrel_status_name(scarfrel_status status);
/* Message of the last failure on this thread; "" when none. */
SCARFREL_API const char* scarfrel_last_error(void);
/* Frees strings returned through char** out-parameters. */
SCARFREL_API void scarfrel_string_free(char* text);

/* ---- monomial ideals ---------------------------------------------------- */

/* `coords` holds `count` row-major vectors of length `dimension`. The list is
 * minimalized: divisible generators and duplicates are dropped, the rest keep
 * their input order. */
SCARFREL_API scarfrel_status scarfrel_ideal_create(size_t dimension,
                                                   const uint32_t* coords,
                                                   size_t count,
                                                   scarfrel_ideal** out);
SCARFREL_API void scarfrel_ideal_destroy(scarfrel_ideal* ideal);
SCARFREL_API size_t scarfrel_ideal_dimension(const scarfrel_ideal* ideal);
SCARFREL_API size_t scarfrel_ideal_generator_count(const scarfrel_ideal* ideal);
/* Copies generator `index` (1-based) into `out[0..dimension)`. */
SCARFREL_API scarfrel_status scarfrel_ideal_generator(
    const scarfrel_ideal* ideal, size_t index, uint32_t* out);
SCARFREL_API scarfrel_status scarfrel_ideal_contains(
    const scarfrel_ideal* ideal, const uint32_t* beta, int* out);
SCARFREL_API int scarfrel_ideal_is_generic(const scarfrel_ideal* ideal);
/* Dense-rank deformation; `out` receives generator_count * dimension values. */
/* descending_ties != 0 separates equal exponents with the higher generator
 * index first instead of the lower. */
SCARFREL_API scarfrel_status scarfrel_ideal_deform(const scarfrel_ideal* ideal,
                                                   size_t v,
                                                   int descending_ties,
                                                   uint32_t* out);

/* ---- labelled complexes ------------------------------------------------- */

SCARFREL_API scarfrel_status scarfrel_taylor_complex(
    const scarfrel_ideal* ideal, scarfrel_complex** out);
/* Fails with SCARFREL_E_NOT_GENERIC on non-generic ideals. */
SCARFREL_API scarfrel_status scarfrel_scarf_complex(
    const scarfrel_ideal* ideal, scarfrel_complex** out);
/* v == 0 selects generator_count + 1. */
SCARFREL_API scarfrel_status scarfrel_deform_and_scarf(
    const scarfrel_ideal* ideal, size_t v, int descending_ties,
    scarfrel_complex** out);
SCARFREL_API void scarfrel_complex_destroy(scarfrel_complex* complex);
SCARFREL_API scarfrel_complex_kind scarfrel_complex_kind_of(
    const scarfrel_complex* complex);
SCARFREL_API size_t scarfrel_complex_face_count(const scarfrel_complex* complex);
SCARFREL_API size_t scarfrel_complex_facet_count(
    const scarfrel_complex* complex);
SCARFREL_API size_t scarfrel_complex_max_cardinality(
    const scarfrel_complex* complex);
/* Face `face` (0-based, canonical order). `members` needs room for
 * `capacity` entries; `label` for dimension entries. Either may be NULL. */
SCARFREL_API scarfrel_status scarfrel_complex_face(
    const scarfrel_complex* complex, size_t face, size_t* members,
    size_t capacity, size_t* cardinality, uint32_t* label);
/* Coefficient of x^beta in the Hilbert series numerator / prod(1 - x_i). */
SCARFREL_API scarfrel_status scarfrel_complex_pointwise_coefficient(
    const scarfrel_complex* complex, const uint32_t* beta, long long* out);

/* ---- systems and reliability -------------------------------------------- */

/* `probs` concatenates every component's level distribution. */
SCARFREL_API scarfrel_status scarfrel_system_create(size_t components,
                                                    const size_t* levels,
                                                    const double* probs,
                                                    scarfrel_system** out);
SCARFREL_API void scarfrel_system_destroy(scarfrel_system* system);
SCARFREL_API scarfrel_status scarfrel_system_survival(
    const scarfrel_system* system, size_t component, size_t level,
    double* out);
SCARFREL_API scarfrel_status scarfrel_system_orthant_prob(
    const scarfrel_system* system, const uint32_t* alpha, double* out);

SCARFREL_API scarfrel_status scarfrel_reliability_identity(
    const scarfrel_system* system, const scarfrel_complex* complex,
    double* out);
SCARFREL_API scarfrel_status scarfrel_tube_bound(
    const scarfrel_system* system, const scarfrel_complex* complex,
    size_t depth, double* value, scarfrel_bound_kind* kind);
SCARFREL_API scarfrel_status scarfrel_bonferroni_bound(
    const scarfrel_system* system, const scarfrel_complex* taylor,
    size_t depth, double* value, scarfrel_bound_kind* kind);
SCARFREL_API scarfrel_status scarfrel_brute_force_reliability(
    const scarfrel_system* system, const scarfrel_ideal* ideal, double* out);

/* ---- spec files and reports --------------------------------------------- */

SCARFREL_API scarfrel_status scarfrel_spec_parse(const char* json_text,
                                                 scarfrel_spec** out);
SCARFREL_API scarfrel_status scarfrel_spec_load(const char* path,
                                                scarfrel_spec** out);
SCARFREL_API void scarfrel_spec_destroy(scarfrel_spec* spec);
/* New handles holding copies of the spec's ideal and system. */
SCARFREL_API scarfrel_status scarfrel_spec_ideal(const scarfrel_spec* spec,
                                                 scarfrel_ideal** out);
SCARFREL_API scarfrel_status scarfrel_spec_system(const scarfrel_spec* spec,
                                                  scarfrel_system** out);

typedef struct scarfrel_run_options {
  int json;
  size_t deformation_v;   /* 0: spec file value or generator_count + 1 */
  int ties;               /* 0: spec file value, 1: ascending, 2: descending */
  const size_t* depths;   /* NULL/0: all depths */
  size_t depth_count;
  uint64_t seed;
  size_t selftest_cases;  /* 0: default */
} scarfrel_run_options;

/* Runs "scarf", "reliability", "bounds", "oracle" or "compare" and returns the
 * rendered report in `*out` (free with scarfrel_string_free). */
SCARFREL_API scarfrel_status scarfrel_run(const scarfrel_spec* spec,
                                          const char* command,
                                          const scarfrel_run_options* options,
                                          char** out);
/* Randomized identity/bounds self-check; `passed` receives 0 or 1. */
SCARFREL_API scarfrel_status scarfrel_selftest(
    const scarfrel_run_options* options, char** out, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* SCARFREL_H_ */
