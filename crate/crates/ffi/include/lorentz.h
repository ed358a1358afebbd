/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef LORENTZ_H
#define LORENTZ_H

#include <stddef.h>
#include <stdint.h>

typedef enum LvStatus {
  LV_STATUS_OK = 0,
  LV_STATUS_NULL_POINTER = 1,
  LV_STATUS_INVALID_ARGUMENT = 2,
  LV_STATUS_PARSE = 3,
  LV_STATUS_NOT_SYMMETRIC = 4,
  LV_STATUS_UNSUPPORTED = 5,
  LV_STATUS_INTERNAL = 6,
  LV_STATUS_PANIC = 7,
} LvStatus;

typedef enum LvVerdictTag {
  LV_VERDICT_TAG_FOUND = 0,
  LV_VERDICT_TAG_NONE = 1,
  LV_VERDICT_TAG_UNDETERMINED = 2,
} LvVerdictTag;

// An algebra so(p,q).
typedef struct LvAlgebra LvAlgebra;

// A dense matrix of exact rationals.
typedef struct LvMatrix LvMatrix;

typedef struct LvSignature {
  size_t positive;
  size_t negative;
  size_t zero;
} LvSignature;

typedef struct LvVerdict {
  enum LvVerdictTag tag;
  // Dimension of the space of invariant symmetric forms.
  size_t form_space_dim;
  size_t quotient_dim;
} LvVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after a success.
// The pointer stays valid until the next call into this library on the thread.
const char *lv_last_error_message(void);

// Creates so(p,q) with `p + q >= 2`.
//
// # Safety
// `out` must be a valid pointer to writable storage.
enum LvStatus lv_algebra_new_so(uint32_t p, uint32_t q, struct LvAlgebra **out);

// # Safety
// `alg` must come from [`lv_algebra_new_so`] and not be freed twice; null is ignored.
void lv_algebra_free(struct LvAlgebra *alg);

// # Safety
// `alg` must be a live handle and `out` writable.
enum LvStatus lv_algebra_dim(const struct LvAlgebra *alg, size_t *out);

// Killing form in the standard basis, as a new matrix handle.
//
// # Safety
// `alg` must be a live handle and `out` writable.
enum LvStatus lv_killing_form(const struct LvAlgebra *alg, struct LvMatrix **out);

// Parses `"rows cols"` followed by the entries, e.g. `"2 2\n1 0\n0 -1/2"`.
//
// # Safety
// `text` must be a nul-terminated string and `out` writable.
enum LvStatus lv_matrix_from_text(const char *text, struct LvMatrix **out);

// Text form of a matrix; release with [`lv_string_free`].
//
// # Safety
// `m` must be a live handle and `out` writable.
enum LvStatus lv_matrix_to_text(const struct LvMatrix *m, char **out);

// # Safety
// `m` and the out pointers must be valid.
enum LvStatus lv_matrix_shape(const struct LvMatrix *m, size_t *rows, size_t *cols);

// # Safety
// `m` must come from this library and not be freed twice; null is ignored.
void lv_matrix_free(struct LvMatrix *m);

// # Safety
// `s` must be a string returned by this library and not freed twice; null is ignored.
void lv_string_free(char *s);

// Inertia of a symmetric matrix.
//
// # Safety
// `m` must be a live handle and `out` writable.
enum LvStatus lv_matrix_signature(const struct LvMatrix *m, struct LvSignature *out);

// Decides whether `alg / h` carries an invariant Minkowski form, for a
// catalog subalgebra named `h_name` (for instance `"so(1,4)"`).
//
// # Safety
// `alg` must be a live handle, `h_name` nul-terminated and `out` writable.
enum LvStatus lv_quotient_verdict(const struct LvAlgebra *alg,
                                  const char *h_name,
                                  struct LvVerdict *out);

// Full check report as JSON; release with [`lv_string_free`].
//
// # Safety
// `out` must be writable.
enum LvStatus lv_run_all_json(uint32_t max_n, uint64_t seed, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LORENTZ_H */
