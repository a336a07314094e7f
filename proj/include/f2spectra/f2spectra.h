#ifndef F2SPECTRA_H
#define F2SPECTRA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(F2S_BUILDING_LIBRARY)
#    define F2S_API __declspec(dllexport)
#  else
#    define F2S_API __declspec(dllimport)
#  endif
#else
#  define F2S_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every call returning f2s_status leaves a message in f2s_last_error() on failure.
   The message is per thread and stays valid until the next failing call. */
typedef enum f2s_status {
  F2S_OK = 0,
  F2S_E_INVALID_ARGUMENT = 1,
  F2S_E_UNKNOWN_SPEC = 2,
  F2S_E_DIMENSION = 3,
  F2S_E_PARSE = 4,
  F2S_E_IO = 5,
  F2S_E_NUMERIC = 6,
  F2S_E_LIMIT = 7,
  F2S_E_INTERNAL = 8
} f2s_status;

typedef struct f2s_generator f2s_generator;
typedef struct f2s_matrix f2s_matrix;
typedef struct f2s_spectrum f2s_spectrum;
typedef struct f2s_poly f2s_poly;
typedef struct f2s_trace f2s_trace;

F2S_API const char* f2s_version(void);
F2S_API const char* f2s_last_error(void);
F2S_API const char* f2s_status_name(f2s_status s);

/* ---- generator specs ---- */

typedef struct f2s_spec_info {
  unsigned w;
  unsigned n;
  unsigned m;
  unsigned r;
  unsigned k; /* state dimension */
  int has_lung;
} f2s_spec_info;

F2S_API size_t f2s_spec_count(void);
F2S_API f2s_status f2s_spec_name(size_t index, const char** name);
F2S_API f2s_status f2s_spec_info_get(const char* spec, f2s_spec_info* out);

/* ---- generators ---- */

F2S_API f2s_status f2s_generator_create(const char* spec, uint64_t seed, f2s_generator** out);
/* All-zero state; use f2s_generator_set_state to load one. */
F2S_API f2s_status f2s_generator_create_zero(const char* spec, f2s_generator** out);
F2S_API f2s_status f2s_generator_from_seed_file(const char* spec, const char* path, f2s_generator** out);
F2S_API void f2s_generator_destroy(f2s_generator* g);

F2S_API f2s_status f2s_generator_next_word(f2s_generator* g, uint64_t* out);
F2S_API f2s_status f2s_generator_next_real(f2s_generator* g, double* out);
F2S_API f2s_status f2s_generator_step(f2s_generator* g, uint64_t count);

/* Canonical k-bit state packed in 64-bit limbs, bit i in limb i/64 at position i%64. */
F2S_API size_t f2s_generator_state_limbs(const f2s_generator* g);
F2S_API f2s_status f2s_generator_get_state(const f2s_generator* g, uint64_t* limbs, size_t nlimbs);
F2S_API f2s_status f2s_generator_set_state(f2s_generator* g, const uint64_t* limbs, size_t nlimbs);

/* distance: decimal, 0x-hex, "2^k", "2^k-d" or "2^k+d". Distances beyond 64 bits on
   large generators need extended != 0. */
F2S_API f2s_status f2s_generator_jump(f2s_generator* g, const char* distance, int extended);
F2S_API f2s_status f2s_generator_jump_back(f2s_generator* g, const char* distance);
/* path "-" writes to stdout. comment may be NULL. */
F2S_API f2s_status f2s_generator_write_seed_file(const f2s_generator* g, const char* path, const char* comment);

/* A generator holding the state d steps before the unit state e_1. */
F2S_API f2s_status f2s_find_low_weight_state(const char* spec, const char* d, int extended, f2s_generator** out);

/* ---- GF(2) matrices ---- */

typedef enum f2s_layout {
  F2S_LAYOUT_TRANSITION = 0, /* B with x' = B x */
  F2S_LAYOUT_PROBE = 1       /* row i is the image of e_i, i.e. B transposed */
} f2s_layout;

typedef enum f2s_matrix_format { F2S_FORMAT_TEXT = 0, F2S_FORMAT_BINARY = 1 } f2s_matrix_format;

/* threads = 0 picks F2SPECTRA_THREADS or the hardware concurrency. */
F2S_API f2s_status f2s_matrix_extract(const char* spec, f2s_layout layout, unsigned threads, f2s_matrix** out);
F2S_API f2s_status f2s_matrix_read(const char* path, f2s_matrix_format format, f2s_matrix** out);
F2S_API f2s_status f2s_matrix_write(const f2s_matrix* m, const char* path, f2s_matrix_format format);
F2S_API void f2s_matrix_destroy(f2s_matrix* m);

F2S_API f2s_status f2s_matrix_dims(const f2s_matrix* m, size_t* rows, size_t* cols);
F2S_API f2s_status f2s_matrix_get(const f2s_matrix* m, size_t i, size_t j, int* bit);
F2S_API f2s_status f2s_matrix_rank(const f2s_matrix* m, size_t* rank);
/* in and out hold cols and rows bits respectively, packed as generator states. */
F2S_API f2s_status f2s_matrix_apply(const f2s_matrix* m, const uint64_t* in, size_t in_limbs, uint64_t* out,
                                    size_t out_limbs);
F2S_API f2s_status f2s_matrix_transpose(const f2s_matrix* m, f2s_matrix** out);
F2S_API f2s_status f2s_matrix_power(const f2s_matrix* m, uint64_t e, f2s_matrix** out);
/* Nonzero word blocks in the rows feeding the newest word; m must be a transition matrix of spec. */
F2S_API f2s_status f2s_matrix_block_count(const char* spec, const f2s_matrix* m, unsigned* count);

/* ---- spectra ---- */

typedef struct f2s_entropy {
  double h;
  double h_per_bit;
  double min_modulus;
  double max_modulus;
  size_t count_inside;
  size_t count_outside;
} f2s_entropy;

/* backend: "eigen" (default, also for NULL) or "lapacke". dgeev results that fail a trace check
   give F2S_E_NUMERIC. Dimensions above 4096 need extended != 0. */
F2S_API f2s_status f2s_spectrum_compute(const f2s_matrix* m, const char* backend, int extended, f2s_spectrum** out);
/* Eigenvalues of the real n-th power of m, computed by repeated real products. */
F2S_API f2s_status f2s_spectrum_of_real_power(const f2s_matrix* m, unsigned n, const char* backend, int extended,
                                              f2s_spectrum** out);
F2S_API f2s_status f2s_spectrum_power(const f2s_spectrum* s, long long n, f2s_spectrum** out);
F2S_API void f2s_spectrum_destroy(f2s_spectrum* s);

F2S_API size_t f2s_spectrum_size(const f2s_spectrum* s);
F2S_API long long f2s_spectrum_exponent(const f2s_spectrum* s);
/* "lapacke" or "eigen": the solver that produced the values. */
F2S_API const char* f2s_spectrum_solver(const f2s_spectrum* s);
F2S_API f2s_status f2s_spectrum_get(const f2s_spectrum* s, size_t i, double* re, double* im);
F2S_API f2s_status f2s_spectrum_entropy(const f2s_spectrum* s, unsigned w, f2s_entropy* out);
F2S_API f2s_status f2s_spectrum_radius(const f2s_spectrum* s, double* out);
/* Largest distance under the optimal one-to-one matching of the two spectra. */
F2S_API f2s_status f2s_spectrum_distance(const f2s_spectrum* a, const f2s_spectrum* b, double* out);
F2S_API f2s_status f2s_spectrum_conjugate_paired(const f2s_spectrum* s, double tol, int* paired);
/* CSV columns re,im,modulus and bin_low,bin_high,count. path "-" writes to stdout. */
F2S_API f2s_status f2s_spectrum_write_csv(const f2s_spectrum* s, const char* path);
F2S_API f2s_status f2s_spectrum_write_histogram(const f2s_spectrum* s, unsigned bins, const char* path);

/* ---- minimal polynomials ---- */

/* cache_dir may be NULL; F2SPECTRA_CACHE_DIR is used then, if set. */
F2S_API f2s_status f2s_minpoly_compute(const char* spec, const char* cache_dir, f2s_poly** out);
F2S_API void f2s_poly_destroy(f2s_poly* p);
F2S_API long f2s_poly_degree(const f2s_poly* p);
F2S_API size_t f2s_poly_weight(const f2s_poly* p);
/* Writes at most len bytes including the terminator; *needed gets the full size. */
F2S_API f2s_status f2s_poly_hex(const f2s_poly* p, char* buf, size_t len, size_t* needed);
F2S_API f2s_status f2s_poly_write(const f2s_poly* p, const char* spec, const char* path);

/* ---- characteristic polynomial identities ---- */

typedef struct f2s_identity_report {
  unsigned configs;
  unsigned matched;
  unsigned plus_variant_differs;
  unsigned plus_variant_agrees_mod2;
} f2s_identity_report;

/* Closed form for phi_S(t^n - t^m) on random small TGFSR blocks against an exact determinant. */
F2S_API f2s_status f2s_check_tgfsr_identity(unsigned configs, uint64_t seed, f2s_identity_report* out);
/* Closed form for the Mersenne Twister polynomial on random small parameters. */
F2S_API f2s_status f2s_check_mt_identity(unsigned configs, uint64_t seed, f2s_identity_report* out);

typedef struct f2s_mod2_report {
  int equal;
  long formula_degree;
  long minpoly_degree;
  size_t formula_weight;
  size_t minpoly_weight;
} f2s_mod2_report;

F2S_API f2s_status f2s_check_mt19937_mod2(const char* cache_dir, f2s_mod2_report* out);

/* ---- zeroland diagnostics ---- */

/* p and max_n count 32-bit words: a 64-bit step counts as two iterations. */
F2S_API f2s_status f2s_zeroland_sweep(const char* spec, unsigned p, unsigned max_n, unsigned threads,
                                      f2s_trace** out);
F2S_API f2s_status f2s_zeroland_replay_file(const char* spec, const char* seed_path, unsigned p, unsigned max_n,
                                            f2s_trace** out);
/* Replays from the generator's current state; the generator is not advanced. */
F2S_API f2s_status f2s_zeroland_replay(const f2s_generator* g, unsigned p, unsigned max_n, f2s_trace** out);
F2S_API void f2s_trace_destroy(f2s_trace* t);

F2S_API size_t f2s_trace_size(const f2s_trace* t);
F2S_API double f2s_trace_sigma(const f2s_trace* t);
F2S_API f2s_status f2s_trace_get(const f2s_trace* t, size_t i, long long* n, double* gamma);
/* *n is -1 when the trace never settles in the band. */
F2S_API f2s_status f2s_trace_balanced_time(const f2s_trace* t, double band_sigmas, long long* n);
/* First window inside the band, without the persistence requirement; -1 if none. */
F2S_API f2s_status f2s_trace_band_entry(const f2s_trace* t, double band_sigmas, long long* n);
F2S_API f2s_status f2s_trace_minimum(const f2s_trace* t, long long* n, double* gamma);
F2S_API f2s_status f2s_trace_write_csv(const f2s_trace* t, const char* path, double band_sigmas);

/* ---- timing ---- */

/* Mean wall time per next_real after a warmup of count/10 calls. */
F2S_API f2s_status f2s_bench_next_real(const char* spec, uint64_t count, double* ns_per_double);

#ifdef __cplusplus
}
#endif

#endif
