/*
 * theaterperm - permutation combinatorics for the theater seating model:
 * the Foata correspondence, b-anomaly detection, seating admissibility,
 * bounded-cycle counting/enumeration/sampling and seating simulation.
 *
 * C API over an opaque-handle core. Every function that can fail returns a
 * tp_status; the most recent failure message for the calling thread is
 * available via tp_last_error(). Strings returned through char** are heap
 * allocated and must be released with tp_string_free(); handles have their
 * matching *_free() functions. Positions and values are 1-based throughout.
 */

#ifndef THEATERPERM_H
#define THEATERPERM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TP_BUILD_SHARED)
#    define TP_API __declspec(dllexport)
#  else
#    define TP_API __declspec(dllimport)
#  endif
#else
#  define TP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tp_status {
    TP_OK = 0,
    TP_ERR_PARSE = 1,     /* malformed permutation/cycle text */
    TP_ERR_ARGUMENT = 2,  /* argument outside its contract (b < 1, bad position, ...) */
    TP_ERR_TOO_LARGE = 3, /* refused: exhaustive work beyond the feasibility cap */
    TP_ERR_STATE = 4,     /* operation not applicable (e.g. jammed trace) */
    TP_ERR_NOMEM = 5,
    TP_ERR_INTERNAL = 6
} tp_status;

typedef struct tp_perm tp_perm;                    /* permutation of {1..L} */
typedef struct tp_count_table tp_count_table;      /* memoized D(L,b) table */
typedef struct tp_class_iter tp_class_iter;        /* lazy class enumeration */
typedef struct tp_trace_set tp_trace_set;          /* exhaustive seating traces */
typedef struct tp_verify_report tp_verify_report;  /* invariant suite results */

/* Library metadata. */
TP_API const char* tp_version(void);
TP_API const char* tp_rng_algorithm(void);

/* Last failure message for this thread; empty string if none. */
TP_API const char* tp_last_error(void);

TP_API void tp_string_free(char* s);

/* ---- permutations ------------------------------------------------------ */

/* Accepts separated integers ("3,5,9,..." / "3 5 9 ...") or, for L <= 9, a
 * compact digit string ("359..."). */
TP_API tp_status tp_perm_parse(const char* text, tp_perm** out);
TP_API tp_status tp_perm_from_word(const uint32_t* word, uint32_t size, tp_perm** out);
TP_API tp_status tp_perm_identity(uint32_t size, tp_perm** out);
TP_API void tp_perm_free(tp_perm* p);

TP_API uint32_t tp_perm_size(const tp_perm* p);
/* s(position); 0 on range error. */
TP_API uint32_t tp_perm_at(const tp_perm* p, uint32_t position);
/* Copies the one-line word into caller storage of length tp_perm_size(). */
TP_API tp_status tp_perm_word(const tp_perm* p, uint32_t* out);
TP_API int tp_perm_equal(const tp_perm* a, const tp_perm* b);

/* style: 0 = comma separated, 1 = compact (L <= 9 only), 2 = auto. */
TP_API tp_status tp_perm_format(const tp_perm* p, int style, char** out);

TP_API tp_status tp_perm_invert(const tp_perm* p, tp_perm** out);
TP_API tp_status tp_perm_rotate180(const tp_perm* p, tp_perm** out);
TP_API tp_status tp_perm_complement(const tp_perm* p, tp_perm** out);

/* format: 0 = ascii grid (L <= 99), 1 = standalone SVG. */
TP_API tp_status tp_render_diagram(const tp_perm* p, int format, char** out);

/* ---- Foata correspondence ---------------------------------------------- */

TP_API tp_status tp_foata_forward(const tp_perm* p, tp_perm** out);
TP_API tp_status tp_foata_inverse(const tp_perm* w, tp_perm** out);

/* Canonical cycle decomposition, flattened: elements[] receives the L
 * elements in canonical order and lengths[] the cycle sizes; *n_cycles the
 * number of cycles. Both arrays must hold tp_perm_size() entries. */
TP_API tp_status tp_cycle_decomposition(const tp_perm* p, uint32_t* elements,
                                        uint32_t* lengths, uint32_t* n_cycles);
/* "[5 2][7 6 4][8][9 1 3]"; compact != 0 gives "[52][764][8][913]" (L <= 9). */
TP_API tp_status tp_cycles_format(const tp_perm* p, int compact, char** out);

/* Parses bracketed cycle notation back into the permutation it describes.
 * Elements are space/comma separated; a digit run inside brackets is read
 * one element per digit, so compact writing only reaches L <= 9. */
TP_API tp_status tp_cycles_parse(const char* text, tp_perm** out);

TP_API uint32_t tp_max_cycle_length(const tp_perm* p);
TP_API tp_status tp_cycle_head_of(const tp_perm* w, uint32_t position, uint32_t* out);

/* ---- anomalies and admissibility --------------------------------------- */

typedef struct tp_anomaly_witness {
    uint32_t block_start;      /* i: the block occupies positions i+1..i+b */
    uint32_t b;
    uint32_t blocker_position; /* h <= i with a_h above the whole block */
    uint32_t blocker_value;
} tp_anomaly_witness;

typedef struct tp_theater_violation {
    uint32_t block_start;      /* j: positions j+1..j+b, j+b < victim */
    uint32_t victim_position;  /* i */
} tp_theater_violation;

/* *found is 0/1; *out is filled when found. */
TP_API tp_status tp_find_anomaly_first(const tp_perm* w, uint32_t b, int* found,
                                       tp_anomaly_witness* out);
/* Writes up to capacity witnesses (pass out = NULL, capacity = 0 to count);
 * *count always receives the total number. */
TP_API tp_status tp_find_anomaly_all(const tp_perm* w, uint32_t b,
                                     tp_anomaly_witness* out, uint32_t capacity,
                                     uint32_t* count);
TP_API tp_status tp_has_anomaly(const tp_perm* w, uint32_t b, int* out);

TP_API tp_status tp_is_theater_admissible(const tp_perm* s, uint32_t b, int* admissible,
                                          tp_theater_violation* violation_out,
                                          int* has_violation);

TP_API tp_status tp_bounded_to_theater(const tp_perm* s, tp_perm** out);
TP_API tp_status tp_theater_to_bounded(const tp_perm* s, tp_perm** out);

/* ---- counting, enumeration, sampling ------------------------------------ */

#define TP_CLASS_BOUNDED_CYCLES 0
#define TP_CLASS_THEATER_ADMISSIBLE 1
#define TP_CLASS_ANOMALY_FREE 2

TP_API tp_count_table* tp_count_table_new(void);
TP_API void tp_count_table_free(tp_count_table* t);

/* D(L,b) by the memoized recurrence, as a decimal string. */
TP_API tp_status tp_count_bounded_cycles(tp_count_table* t, uint32_t length,
                                         uint32_t b, char** decimal_out);

/* Exhaustive count of one class; refuses length > cap (cap is clamped to the
 * hard limit of 12; pass 0 for the default cap of 9). */
TP_API tp_status tp_count_class_brute(uint32_t length, uint32_t b, int perm_class,
                                      uint32_t cap, char** decimal_out);

/* Lexicographic stream over the class members, same cap rules. */
TP_API tp_status tp_enumerate_begin(uint32_t length, uint32_t b, int perm_class,
                                    uint32_t cap, tp_class_iter** out);
/* 1 when a permutation was produced (caller frees it), 0 when exhausted. */
TP_API int tp_enumerate_next(tp_class_iter* it, tp_perm** out);
TP_API void tp_enumerate_free(tp_class_iter* it);

/* One uniform draw from the bounded-cycle class; deterministic per seed. */
TP_API tp_status tp_sample_bounded(uint32_t length, uint32_t b, uint64_t seed,
                                   tp_perm** out);

/* ---- theater seating simulation ----------------------------------------- */

/* occupancy[x-1] nonzero marks seat x taken; reachable[] (same length)
 * receives 0/1 flags for the seats a next spectator could still take. */
TP_API tp_status tp_reachable_seats(const uint8_t* occupancy, uint32_t length,
                                    uint32_t b, uint8_t* reachable);

/* Every choice sequence that fills the row (length <= 8). */
TP_API tp_status tp_exhaustive_full_occupancy(uint32_t length, uint32_t b,
                                              tp_trace_set** out);
TP_API uint32_t tp_trace_set_size(const tp_trace_set* ts);
/* Copies trace #index (0-based) into choices[] (length entries). */
TP_API tp_status tp_trace_set_get(const tp_trace_set* ts, uint32_t index,
                                  uint32_t* choices);
TP_API void tp_trace_set_free(tp_trace_set* ts);

/* One seeded run under the uniform_reachable policy. choices[] must hold
 * `length` entries; *n_seated receives how many spectators sat down and
 * *full whether the row filled. */
TP_API tp_status tp_simulate_random(uint32_t length, uint32_t b, uint64_t seed,
                                    uint32_t* choices, uint32_t* n_seated, int* full);

/* Occupancy-time encoding of a full seat-choice sequence (the word inverse). */
TP_API tp_status tp_trace_time_permutation(const uint32_t* choices, uint32_t length,
                                           tp_perm** out);

/* trials runs with seeds seed..seed+trials-1. */
TP_API tp_status tp_simulate_batch(uint32_t length, uint32_t b, uint64_t seed,
                                   uint64_t trials, uint64_t* full_count,
                                   double* mean_seated_fraction);

/* ---- verification ------------------------------------------------------- */

/* Runs the invariant suite exhaustively up to S_max_length (clamped to 9;
 * the seating-dynamics cross-checks cap themselves at L = 6). */
TP_API tp_status tp_verify_run(uint32_t max_length, tp_verify_report** out);
/* The sweep bound actually used (requests are clamped into 1..9). */
TP_API uint32_t tp_verify_max_length(const tp_verify_report* r);
TP_API uint32_t tp_verify_count(const tp_verify_report* r);
TP_API const char* tp_verify_name(const tp_verify_report* r, uint32_t index);
TP_API const char* tp_verify_range(const tp_verify_report* r, uint32_t index);
TP_API const char* tp_verify_detail(const tp_verify_report* r, uint32_t index);
TP_API int tp_verify_passed(const tp_verify_report* r, uint32_t index);
TP_API int tp_verify_all_passed(const tp_verify_report* r);
TP_API void tp_verify_report_free(tp_verify_report* r);

#ifdef __cplusplus
}
#endif

#endif /* THEATERPERM_H */
