/* Copyright 2026 The Pentagram Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

/* C interface to the pentagram library. Every function returns a pg_status;
 * on failure pg_last_error() describes the problem for the calling thread.
 * Strings returned through char** are owned by the caller and released with
 * pg_string_free. Handles are released with their matching *_free. */

#ifndef PENTAGRAM_PENTAGRAM_H
#define PENTAGRAM_PENTAGRAM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PG_API __declspec(dllexport)
#else
#define PG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pg_status {
    PG_OK = 0,
    PG_ERR_INVALID_ARGUMENT = 2,
    PG_ERR_DOMAIN = 3,
    PG_ERR_INTERNAL = 4
} pg_status;

typedef enum pg_backend { PG_BACKEND_STABILIZER = 0, PG_BACKEND_STATEVECTOR = 1 } pg_backend;

typedef enum pg_question_set { PG_QUESTIONS_DISTINCT = 0, PG_QUESTIONS_ALL = 1 } pg_question_set;

typedef struct pg_strategy pg_strategy;
typedef struct pg_mpp_input pg_mpp_input;
typedef struct pg_mpp_output pg_mpp_output;
typedef struct pg_circuit pg_circuit;

PG_API const char* pg_version(void);
PG_API const char* pg_last_error(void);
PG_API void pg_string_free(char* s);

/* ---- game ---------------------------------------------------------------
 * params: (alpha1, beta1, alpha2, beta2, alpha3, beta3), each +1 or -1;
 * NULL means all +1. */

typedef struct pg_optimum {
    int64_t num; /* reduced max win probability */
    int64_t den;
    int64_t wins;
    int64_t questions;
    pg_strategy* alice; /* witness, owned by the caller */
    pg_strategy* bob;
} pg_optimum;

PG_API pg_status pg_game_brute_force(const int* params, pg_question_set questions, unsigned threads,
                                     pg_optimum* out);
PG_API pg_status pg_game_win_probability(const pg_strategy* alice, const pg_strategy* bob, const int* params,
                                         pg_question_set questions, int64_t* num, int64_t* den);
/* Plays `rounds` rounds on uniformly drawn question pairs. */
PG_API pg_status pg_game_play_classical(const pg_strategy* alice, const pg_strategy* bob, const int* params,
                                        pg_question_set questions, uint64_t rounds, uint64_t seed, uint64_t* wins);
PG_API pg_status pg_game_play_quantum(const int* params, uint64_t rounds, uint64_t seed, uint64_t* wins);
/* Deterministic certificate of the quantum strategy over every distinct pair. */
PG_API pg_status pg_game_certify_quantum(const int* params, int* certified);

PG_API pg_status pg_strategy_from_json(const char* json, pg_strategy** out);
PG_API pg_status pg_strategy_to_json(const pg_strategy* s, char** json);
PG_API void pg_strategy_free(pg_strategy* s);

/* ---- mpp ---------------------------------------------------------------- */

PG_API pg_status pg_mpp_input_from_json(const char* json, pg_mpp_input** out);
PG_API pg_status pg_mpp_input_from_bits(const char* bits, pg_mpp_input** out);
/* Uniform member of S; `stream` selects an independent stream for `seed`. */
PG_API pg_status pg_mpp_input_sample(size_t n, uint64_t seed, uint64_t stream, pg_mpp_input** out);
PG_API pg_status pg_mpp_input_to_json(const pg_mpp_input* x, char** json);
PG_API pg_status pg_mpp_input_to_bits(const pg_mpp_input* x, char** bits);
PG_API size_t pg_mpp_input_n(const pg_mpp_input* x);
/* Fails with PG_ERR_INVALID_ARGUMENT when the input is not in S. */
PG_API pg_status pg_mpp_input_subset(const pg_mpp_input* x, size_t* k, size_t* l);
PG_API void pg_mpp_input_free(pg_mpp_input* x);

PG_API pg_status pg_mpp_output_from_bits(const char* bits, pg_mpp_output** out);
PG_API pg_status pg_mpp_output_to_bits(const pg_mpp_output* z, char** bits);
PG_API void pg_mpp_output_free(pg_mpp_output* z);

PG_API pg_status pg_mpp_run(const pg_mpp_input* x, pg_backend backend, uint64_t seed, uint64_t stream,
                            pg_mpp_output** out);
PG_API pg_status pg_mpp_extract_params(const pg_mpp_output* z, size_t k, size_t l, int params[6]);
PG_API pg_status pg_mpp_verify(const pg_mpp_input* x, const pg_mpp_output* z, int* relation, int* support);
/* JSON object {"<bits>": probability, ...}; dense backend, n <= 3. */
PG_API pg_status pg_mpp_exact_distribution(const pg_mpp_input* x, char** json);
/* JSON {"num_qubits":6n,"depth":d,"gates":[["H",0],["CNOT",0,3],...]}. */
PG_API pg_status pg_mpp_circuit_json(const pg_mpp_input* x, char** json);

/* ---- lightcone ---------------------------------------------------------- */

typedef struct pg_circuit_info {
    size_t data_inputs;
    size_t random_inputs;
    size_t gates;
    size_t outputs;
    size_t depth;
    size_t max_fan_in;
} pg_circuit_info;

typedef struct pg_interval {
    double lo;
    double hi;
    double half_width;
} pg_interval;

typedef struct pg_adversary_report {
    uint64_t samples;
    uint64_t successes;
    uint64_t samples_given_e;
    uint64_t successes_given_e;
    int64_t prob_e_num;
    int64_t prob_e_den;
    double success_rate;
    double success_rate_given_e;
    pg_interval ci;         /* 99% Wilson */
    pg_interval ci_given_e; /* 99% Wilson */
} pg_adversary_report;

PG_API pg_status pg_circuit_from_json(const char* json, pg_circuit** out);
PG_API pg_status pg_circuit_to_json(const pg_circuit* c, char** json);
PG_API pg_status pg_circuit_random(size_t n, size_t fan_in, size_t depth, size_t random_inputs, uint64_t seed,
                                   pg_circuit** out);
/* kind: "identity", "constant0", "constant1" or "parity". */
PG_API pg_status pg_circuit_builtin(const char* kind, size_t n, pg_circuit** out);
/* Lookup-gate circuit answering every block with the given strategies. */
PG_API pg_status pg_circuit_from_strategies(size_t n, const pg_strategy* alice, const pg_strategy* bob,
                                            pg_circuit** out);
PG_API pg_status pg_circuit_info_get(const pg_circuit* c, pg_circuit_info* info);
PG_API void pg_circuit_free(pg_circuit* c);

/* Sorted output positions; `outputs` may be NULL to query the count only. */
PG_API pg_status pg_lightcone(const pg_circuit* c, size_t input_bit, size_t* outputs, size_t capacity,
                              size_t* count);
PG_API pg_status pg_correlated_exact(const pg_circuit* c, size_t input_bit, size_t output_bit, int* correlated);
PG_API pg_status pg_event_e(const pg_circuit* c, size_t n, size_t k, size_t l, int* holds);
PG_API pg_status pg_prob_e(const pg_circuit* c, size_t n, int64_t* num, int64_t* den, uint64_t* bad_pairs);
PG_API pg_status pg_adversary(const pg_circuit* c, size_t n, uint64_t samples, uint64_t seed, unsigned threads,
                              pg_adversary_report* out);

PG_API pg_status pg_bound_eq1(double n, double fan_in, double p, double* out);
PG_API pg_status pg_bound_eq3(double n, double fan_in, double p, double* out);
PG_API pg_status pg_prop5_lower_bound(size_t n, size_t fan_in, size_t depth, double* out);

#ifdef __cplusplus
}
#endif

#endif /* PENTAGRAM_PENTAGRAM_H */
