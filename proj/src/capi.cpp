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

#include "pentagram/pentagram.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "json.hpp"
#include "pentagram/error.hpp"
#include "pentagram/game.hpp"
#include "pentagram/lightcone.hpp"
#include "pentagram/mpp.hpp"

#ifndef PENTAGRAM_VERSION
#define PENTAGRAM_VERSION "0.0.0"
#endif

struct pg_strategy {
    pentagram::game::DeterministicStrategy s;
};
struct pg_mpp_input {
    pentagram::mpp::MppInput x;
};
struct pg_mpp_output {
    pentagram::mpp::MppOutput z;
};
struct pg_circuit {
    pentagram::lightcone::ClassicalCircuit c;
};

namespace {

using namespace pentagram;

thread_local std::string g_last_error;

pg_status fail(pg_status code, const char* what) {
    g_last_error = what;
    return code;
}

template <class F>
pg_status guarded(F&& f) {
    try {
        g_last_error.clear();
        f();
        return PG_OK;
    } catch (const InvalidArgument& e) {
        return fail(PG_ERR_INVALID_ARGUMENT, e.what());
    } catch (const DomainError& e) {
        return fail(PG_ERR_DOMAIN, e.what());
    } catch (const std::bad_alloc&) {
        return fail(PG_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(PG_ERR_INTERNAL, e.what());
    }
}

template <class T>
void need(const T* p, const char* name) {
    if (p == nullptr) throw InvalidArgument(std::string(name) + " must not be NULL");
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

game::GameParams params_from(const int* p) {
    if (p == nullptr) return {};
    std::array<int, 6> v{};
    for (std::size_t i = 0; i < 6; ++i) v[i] = p[i];
    return game::GameParams(v);
}

game::QuestionSet questions_from(pg_question_set q) {
    switch (q) {
        case PG_QUESTIONS_DISTINCT:
            return game::QuestionSet::DistinctPairs;
        case PG_QUESTIONS_ALL:
            return game::QuestionSet::AllPairs;
    }
    throw InvalidArgument("unknown question set");
}

// Uniform question pair; distinct pairs only for the original game.
std::pair<game::EdgeId, game::EdgeId> draw_pair(Rng& rng, game::QuestionSet q) {
    if (q == game::QuestionSet::AllPairs) {
        const auto v = rng.below(25);
        return {game::EdgeId(static_cast<int>(v / 5)), game::EdgeId(static_cast<int>(v % 5))};
    }
    const auto v = static_cast<int>(rng.below(20));
    const int x = v / 4;
    int y = v % 4;
    if (y >= x) ++y;
    return {game::EdgeId(x), game::EdgeId(y)};
}

}  // namespace

extern "C" {

const char* pg_version(void) { return PENTAGRAM_VERSION; }
const char* pg_last_error(void) { return g_last_error.c_str(); }
void pg_string_free(char* s) { std::free(s); }

pg_status pg_game_brute_force(const int* params, pg_question_set questions, unsigned threads, pg_optimum* out) {
    return guarded([&] {
        need(out, "out");
        const auto r = game::brute_force_optimal(params_from(params), questions_from(questions), threads);
        auto a = std::make_unique<pg_strategy>(pg_strategy{r.alice});
        auto b = std::make_unique<pg_strategy>(pg_strategy{r.bob});
        out->num = r.max_prob.num();
        out->den = r.max_prob.den();
        out->wins = r.wins;
        out->questions = r.questions;
        out->alice = a.release();
        out->bob = b.release();
    });
}

pg_status pg_game_win_probability(const pg_strategy* alice, const pg_strategy* bob, const int* params,
                                  pg_question_set questions, int64_t* num, int64_t* den) {
    return guarded([&] {
        need(alice, "alice");
        need(bob, "bob");
        need(num, "num");
        need(den, "den");
        const auto p = game::win_probability(alice->s, bob->s, params_from(params), questions_from(questions));
        *num = p.num();
        *den = p.den();
    });
}

pg_status pg_game_play_classical(const pg_strategy* alice, const pg_strategy* bob, const int* params,
                                 pg_question_set questions, uint64_t rounds, uint64_t seed, uint64_t* wins) {
    return guarded([&] {
        need(alice, "alice");
        need(bob, "bob");
        need(wins, "wins");
        const auto p = params_from(params);
        const auto q = questions_from(questions);
        uint64_t won = 0;
        for (uint64_t r = 0; r < rounds; ++r) {
            Rng rng(seed, r);
            const auto [x, y] = draw_pair(rng, q);
            won += game::referee_questions(x, y, alice->s(x), bob->s(y), p) ? 1 : 0;
        }
        *wins = won;
    });
}

pg_status pg_game_play_quantum(const int* params, uint64_t rounds, uint64_t seed, uint64_t* wins) {
    return guarded([&] {
        need(wins, "wins");
        const auto p = params_from(params);
        uint64_t won = 0;
        for (uint64_t r = 0; r < rounds; ++r) {
            Rng rng(seed, r);
            const auto [x, y] = draw_pair(rng, game::QuestionSet::DistinctPairs);
            const auto [z, w] = mpp::quantum_round(x, y, p, rng);
            won += game::referee(x, y, z, w, p) ? 1 : 0;
        }
        *wins = won;
    });
}

pg_status pg_game_certify_quantum(const int* params, int* certified) {
    return guarded([&] {
        need(certified, "certified");
        const auto p = params_from(params);
        bool ok = true;
        for (int x = 0; x < game::kNumEdges; ++x)
            for (int y = 0; y < game::kNumEdges; ++y)
                if (x != y) ok = ok && mpp::certify_quantum_round(game::EdgeId(x), game::EdgeId(y), p);
        *certified = ok ? 1 : 0;
    });
}

pg_status pg_strategy_from_json(const char* json, pg_strategy** out) {
    return guarded([&] {
        need(json, "json");
        need(out, "out");
        *out = new pg_strategy{game::strategy_from_json(json)};
    });
}

pg_status pg_strategy_to_json(const pg_strategy* s, char** json) {
    return guarded([&] {
        need(s, "strategy");
        need(json, "json");
        *json = dup_string(game::strategy_to_json(s->s));
    });
}

void pg_strategy_free(pg_strategy* s) { delete s; }

pg_status pg_mpp_input_from_json(const char* json, pg_mpp_input** out) {
    return guarded([&] {
        need(json, "json");
        need(out, "out");
        *out = new pg_mpp_input{mpp::MppInput::from_json(json)};
    });
}

pg_status pg_mpp_input_from_bits(const char* bits, pg_mpp_input** out) {
    return guarded([&] {
        need(bits, "bits");
        need(out, "out");
        *out = new pg_mpp_input{mpp::MppInput::from_bits(bits)};
    });
}

pg_status pg_mpp_input_sample(size_t n, uint64_t seed, uint64_t stream, pg_mpp_input** out) {
    return guarded([&] {
        need(out, "out");
        Rng rng(seed, stream);
        *out = new pg_mpp_input{mpp::sample_S(n, rng)};
    });
}

pg_status pg_mpp_input_to_json(const pg_mpp_input* x, char** json) {
    return guarded([&] {
        need(x, "input");
        need(json, "json");
        *json = dup_string(x->x.json());
    });
}

pg_status pg_mpp_input_to_bits(const pg_mpp_input* x, char** bits) {
    return guarded([&] {
        need(x, "input");
        need(bits, "bits");
        *bits = dup_string(x->x.bits());
    });
}

size_t pg_mpp_input_n(const pg_mpp_input* x) { return x ? x->x.n() : 0; }

pg_status pg_mpp_input_subset(const pg_mpp_input* x, size_t* k, size_t* l) {
    return guarded([&] {
        need(x, "input");
        need(k, "k");
        need(l, "l");
        const auto kl = mpp::subset_of(x->x);
        if (!kl) throw InvalidArgument("input is not in S");
        *k = kl->k;
        *l = kl->l;
    });
}

void pg_mpp_input_free(pg_mpp_input* x) { delete x; }

pg_status pg_mpp_output_from_bits(const char* bits, pg_mpp_output** out) {
    return guarded([&] {
        need(bits, "bits");
        need(out, "out");
        *out = new pg_mpp_output{mpp::MppOutput::from_bits(bits)};
    });
}

pg_status pg_mpp_output_to_bits(const pg_mpp_output* z, char** bits) {
    return guarded([&] {
        need(z, "output");
        need(bits, "bits");
        *bits = dup_string(z->z.bits());
    });
}

void pg_mpp_output_free(pg_mpp_output* z) { delete z; }

pg_status pg_mpp_run(const pg_mpp_input* x, pg_backend backend, uint64_t seed, uint64_t stream,
                     pg_mpp_output** out) {
    return guarded([&] {
        need(x, "input");
        need(out, "out");
        mpp::Backend b;
        switch (backend) {
            case PG_BACKEND_STABILIZER:
                b = mpp::Backend::Stabilizer;
                break;
            case PG_BACKEND_STATEVECTOR:
                b = mpp::Backend::StateVector;
                break;
            default:
                throw InvalidArgument("unknown backend");
        }
        Rng rng(seed, stream);
        *out = new pg_mpp_output{mpp::run_mpp(x->x, b, rng)};
    });
}

pg_status pg_mpp_extract_params(const pg_mpp_output* z, size_t k, size_t l, int params[6]) {
    return guarded([&] {
        need(z, "output");
        need(params, "params");
        const auto p = mpp::extract_params(z->z, k, l);
        for (std::size_t i = 0; i < 6; ++i) params[i] = p.values()[i];
    });
}

pg_status pg_mpp_verify(const pg_mpp_input* x, const pg_mpp_output* z, int* relation, int* support) {
    return guarded([&] {
        need(x, "input");
        need(z, "output");
        if (z->z.n() != x->x.n()) throw InvalidArgument("output length does not match input length");
        if (relation) *relation = mpp::verify_game_relation(x->x, z->z) ? 1 : 0;
        if (support) *support = mpp::verify_support(x->x, z->z) ? 1 : 0;
    });
}

pg_status pg_mpp_exact_distribution(const pg_mpp_input* x, char** json) {
    return guarded([&] {
        need(x, "input");
        need(json, "json");
        nlohmann::ordered_json j = nlohmann::ordered_json::object();
        for (const auto& [bits, p] : mpp::exact_distribution(x->x)) j[bits] = p;
        *json = dup_string(j.dump());
    });
}

pg_status pg_mpp_circuit_json(const pg_mpp_input* x, char** json) {
    return guarded([&] {
        need(x, "input");
        need(json, "json");
        const Circuit c = mpp::build_mpp_circuit(x->x).circuit();
        nlohmann::ordered_json j;
        j["num_qubits"] = c.num_qubits;
        j["depth"] = c.depth();
        auto gates = nlohmann::ordered_json::array();
        for (const Gate& g : c.gates) {
            auto row = nlohmann::ordered_json::array({gate_name(g.kind), g.q0});
            if (g.two_qubit()) row.push_back(g.q1);
            gates.push_back(std::move(row));
        }
        j["gates"] = std::move(gates);
        *json = dup_string(j.dump());
    });
}

pg_status pg_circuit_from_json(const char* json, pg_circuit** out) {
    return guarded([&] {
        need(json, "json");
        need(out, "out");
        *out = new pg_circuit{lightcone::ClassicalCircuit::from_json(json)};
    });
}

pg_status pg_circuit_to_json(const pg_circuit* c, char** json) {
    return guarded([&] {
        need(c, "circuit");
        need(json, "json");
        *json = dup_string(c->c.json());
    });
}

pg_status pg_circuit_random(size_t n, size_t fan_in, size_t depth, size_t random_inputs, uint64_t seed,
                            pg_circuit** out) {
    return guarded([&] {
        need(out, "out");
        Rng rng(seed);
        *out = new pg_circuit{lightcone::random_nc0_circuit(n, fan_in, depth, rng, random_inputs)};
    });
}

pg_status pg_circuit_builtin(const char* kind, size_t n, pg_circuit** out) {
    return guarded([&] {
        need(kind, "kind");
        need(out, "out");
        if (n < 1) throw InvalidArgument("n must be at least 1");
        const std::string k = kind;
        if (k == "identity") *out = new pg_circuit{lightcone::identity_circuit(n)};
        else if (k == "constant0") *out = new pg_circuit{lightcone::constant_circuit(n, 0)};
        else if (k == "constant1") *out = new pg_circuit{lightcone::constant_circuit(n, 1)};
        else if (k == "parity") *out = new pg_circuit{lightcone::parity_broadcast_circuit(n)};
        else throw InvalidArgument("unknown builtin circuit '" + k + "'");
    });
}

pg_status pg_circuit_from_strategies(size_t n, const pg_strategy* alice, const pg_strategy* bob, pg_circuit** out) {
    return guarded([&] {
        need(alice, "alice");
        need(bob, "bob");
        need(out, "out");
        if (n < 1) throw InvalidArgument("n must be at least 1");
        *out = new pg_circuit{lightcone::strategy_circuit(n, alice->s, bob->s)};
    });
}

pg_status pg_circuit_info_get(const pg_circuit* c, pg_circuit_info* info) {
    return guarded([&] {
        need(c, "circuit");
        need(info, "info");
        info->data_inputs = c->c.data_inputs();
        info->random_inputs = c->c.random_inputs();
        info->gates = c->c.gates().size();
        info->outputs = c->c.num_outputs();
        info->depth = c->c.depth();
        info->max_fan_in = c->c.max_fan_in();
    });
}

void pg_circuit_free(pg_circuit* c) { delete c; }

pg_status pg_lightcone(const pg_circuit* c, size_t input_bit, size_t* outputs, size_t capacity, size_t* count) {
    return guarded([&] {
        need(c, "circuit");
        need(count, "count");
        const auto cone = lightcone::lightcone(c->c, input_bit);
        *count = cone.size();
        if (outputs) {
            if (capacity < cone.size()) throw InvalidArgument("lightcone buffer too small");
            std::copy(cone.begin(), cone.end(), outputs);
        }
    });
}

pg_status pg_correlated_exact(const pg_circuit* c, size_t input_bit, size_t output_bit, int* correlated) {
    return guarded([&] {
        need(c, "circuit");
        need(correlated, "correlated");
        *correlated = lightcone::correlated_exact(c->c, input_bit, output_bit) ? 1 : 0;
    });
}

pg_status pg_event_e(const pg_circuit* c, size_t n, size_t k, size_t l, int* holds) {
    return guarded([&] {
        need(c, "circuit");
        need(holds, "holds");
        *holds = lightcone::event_E(c->c, n, k, l) ? 1 : 0;
    });
}

pg_status pg_prob_e(const pg_circuit* c, size_t n, int64_t* num, int64_t* den, uint64_t* bad_pairs) {
    return guarded([&] {
        need(c, "circuit");
        const lightcone::EventAnalyzer events(c->c, n);
        const auto p = events.prob();
        if (num) *num = p.num();
        if (den) *den = p.den();
        if (bad_pairs) *bad_pairs = events.bad_pairs();
    });
}

pg_status pg_adversary(const pg_circuit* c, size_t n, uint64_t samples, uint64_t seed, unsigned threads,
                       pg_adversary_report* out) {
    return guarded([&] {
        need(c, "circuit");
        need(out, "out");
        const auto r = lightcone::eval_adversary(c->c, n, samples, seed, threads);
        out->samples = r.samples;
        out->successes = r.successes;
        out->samples_given_e = r.samples_given_E;
        out->successes_given_e = r.successes_given_E;
        out->prob_e_num = r.prob_E.num();
        out->prob_e_den = r.prob_E.den();
        out->success_rate = r.success_rate;
        out->success_rate_given_e = r.success_rate_given_E;
        out->ci = {r.ci.lo, r.ci.hi, r.ci.half_width()};
        out->ci_given_e = {r.ci_given_E.lo, r.ci_given_E.hi, r.ci_given_E.half_width()};
    });
}

pg_status pg_bound_eq1(double n, double fan_in, double p, double* out) {
    return guarded([&] {
        need(out, "out");
        *out = lightcone::bound_eq1(n, fan_in, p);
    });
}

pg_status pg_bound_eq3(double n, double fan_in, double p, double* out) {
    return guarded([&] {
        need(out, "out");
        *out = lightcone::bound_eq3(n, fan_in, p);
    });
}

pg_status pg_prop5_lower_bound(size_t n, size_t fan_in, size_t depth, double* out) {
    return guarded([&] {
        need(out, "out");
        if (n < 1) throw InvalidArgument("n must be at least 1");
        *out = lightcone::prop5_lower_bound(n, fan_in, depth);
    });
}

}  // extern "C"
