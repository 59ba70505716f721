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

#include <gtest/gtest.h>

#include <cstring>
#include <string>
#include <vector>

#include "pentagram/pentagram.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    pg_string_free(s);
    return out;
}

TEST(CApi, VersionAndErrorReporting) {
    EXPECT_STRNE(pg_version(), "");
    double v = 0;
    EXPECT_EQ(pg_bound_eq1(100, 2, 0.95, &v), PG_ERR_DOMAIN);
    EXPECT_NE(std::string(pg_last_error()).find("19/20"), std::string::npos);
    EXPECT_EQ(pg_bound_eq1(1e6, 2, 1.0, &v), PG_OK);
    EXPECT_STREQ(pg_last_error(), "");
    EXPECT_NEAR(v, 3.927, 1e-3);
    EXPECT_EQ(pg_bound_eq3(6480, 2, 1.0, nullptr), PG_ERR_INVALID_ARGUMENT);
}

TEST(CApi, BruteForceAndStrategies) {
    pg_optimum opt{};
    ASSERT_EQ(pg_game_brute_force(nullptr, PG_QUESTIONS_ALL, 1, &opt), PG_OK);
    EXPECT_EQ(opt.wins, 23);
    EXPECT_EQ(opt.questions, 25);
    EXPECT_EQ(opt.num, 23);
    EXPECT_EQ(opt.den, 25);
    char* json = nullptr;
    ASSERT_EQ(pg_strategy_to_json(opt.alice, &json), PG_OK);
    pg_strategy* again = nullptr;
    ASSERT_EQ(pg_strategy_from_json(json, &again), PG_OK);
    pg_string_free(json);
    int64_t num = 0, den = 0;
    ASSERT_EQ(pg_game_win_probability(again, opt.bob, nullptr, PG_QUESTIONS_ALL, &num, &den), PG_OK);
    EXPECT_EQ(num, 23);
    EXPECT_EQ(den, 25);
    uint64_t wins = 0;
    ASSERT_EQ(pg_game_play_classical(again, opt.bob, nullptr, PG_QUESTIONS_ALL, 0, 1, &wins), PG_OK);
    EXPECT_EQ(wins, 0u);
    pg_strategy_free(again);
    pg_strategy_free(opt.alice);
    pg_strategy_free(opt.bob);

    pg_strategy* bad = nullptr;
    EXPECT_EQ(pg_strategy_from_json("{\"player\":\"A\"}", &bad), PG_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(bad, nullptr);
    const int params[6] = {1, 1, 2, 1, 1, 1};
    EXPECT_EQ(pg_game_brute_force(params, PG_QUESTIONS_DISTINCT, 1, &opt), PG_ERR_INVALID_ARGUMENT);
}

TEST(CApi, QuantumPlay) {
    const int params[6] = {-1, 1, 1, -1, 1, -1};
    uint64_t wins = 0;
    ASSERT_EQ(pg_game_play_quantum(params, 500, 9, &wins), PG_OK);
    EXPECT_EQ(wins, 500u);
    int certified = 0;
    ASSERT_EQ(pg_game_certify_quantum(params, &certified), PG_OK);
    EXPECT_EQ(certified, 1);
}

TEST(CApi, MppPipeline) {
    pg_mpp_input* x = nullptr;
    ASSERT_EQ(pg_mpp_input_sample(8, 5, 0, &x), PG_OK);
    EXPECT_EQ(pg_mpp_input_n(x), 8u);
    size_t k = 0, l = 0;
    ASSERT_EQ(pg_mpp_input_subset(x, &k, &l), PG_OK);
    EXPECT_LT(k, l);
    char* bits = nullptr;
    ASSERT_EQ(pg_mpp_input_to_bits(x, &bits), PG_OK);
    EXPECT_EQ(std::strlen(bits), 48u);
    pg_mpp_input* from_bits = nullptr;
    ASSERT_EQ(pg_mpp_input_from_bits(bits, &from_bits), PG_OK);
    pg_string_free(bits);
    char* json = nullptr;
    ASSERT_EQ(pg_mpp_input_to_json(from_bits, &json), PG_OK);
    pg_mpp_input* from_json = nullptr;
    ASSERT_EQ(pg_mpp_input_from_json(json, &from_json), PG_OK);
    pg_string_free(json);

    pg_mpp_output* z = nullptr;
    ASSERT_EQ(pg_mpp_run(from_json, PG_BACKEND_STABILIZER, 5, 1, &z), PG_OK);
    int relation = 0, support = 0;
    ASSERT_EQ(pg_mpp_verify(x, z, &relation, &support), PG_OK);
    EXPECT_EQ(relation, 1);
    EXPECT_EQ(support, 1);
    int params[6];
    ASSERT_EQ(pg_mpp_extract_params(z, k, l, params), PG_OK);
    for (int p : params) EXPECT_TRUE(p == 1 || p == -1);
    const std::string circuit = take([&] {
        char* s = nullptr;
        EXPECT_EQ(pg_mpp_circuit_json(x, &s), PG_OK);
        return s;
    }());
    EXPECT_NE(circuit.find("\"num_qubits\":48"), std::string::npos);

    pg_mpp_output* dense = nullptr;
    EXPECT_EQ(pg_mpp_run(x, PG_BACKEND_STATEVECTOR, 5, 1, &dense), PG_ERR_DOMAIN);
    EXPECT_EQ(pg_mpp_run(x, static_cast<pg_backend>(9), 5, 1, &dense), PG_ERR_INVALID_ARGUMENT);

    pg_mpp_output_free(z);
    pg_mpp_input_free(from_json);
    pg_mpp_input_free(from_bits);
    pg_mpp_input_free(x);
}

TEST(CApi, MppErrors) {
    pg_mpp_input* x = nullptr;
    EXPECT_EQ(pg_mpp_input_from_bits("0101", &x), PG_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(pg_mpp_input_from_json(nullptr, &x), PG_ERR_INVALID_ARGUMENT);
    ASSERT_EQ(pg_mpp_input_from_bits("000000111111", &x), PG_OK);  // x_1 = x_2 = 000: not in S
    size_t k, l;
    EXPECT_EQ(pg_mpp_input_subset(x, &k, &l), PG_ERR_INVALID_ARGUMENT);
    pg_mpp_output* z = nullptr;
    ASSERT_EQ(pg_mpp_output_from_bits("000000000000", &z), PG_OK);
    int relation = 0;
    EXPECT_EQ(pg_mpp_verify(x, z, &relation, nullptr), PG_ERR_INVALID_ARGUMENT);
    pg_mpp_output_free(z);
    pg_mpp_input_free(x);
}

TEST(CApi, ExactDistribution) {
    pg_mpp_input* x = nullptr;
    ASSERT_EQ(pg_mpp_input_sample(2, 3, 0, &x), PG_OK);
    char* json = nullptr;
    ASSERT_EQ(pg_mpp_exact_distribution(x, &json), PG_OK);
    EXPECT_EQ(json[0], '{');
    pg_string_free(json);
    pg_mpp_input_free(x);
}

TEST(CApi, LightconeFunctions) {
    pg_circuit* c = nullptr;
    ASSERT_EQ(pg_circuit_builtin("identity", 4, &c), PG_OK);
    pg_circuit_info info{};
    ASSERT_EQ(pg_circuit_info_get(c, &info), PG_OK);
    EXPECT_EQ(info.data_inputs, 24u);
    EXPECT_EQ(info.outputs, 24u);
    EXPECT_EQ(info.depth, 0u);
    size_t count = 0;
    ASSERT_EQ(pg_lightcone(c, 5, nullptr, 0, &count), PG_OK);
    EXPECT_EQ(count, 1u);
    std::vector<size_t> buf(1);
    ASSERT_EQ(pg_lightcone(c, 5, buf.data(), buf.size(), &count), PG_OK);
    EXPECT_EQ(buf[0], 5u);
    int64_t num = 0, den = 0;
    uint64_t bad = 9;
    ASSERT_EQ(pg_prob_e(c, 4, &num, &den, &bad), PG_OK);
    EXPECT_EQ(num, 1);
    EXPECT_EQ(den, 1);
    EXPECT_EQ(bad, 0u);
    int holds = 0;
    ASSERT_EQ(pg_event_e(c, 4, 1, 2, &holds), PG_OK);
    EXPECT_EQ(holds, 1);
    EXPECT_EQ(pg_event_e(c, 4, 2, 2, &holds), PG_ERR_INVALID_ARGUMENT);
    int corr = 0;
    ASSERT_EQ(pg_correlated_exact(c, 3, 3, &corr), PG_OK);
    EXPECT_EQ(corr, 1);
    char* json = nullptr;
    ASSERT_EQ(pg_circuit_to_json(c, &json), PG_OK);
    pg_circuit* back = nullptr;
    ASSERT_EQ(pg_circuit_from_json(json, &back), PG_OK);
    pg_string_free(json);
    pg_circuit_free(back);
    pg_circuit_free(c);

    EXPECT_EQ(pg_circuit_builtin("nope", 4, &c), PG_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(pg_circuit_from_json("{\"inputs\":1}", &c), PG_ERR_INVALID_ARGUMENT);
}

TEST(CApi, AdversaryReport) {
    pg_circuit* c = nullptr;
    ASSERT_EQ(pg_circuit_random(8, 2, 1, 2, 11, &c), PG_OK);
    pg_adversary_report r{};
    ASSERT_EQ(pg_adversary(c, 8, 2000, 12, 2, &r), PG_OK);
    EXPECT_EQ(r.samples, 2000u);
    EXPECT_LE(r.successes, r.samples);
    EXPECT_LE(r.successes_given_e, r.samples_given_e);
    EXPECT_LE(r.ci.lo, r.success_rate);
    EXPECT_GE(r.ci.hi, r.success_rate);
    EXPECT_GT(r.prob_e_den, 0);
    EXPECT_EQ(pg_adversary(c, 9, 10, 1, 1, &r), PG_ERR_INVALID_ARGUMENT);
    pg_circuit_free(c);
    double bound = 0;
    ASSERT_EQ(pg_prop5_lower_bound(4096, 2, 2, &bound), PG_OK);
    EXPECT_DOUBLE_EQ(bound, 0.15625);
}

TEST(CApi, NullHandlesAreRejected) {
    char* s = nullptr;
    EXPECT_EQ(pg_strategy_to_json(nullptr, &s), PG_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(pg_circuit_to_json(nullptr, &s), PG_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(pg_mpp_output_to_bits(nullptr, &s), PG_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(pg_mpp_input_n(nullptr), 0u);
    pg_strategy_free(nullptr);
    pg_circuit_free(nullptr);
    pg_string_free(nullptr);
}

}  // namespace
