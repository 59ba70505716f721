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

#include <algorithm>
#include <set>

#include "pentagram/error.hpp"
#include "pentagram/game.hpp"
#include "pentagram/lightcone.hpp"

namespace pentagram::lightcone {
namespace {

// Independent reachability oracle: depth-first search over the gate graph,
// walking from each output back towards the inputs.
std::set<std::size_t> reachable_outputs(const ClassicalCircuit& c, std::size_t input) {
    std::set<std::size_t> out;
    for (std::size_t j = 0; j < c.num_outputs(); ++j) {
        std::vector<Wire> stack{c.outputs()[j]};
        std::set<std::uint32_t> seen;
        bool hit = false;
        while (!stack.empty() && !hit) {
            const Wire w = stack.back();
            stack.pop_back();
            if (w.kind == Wire::Kind::Input) {
                hit = w.index == input;
                continue;
            }
            if (!seen.insert(w.index).second) continue;
            for (const Wire& in : c.gates()[w.index].in) stack.push_back(in);
        }
        if (hit) out.insert(j);
    }
    return out;
}

// Small random circuit without the MPP layout.
ClassicalCircuit small_random(std::size_t inputs, std::size_t gates, std::size_t outputs, Rng& rng) {
    std::vector<ClassicalGate> gs;
    for (std::size_t g = 0; g < gates; ++g) {
        ClassicalGate gate;
        const std::size_t fan = 1 + rng.below(3);
        for (std::size_t i = 0; i < fan; ++i) {
            if (g > 0 && rng.bit()) gate.in.push_back(Wire::gate(static_cast<std::uint32_t>(rng.below(g))));
            else gate.in.push_back(Wire::input(static_cast<std::uint32_t>(rng.below(inputs))));
        }
        gate.table.resize(std::size_t{1} << fan);
        for (auto& t : gate.table) t = rng.bit() ? 1 : 0;
        gs.push_back(std::move(gate));
    }
    std::vector<Wire> outs;
    for (std::size_t j = 0; j < outputs; ++j)
        outs.push_back(rng.below(4) == 0 ? Wire::input(static_cast<std::uint32_t>(rng.below(inputs)))
                                         : Wire::gate(static_cast<std::uint32_t>(rng.below(gates))));
    return ClassicalCircuit(inputs, 0, std::move(gs), std::move(outs));
}

TEST(Lightcone, IdentityCircuit) {
    const auto c = identity_circuit(3);
    for (std::size_t i = 0; i < 18; ++i) EXPECT_EQ(lightcone(c, i), std::vector<std::size_t>{i});
    EXPECT_EQ(c.depth(), 0u);
}

TEST(Lightcone, SingleGateExample) {
    // Output 0 = f(input 0, input 1); input 2 unused.
    const ClassicalCircuit c(3, 0, {{{Wire::input(0), Wire::input(1)}, {0, 1, 1, 0}}},
                             {Wire::gate(0), Wire::input(1)});
    EXPECT_EQ(lightcone(c, 0), std::vector<std::size_t>{0});
    EXPECT_EQ(lightcone(c, 1), (std::vector<std::size_t>{0, 1}));
    EXPECT_TRUE(lightcone(c, 2).empty());
    EXPECT_THROW(lightcone(c, 3), InvalidArgument);
}

TEST(Lightcone, MatchesReachabilityOracle) {
    Rng rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        const auto c = trial % 2 ? small_random(10, 30, 12, rng)
                                 : random_nc0_circuit(2, 2, 2, rng, rng.below(3));
        const auto all = all_lightcones(c);
        for (std::size_t i = 0; i < c.data_inputs(); ++i) {
            const auto cone = lightcone(c, i);
            const auto oracle = reachable_outputs(c, i);
            ASSERT_EQ(std::set<std::size_t>(cone.begin(), cone.end()), oracle);
            ASSERT_EQ(all[i], cone);
        }
    }
}

TEST(Correlation, ConstantCircuitHasNone) {
    const auto c = constant_circuit(1, 1);
    for (const auto& row : correlation_table(c))
        for (bool b : row) EXPECT_FALSE(b);
}

TEST(Correlation, XorDependsOnBothInputs) {
    const ClassicalCircuit c(2, 0, {{{Wire::input(0), Wire::input(1)}, {0, 1, 1, 0}}}, {Wire::gate(0)});
    EXPECT_TRUE(correlated_exact(c, 0, 0));
    EXPECT_TRUE(correlated_exact(c, 1, 0));
    // AND of x with NOT x is constant although both wires are present.
    const ClassicalCircuit dead(1, 0,
                                {{{Wire::input(0)}, {1, 0}}, {{Wire::input(0), Wire::gate(0)}, {0, 0, 0, 1}}},
                                {Wire::gate(1)});
    EXPECT_FALSE(correlated_exact(dead, 0, 0));
    EXPECT_EQ(lightcone(dead, 0), std::vector<std::size_t>{0});
}

TEST(Correlation, ImpliesLightconeMembership) {
    Rng rng(72);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t inputs = 2 + rng.below(19);
        const auto c = small_random(inputs, 5 + rng.below(20), 1 + rng.below(8), rng);
        const auto table = correlation_table(c);
        for (std::size_t i = 0; i < inputs; ++i) {
            const auto cone = lightcone(c, i);
            for (std::size_t j = 0; j < c.num_outputs(); ++j)
                if (table[i][j]) ASSERT_TRUE(std::binary_search(cone.begin(), cone.end(), j));
        }
    }
}

TEST(Correlation, SizeCap) {
    const auto c = identity_circuit(5);  // 30 inputs
    EXPECT_THROW(correlated_exact(c, 0, 0), DomainError);
}

TEST(Evaluate, WordParallelMatchesScalar) {
    Rng rng(73);
    for (int trial = 0; trial < 20; ++trial) {
        const auto c = random_nc0_circuit(2, 3, 2, rng, 2);
        std::vector<std::uint64_t> words(c.total_inputs());
        for (auto& w : words) w = rng.next();
        const auto out_words = c.evaluate_words(words);
        for (int b = 0; b < 64; ++b) {
            std::vector<std::uint8_t> in(c.total_inputs());
            for (std::size_t i = 0; i < in.size(); ++i) in[i] = (words[i] >> b) & 1;
            const auto out = c.evaluate(in);
            for (std::size_t j = 0; j < out.size(); ++j) ASSERT_EQ(out[j], (out_words[j] >> b) & 1);
        }
    }
}

TEST(Event, IdentityHoldsEverywhere) {
    const auto c = identity_circuit(6);
    for (std::size_t k = 1; k <= 6; ++k)
        for (std::size_t l = k + 1; l <= 6; ++l) EXPECT_TRUE(event_E(c, 6, k, l));
    EXPECT_EQ(prob_E(c, 6), Rational(1, 1));
    EXPECT_THROW(event_E(c, 6, 3, 3), InvalidArgument);
    EXPECT_THROW(event_E(c, 6, 4, 2), InvalidArgument);
}

TEST(Event, GateFromXkIntoWlBreaksIt) {
    const std::size_t n = 4;
    std::vector<Wire> outs;
    for (std::size_t j = 0; j < 6 * n; ++j) outs.push_back(Wire::input(static_cast<std::uint32_t>(j)));
    // Gate reads a bit of x_1 and writes the first bit of w_3.
    outs[3 * n + 3 * 2] = Wire::gate(0);
    const ClassicalCircuit c(6 * n, 0, {{{Wire::input(1)}, {1, 0}}}, outs);
    EXPECT_FALSE(event_E(c, n, 1, 3));
    EXPECT_TRUE(event_E(c, n, 1, 2));
    EXPECT_TRUE(event_E(c, n, 2, 3));
    EXPECT_EQ(prob_E(c, n), Rational(5, 6));
}

TEST(Event, SharedOutputBreaksIt) {
    const std::size_t n = 3;
    std::vector<Wire> outs;
    for (std::size_t j = 0; j < 6 * n; ++j) outs.push_back(Wire::input(static_cast<std::uint32_t>(j)));
    // An output of block z_3 reads both x_1 and y_2.
    outs[3 * 2] = Wire::gate(0);
    const ClassicalCircuit c(6 * n, 0, {{{Wire::input(0), Wire::input(3 * n + 3)}, {0, 1, 1, 1}}}, outs);
    EXPECT_FALSE(event_E(c, n, 1, 2));
    EXPECT_TRUE(event_E(c, n, 1, 3));
    EXPECT_TRUE(event_E(c, n, 2, 3));
}

TEST(Event, ParityBroadcastHasNoGoodPairs) {
    EXPECT_EQ(prob_E(parity_broadcast_circuit(8), 8), Rational(0, 1));
}

TEST(Event, BadPairCountMatchesPairwiseEvaluation) {
    Rng rng(74);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 6 + rng.below(20);
        const auto c = random_nc0_circuit(n, 2 + rng.below(2), 1 + rng.below(2), rng, rng.below(4));
        const EventAnalyzer a(c, n);
        std::uint64_t bad = 0;
        for (std::size_t k = 1; k <= n; ++k)
            for (std::size_t l = k + 1; l <= n; ++l) bad += a.event(k, l) ? 0 : 1;
        ASSERT_EQ(a.bad_pairs(), bad);
    }
}

TEST(Event, RandomShallowCircuitsMeetTheBound) {
    Rng rng(75);
    for (int trial = 0; trial < 20; ++trial) {
        const auto c = random_nc0_circuit(64, 2, 1, rng);
        const auto p = prob_E(c, 64);
        EXPECT_TRUE(satisfies_prop5(p, 64, 2, 1));
        EXPECT_GE(p.to_double(), prop5_lower_bound(64, 2, 1) - 1e-12);
    }
    EXPECT_NEAR(prop5_lower_bound(4096, 2, 2), 0.15625, 1e-12);
}

TEST(Event, ExactBoundComparison) {
    // 1 - 216 * 4 / 1000 = 0.136
    EXPECT_TRUE(satisfies_prop5(Rational(136, 1000), 1000, 2, 1));
    EXPECT_FALSE(satisfies_prop5(Rational(135, 1000), 1000, 2, 1));
    EXPECT_TRUE(satisfies_prop5(Rational(0, 1), 100, 2, 1));  // vacuous
}

TEST(Event, LayoutMustMatch) {
    EXPECT_THROW(EventAnalyzer(identity_circuit(3), 4), InvalidArgument);
    EXPECT_THROW(EventAnalyzer(identity_circuit(1), 1), InvalidArgument);
}

TEST(Bounds, Values) {
    EXPECT_NEAR(bound_eq1(4320, 2, 1.0), 0.0, 1e-9);
    EXPECT_NEAR(bound_eq1(1e6, 2, 1.0), 3.927, 0.001);
    EXPECT_NEAR(bound_eq3(6480, 2, 1.0), 1.585, 0.001);
    EXPECT_THROW(bound_eq1(100, 2, 0.95), DomainError);
    EXPECT_THROW(bound_eq3(100, 2, 8.0 / 9.0), DomainError);
    EXPECT_THROW(bound_eq1(1, 2, 1.0), InvalidArgument);
    EXPECT_THROW(bound_eq1(100, 1, 1.0), InvalidArgument);
    EXPECT_THROW(bound_eq1(100, 2, 1.5), InvalidArgument);
}

TEST(Bounds, Monotonicity) {
    double prev = bound_eq1(1e3, 2, 0.99);
    for (double n : {1e4, 1e5, 1e6}) {
        const double v = bound_eq1(n, 2, 0.99);
        EXPECT_GT(v, prev);
        prev = v;
    }
    EXPECT_GT(bound_eq1(1e6, 2, 0.99), bound_eq1(1e6, 2, 0.96));
    EXPECT_LT(bound_eq1(1e6, 3, 0.99), bound_eq1(1e6, 2, 0.99));
}

TEST(Generator, LayerAndFanInInvariants) {
    Rng rng(76);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t b = 2 + rng.below(3), d = 1 + rng.below(3);
        const auto c = random_nc0_circuit(4, b, d, rng, rng.below(5));
        ASSERT_EQ(c.depth(), d);
        ASSERT_LE(c.max_fan_in(), b);
        ASSERT_EQ(c.num_outputs(), 24u);
        for (std::size_t g = 0; g < c.gates().size(); ++g)
            for (const Wire& w : c.gates()[g].in)
                if (w.kind == Wire::Kind::Gate) ASSERT_LT(w.index, g);
    }
    EXPECT_THROW(random_nc0_circuit(4, 1, 1, rng), InvalidArgument);
    EXPECT_THROW(random_nc0_circuit(4, 2, 0, rng), InvalidArgument);
}

TEST(Generator, LightconesStayWithinFanInGrowth) {
    Rng rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        const auto c = random_nc0_circuit(16, 2, 2, rng);
        // Every output reads at most B^D data inputs.
        std::vector<std::size_t> per_output(c.num_outputs(), 0);
        for (const auto& cone : all_lightcones(c))
            for (auto j : cone) ++per_output[j];
        for (auto cnt : per_output) ASSERT_LE(cnt, 4u);
    }
}

TEST(Json, RoundTripAndNamedGates) {
    Rng rng(78);
    const auto c = random_nc0_circuit(2, 3, 2, rng, 3);
    const auto back = ClassicalCircuit::from_json(c.json());
    EXPECT_EQ(back.json(), c.json());
    const auto named = ClassicalCircuit::from_json(
        R"({"inputs":2,"gates":[{"id":"a","in":["i0","i1"],"table":[0,1,1,0]},{"id":"b","in":["a"],"table":[1,0]}],"outputs":["b","i1"]})");
    EXPECT_EQ(named.depth(), 2u);
    EXPECT_EQ(named.evaluate({1, 0}), (std::vector<std::uint8_t>{0, 0}));
}

TEST(Json, RejectsInvalidCircuits) {
    // forward reference
    EXPECT_THROW(ClassicalCircuit::from_json(
                     R"({"inputs":1,"gates":[{"in":["g1"],"table":[0,1]},{"in":["i0"],"table":[0,1]}],"outputs":["g0"]})"),
                 InvalidArgument);
    EXPECT_THROW(ClassicalCircuit::from_json(R"({"inputs":1,"gates":[{"in":["i0"],"table":[0,1,1]}],"outputs":["g0"]})"),
                 InvalidArgument);
    EXPECT_THROW(ClassicalCircuit::from_json(R"({"inputs":1,"gates":[{"in":["i2"],"table":[0,1]}],"outputs":["g0"]})"),
                 InvalidArgument);
    EXPECT_THROW(ClassicalCircuit::from_json(R"({"inputs":1,"gates":[{"in":[],"table":[0]}],"outputs":["g0"]})"),
                 InvalidArgument);
    EXPECT_THROW(ClassicalCircuit::from_json(R"({"inputs":1,"gates":[],"outputs":["x7"]})"), InvalidArgument);
    EXPECT_THROW(ClassicalCircuit::from_json("not json"), InvalidArgument);
}

TEST(Statistics, WilsonInterval) {
    const Interval ci = wilson_interval(95, 100, kZ99);
    EXPECT_LT(ci.lo, 0.95);
    EXPECT_GT(ci.hi, 0.95);
    EXPECT_NEAR(ci.lo, 0.86085, 1e-4);
    EXPECT_NEAR(ci.hi, 0.98315, 1e-4);
    const Interval all = wilson_interval(100, 100, kZ99);
    EXPECT_DOUBLE_EQ(all.hi, 1.0);
    EXPECT_LT(all.lo, 1.0);
}

TEST(Adversary, ConstantCircuitStaysBelowTheCeiling) {
    const auto r = eval_adversary(constant_circuit(8, 0), 8, 10000, 79);
    EXPECT_LE(r.success_rate_given_E, 19.0 / 20.0 + r.ci_given_E.half_width());
}

TEST(Adversary, DecompositionHolds) {
    Rng rng(80);
    const auto c = random_nc0_circuit(8, 2, 1, rng, 4);
    const auto r = eval_adversary(c, 8, 5000, 81);
    const double pe = r.prob_E.to_double();
    EXPECT_LE(r.success_rate, r.success_rate_given_E * pe + (1.0 - pe) + r.ci.half_width());
}

TEST(Adversary, EmbeddedWitnessPlaysItsGameValue) {
    const auto opt = game::brute_force_optimal(game::GameParams(), game::QuestionSet::AllPairs);
    const auto c = strategy_circuit(8, opt.alice, opt.bob);
    EXPECT_EQ(c.depth(), 1u);
    EXPECT_EQ(c.max_fan_in(), 3u);
    const auto r = eval_adversary(c, 8, 20000, 82);
    EXPECT_EQ(r.prob_E, Rational(1, 1));
    EXPECT_NEAR(r.success_rate_given_E, opt.max_prob.to_double(), 3 * r.ci_given_E.half_width());
}

TEST(Adversary, ThreadCountDoesNotChangeCounts) {
    Rng rng(83);
    const auto c = random_nc0_circuit(6, 3, 2, rng, 2);
    const auto one = eval_adversary(c, 6, 3000, 84, 1);
    const auto three = eval_adversary(c, 6, 3000, 84, 3);
    EXPECT_EQ(one.successes, three.successes);
    EXPECT_EQ(one.samples_given_E, three.samples_given_E);
    EXPECT_EQ(one.successes_given_E, three.successes_given_E);
}

}  // namespace
}  // namespace pentagram::lightcone
