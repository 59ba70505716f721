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

#include <set>

#include "pentagram/error.hpp"
#include "pentagram/game.hpp"

namespace pentagram::game {
namespace {

// Values from tests/oracles/game_value.py, an enumeration written against the
// vertex sets only.
constexpr std::int64_t kOracleDistinctWins = 20;
constexpr std::int64_t kOracleAllPairsWins = 23;

const Pentagram& P() { return Pentagram::canonical(); }

TEST(Pentagram, VertexObservables) {
    const char* expected[] = {"+XII", "+IXI", "+IIX", "+ZII", "+IZI", "+IIZ", "+ZXX", "+XZX", "+XXZ", "+ZZZ"};
    for (int v = 0; v < kNumVertices; ++v) EXPECT_EQ(P().vertex(v).observable.str(), expected[v]);
}

TEST(Pentagram, EdgesInRankOrder) {
    const std::array<std::array<int, 4>, 5> expected{
        {{2, 1, 3, 6}, {2, 0, 4, 7}, {1, 0, 5, 8}, {3, 4, 5, 9}, {6, 7, 8, 9}}};
    for (int s = 0; s < kNumEdges; ++s) EXPECT_EQ(P().edge(EdgeId(s)), expected[static_cast<std::size_t>(s)]);
}

TEST(Pentagram, OrderFunction) {
    for (int s = 0; s < kNumEdges; ++s)
        for (int t = 0; t < kNumEdges; ++t) {
            if (s == t) {
                EXPECT_THROW(Pentagram::order(EdgeId(s), EdgeId(t)), InvalidArgument);
                continue;
            }
            EXPECT_EQ(Pentagram::order(EdgeId(s), EdgeId(t)), t < s ? t + 1 : t);
            // The vertex at that rank is the intersection.
            EXPECT_EQ(P().vertex_at_rank(EdgeId(s), Pentagram::order(EdgeId(s), EdgeId(t))),
                      P().intersection(EdgeId(s), EdgeId(t)).vid);
        }
}

TEST(Pentagram, EveryVertexLiesOnTwoEdgesAndEdgesMeetOnce) {
    for (int s = 0; s < kNumEdges; ++s)
        for (int t = s + 1; t < kNumEdges; ++t) {
            const auto& a = P().edge(EdgeId(s));
            const auto& b = P().edge(EdgeId(t));
            int shared = 0;
            for (int v : a)
                for (int w : b) shared += v == w;
            EXPECT_EQ(shared, 1);
        }
}

TEST(Pentagram, EdgeObservablesCommuteAndMultiplyToSign) {
    for (int s = 0; s < kNumEdges; ++s) {
        const auto& e = P().edge(EdgeId(s));
        PauliWord prod(3);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j)
                EXPECT_TRUE(commutes(P().vertex(e[static_cast<std::size_t>(i)]).observable,
                                     P().vertex(e[static_cast<std::size_t>(j)]).observable));
            prod *= P().vertex(e[static_cast<std::size_t>(i)]).observable;
        }
        EXPECT_TRUE(prod.is_identity());
        EXPECT_EQ(prod.sign(), Pentagram::e(EdgeId(s)));
    }
    EXPECT_EQ(Pentagram::e(EdgeId(4)), -1);
}

TEST(EdgeId, CodesAndValidation) {
    EXPECT_EQ(EdgeId::from_code("011").value(), 3);
    EXPECT_EQ(EdgeId(4).code_str(), "100");
    EXPECT_THROW(EdgeId(5), InvalidArgument);
    EXPECT_THROW(EdgeId::from_code("101"), InvalidArgument);
    EXPECT_THROW(EdgeId::from_code("01"), InvalidArgument);
    EXPECT_TRUE(EdgeId::is_edge_code(0));
    EXPECT_FALSE(EdgeId::is_edge_code(7));
}

TEST(GameParams, IndexAndValidation) {
    const GameParams p = GameParams::from_index(0b000101);
    EXPECT_EQ(p.alpha(1), -1);
    EXPECT_EQ(p.beta(1), 1);
    EXPECT_EQ(p.alpha(2), -1);
    EXPECT_FALSE(p.all_ones());
    EXPECT_TRUE(GameParams().all_ones());
    EXPECT_THROW(GameParams({1, 1, 0, 1, 1, 1}), InvalidArgument);
}

TEST(LValue, ProductOverFactors) {
    const GameParams p({-1, 1, 1, -1, -1, 1});  // α = (-1, 1, -1), β = (1, -1, 1)
    EXPECT_EQ(l_value_vertex(0, p), -1);  // XII -> α1
    EXPECT_EQ(l_value_vertex(4, p), -1);  // IZI -> β2
    EXPECT_EQ(l_value_vertex(6, p), -1);  // ZXX -> β1 α2 α3
    EXPECT_EQ(l_value_vertex(9, p), -1);  // ZZZ -> β1 β2 β3
    EXPECT_EQ(l_value(EdgeId(0), EdgeId(1), p), -1);  // meet at IIX
    for (int v = 0; v < kNumVertices; ++v) EXPECT_EQ(l_value_vertex(v, GameParams()), 1);
}

TEST(Referee, OriginalGameRules) {
    const GameParams ones;
    // Edges 0 and 1 meet at vertex 2, rank 1 on both.
    const Assignment z({1, 1, 1, 1});
    const Assignment w({1, -1, -1, 1});
    EXPECT_TRUE(referee(EdgeId(0), EdgeId(1), z, w, ones));
    EXPECT_FALSE(referee(EdgeId(0), EdgeId(1), Assignment({-1, -1, 1, 1}), w, ones));
    EXPECT_FALSE(referee(EdgeId(0), EdgeId(1), Assignment({1, 1, 1, -1}), w, ones));  // parity
    // Edge 4 needs product -1.
    EXPECT_FALSE(referee(EdgeId(3), EdgeId(4), z, z, ones));
    EXPECT_TRUE(referee(EdgeId(3), EdgeId(4), Assignment({1, 1, -1, -1}), Assignment({1, 1, 1, -1}), ones));
    EXPECT_THROW(referee(EdgeId(2), EdgeId(2), z, z, ones), InvalidArgument);
}

TEST(Referee, GeneralizedIntersectionRule) {
    const GameParams p({1, 1, 1, 1, -1, 1});  // α3 = -1, so L(IIX) = -1
    const Assignment z({1, 1, 1, 1});
    EXPECT_FALSE(referee(EdgeId(0), EdgeId(1), z, z, p));
    EXPECT_TRUE(referee(EdgeId(0), EdgeId(1), z, Assignment({-1, -1, 1, 1}), p));
}

TEST(Referee, SameEdgeNeedsAgreementEverywhere) {
    const GameParams ones;
    const Assignment z({1, -1, -1, 1});
    EXPECT_TRUE(referee_same_edge(EdgeId(2), z, z, ones));
    EXPECT_FALSE(referee_same_edge(EdgeId(2), z, Assignment({-1, 1, -1, 1}), ones));
    EXPECT_TRUE(referee_questions(EdgeId(2), EdgeId(2), z, z, ones));
}

TEST(ViolatedEdges, AlwaysOdd) {
    for (unsigned mask = 0; mask < (1u << kNumVertices); ++mask) {
        std::vector<int> labels(kNumVertices);
        for (int v = 0; v < kNumVertices; ++v) labels[static_cast<std::size_t>(v)] = (mask >> v) & 1 ? -1 : 1;
        ASSERT_EQ(violated_edges(labels).size() % 2, 1u);
    }
    EXPECT_THROW(violated_edges({1, 1}), InvalidArgument);
}

TEST(BruteForce, DistinctPairsMatchesOracle) {
    const auto r = brute_force_optimal(GameParams());
    EXPECT_EQ(r.wins, kOracleDistinctWins);
    EXPECT_EQ(r.questions, 20);
    EXPECT_EQ(win_probability(r.alice, r.bob, GameParams()), r.max_prob);
}

TEST(BruteForce, AllPairsMatchesOracle) {
    const auto r = brute_force_optimal(GameParams(), QuestionSet::AllPairs);
    EXPECT_EQ(r.wins, kOracleAllPairsWins);
    EXPECT_EQ(r.max_prob, Rational(23, 25));
    EXPECT_EQ(win_probability(r.alice, r.bob, GameParams(), QuestionSet::AllPairs), r.max_prob);
    EXPECT_LE(r.max_prob, Rational(19, 20));
}

TEST(BruteForce, ValueDoesNotDependOnParameters) {
    for (unsigned idx = 0; idx < 64; ++idx) {
        const GameParams p = GameParams::from_index(idx);
        const auto r = brute_force_optimal(p);
        ASSERT_EQ(r.wins, kOracleDistinctWins) << idx;
        ASSERT_EQ(win_probability(r.alice, r.bob, p), r.max_prob);
    }
    for (unsigned idx : {1u, 22u, 63u}) {
        EXPECT_EQ(brute_force_optimal(GameParams::from_index(idx), QuestionSet::AllPairs).wins, kOracleAllPairsWins);
    }
}

TEST(BruteForce, ThreadCountDoesNotChangeTheWitness) {
    const auto one = brute_force_optimal(GameParams(), QuestionSet::AllPairs, 1);
    const auto four = brute_force_optimal(GameParams(), QuestionSet::AllPairs, 4);
    EXPECT_EQ(strategy_to_json(one.alice), strategy_to_json(four.alice));
    EXPECT_EQ(strategy_to_json(one.bob), strategy_to_json(four.bob));
}

TEST(BruteForce, SharedStrategiesDoWorse) {
    // A single edge map used by both players.
    std::int64_t best = 0;
    for (std::uint32_t idx = 0; idx < (1u << 20); ++idx) {
        DeterministicStrategy s;
        for (int e = 0; e < kNumEdges; ++e)
            s.edges[static_cast<std::size_t>(e)] = Assignment::from_mask((idx >> (4 * e)) & 15u);
        const auto p = win_probability(s, s, GameParams());
        best = std::max(best, p.num() * (20 / p.den()));
    }
    EXPECT_EQ(best, 18);
}

TEST(Strategy, JsonRoundTrip) {
    const auto r = brute_force_optimal(GameParams());
    const auto back = strategy_from_json(strategy_to_json(r.bob));
    EXPECT_EQ(back.player, Player::Bob);
    EXPECT_EQ(back.edges, r.bob.edges);
}

TEST(Strategy, MalformedJsonIsRejected) {
    EXPECT_THROW(strategy_from_json("{"), InvalidArgument);
    EXPECT_THROW(strategy_from_json(R"({"player":"C","edges":{}})"), InvalidArgument);
    EXPECT_THROW(strategy_from_json(R"({"player":"A","edges":{"0":[1,1,1,1]}})"), InvalidArgument);
    EXPECT_THROW(strategy_from_json(
                     R"({"player":"A","edges":{"0":[1,1,1,1],"1":[1,1,1,1],"2":[1,1,1,1],"3":[1,1,1,1],"4":[1,1,1,2]}})"),
                 InvalidArgument);
}

TEST(Assignment, MaskRoundTrip) {
    for (unsigned m = 0; m < 16; ++m) EXPECT_EQ(Assignment::from_mask(m).mask(), m);
    EXPECT_EQ(Assignment::from_mask(0b0101).values(), (std::array<int, 4>{-1, 1, -1, 1}));
    EXPECT_THROW(Assignment::from_mask(16), InvalidArgument);
}

}  // namespace
}  // namespace pentagram::game
