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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pentagram/pauli.hpp"
#include "pentagram/rational.hpp"

namespace pentagram::game {

inline constexpr int kNumEdges = 5;
inline constexpr int kNumVertices = 10;

// A hyperedge, 0..4, with the 3-bit code 000..100. Codes 101, 110 and 111
// are idle and never name an edge.
class EdgeId {
  public:
    constexpr EdgeId() = default;
    explicit EdgeId(int id);
    static EdgeId from_code(int code);          // 0..4
    static EdgeId from_code(const std::string& bits);  // "000".."100"
    static bool is_edge_code(int code) { return code >= 0 && code < kNumEdges; }

    int value() const { return id_; }
    int code() const { return id_; }
    std::string code_str() const;

    friend bool operator==(EdgeId, EdgeId) = default;

  private:
    int id_ = 0;
};

// (α1, β1, α2, β2, α3, β3), each ±1.
class GameParams {
  public:
    GameParams() { values_.fill(1); }
    explicit GameParams(const std::array<int, 6>& values);
    static GameParams from_index(unsigned bits);  // bit i set -> component i = -1

    int alpha(int s) const { return values_.at(2 * (s - 1)); }  // s in 1..3
    int beta(int s) const { return values_.at(2 * (s - 1) + 1); }
    const std::array<int, 6>& values() const { return values_; }
    bool all_ones() const;

    friend bool operator==(const GameParams&, const GameParams&) = default;

  private:
    std::array<int, 6> values_;
};

// Four ±1 answers indexed by o-rank (index 0 holds rank 1).
class Assignment {
  public:
    Assignment() { v_.fill(1); }
    explicit Assignment(const std::array<int, 4>& values);
    static Assignment from_mask(unsigned mask);  // bit r set -> rank r+1 is -1

    int at_rank(int rank) const { return v_.at(rank - 1); }  // rank in 1..4
    unsigned mask() const;
    int product() const { return v_[0] * v_[1] * v_[2] * v_[3]; }
    const std::array<int, 4>& values() const { return v_; }

    friend bool operator==(const Assignment&, const Assignment&) = default;

  private:
    std::array<int, 4> v_;
};

enum class Player : std::uint8_t { Alice, Bob };

struct DeterministicStrategy {
    Player player = Player::Alice;
    std::array<Assignment, kNumEdges> edges{};

    const Assignment& operator()(EdgeId s) const { return edges[static_cast<std::size_t>(s.value())]; }
};

struct Vertex {
    int vid;
    PauliWord observable;  // 3 qubits, factors in {I, X, Z}, sign +1
    std::array<EdgeId, 2> edges;
};

// The canonical pentagram: observables, the ordered hyperedges, e and o.
class Pentagram {
  public:
    static const Pentagram& canonical();

    const Vertex& vertex(int vid) const { return vertices_.at(static_cast<std::size_t>(vid)); }
    const std::array<Vertex, kNumVertices>& vertices() const { return vertices_; }
    // Vertex ids of edge s, in o-rank order.
    const std::array<int, 4>& edge(EdgeId s) const { return edges_[static_cast<std::size_t>(s.value())]; }
    int vertex_at_rank(EdgeId s, int rank) const { return edge(s).at(static_cast<std::size_t>(rank - 1)); }

    static int e(EdgeId s) { return s.value() == 4 ? -1 : 1; }
    // o_s(t) in 1..4; throws for s == t.
    static int order(EdgeId s, EdgeId t);
    const Vertex& intersection(EdgeId x, EdgeId y) const;

  private:
    Pentagram();
    void verify() const;

    std::array<Vertex, kNumVertices> vertices_;
    std::array<std::array<int, 4>, kNumEdges> edges_;
};

inline const Pentagram& build_pentagram() { return Pentagram::canonical(); }

// Product of α_j over X factors and β_k over Z factors of the vertex observable.
int l_value_vertex(int vid, const GameParams& p);
int l_value(EdgeId x, EdgeId y, const GameParams& p);

// Generalized referee; with all-ones parameters it is the original game.
bool referee(EdgeId x, EdgeId y, const Assignment& z, const Assignment& w, const GameParams& p);

// Win rule when both players receive the same edge (only reachable with
// QuestionSet::AllPairs): parities hold and z^r w^r = L(vertex at rank r)
// for every rank.
bool referee_same_edge(EdgeId x, const Assignment& z, const Assignment& w, const GameParams& p);

// Edges whose labeling product differs from e(s); always odd in size.
std::vector<EdgeId> violated_edges(const std::vector<int>& labeling);

// DistinctPairs: the 20 ordered pairs x != y. AllPairs: all 25 pairs, the
// distribution that the instance set S induces on (x_k, y_l).
enum class QuestionSet : std::uint8_t { DistinctPairs, AllPairs };

bool referee_questions(EdgeId x, EdgeId y, const Assignment& z, const Assignment& w,
                       const GameParams& p);

Rational win_probability(const DeterministicStrategy& a, const DeterministicStrategy& b,
                         const GameParams& p, QuestionSet q = QuestionSet::DistinctPairs);

struct OptimumResult {
    Rational max_prob;
    std::int64_t wins = 0;
    std::int64_t questions = 0;
    DeterministicStrategy alice;
    DeterministicStrategy bob;
};

// Exact optimum over deterministic strategy pairs: every one of Alice's 16^5
// edge maps, each against Bob's per-edge best response.
OptimumResult brute_force_optimal(const GameParams& p, QuestionSet q = QuestionSet::DistinctPairs,
                                  unsigned threads = 1);

std::string strategy_to_json(const DeterministicStrategy& s);
DeterministicStrategy strategy_from_json(const std::string& text);

}  // namespace pentagram::game
