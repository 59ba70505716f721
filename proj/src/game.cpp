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

#include "pentagram/game.hpp"

#include <algorithm>
#include <thread>

#include "json.hpp"
#include "pentagram/error.hpp"

namespace pentagram::game {

EdgeId::EdgeId(int id) : id_(id) {
    if (id < 0 || id >= kNumEdges) throw InvalidArgument("edge id must be in 0..4, got " + std::to_string(id));
}

EdgeId EdgeId::from_code(int code) { return EdgeId(code); }

EdgeId EdgeId::from_code(const std::string& bits) {
    if (bits.size() != 3 || bits.find_first_not_of("01") != std::string::npos)
        throw InvalidArgument("edge code must be three bits, got '" + bits + "'");
    return EdgeId(std::stoi(bits, nullptr, 2));
}

std::string EdgeId::code_str() const {
    std::string s(3, '0');
    for (int b = 0; b < 3; ++b)
        if (id_ & (4 >> b)) s[static_cast<std::size_t>(b)] = '1';
    return s;
}

GameParams::GameParams(const std::array<int, 6>& values) : values_(values) {
    for (int v : values_)
        if (v != 1 && v != -1) throw InvalidArgument("game parameters must be ±1");
}

GameParams GameParams::from_index(unsigned bits) {
    std::array<int, 6> v{};
    for (unsigned i = 0; i < 6; ++i) v[i] = (bits >> i) & 1 ? -1 : 1;
    return GameParams(v);
}

bool GameParams::all_ones() const {
    return std::all_of(values_.begin(), values_.end(), [](int v) { return v == 1; });
}

Assignment::Assignment(const std::array<int, 4>& values) : v_(values) {
    for (int v : v_)
        if (v != 1 && v != -1) throw InvalidArgument("assignment values must be ±1");
}

Assignment Assignment::from_mask(unsigned mask) {
    if (mask > 15) throw InvalidArgument("assignment mask out of range");
    std::array<int, 4> v{};
    for (unsigned r = 0; r < 4; ++r) v[r] = (mask >> r) & 1 ? -1 : 1;
    return Assignment(v);
}

unsigned Assignment::mask() const {
    unsigned m = 0;
    for (unsigned r = 0; r < 4; ++r)
        if (v_[r] == -1) m |= 1u << r;
    return m;
}

namespace {

// Vertex observables and the unordered hyperedges they sit on.
constexpr std::array<const char*, kNumVertices> kObservables = {
    "XII", "IXI", "IIX", "ZII", "IZI", "IIZ", "ZXX", "XZX", "XXZ", "ZZZ"};
constexpr std::array<std::array<int, 4>, kNumEdges> kEdgeSets = {{
    {3, 1, 2, 6},
    {0, 4, 2, 7},
    {0, 1, 5, 8},
    {3, 4, 5, 9},
    {6, 7, 8, 9},
}};

}  // namespace

Pentagram::Pentagram() {
    for (int v = 0; v < kNumVertices; ++v) {
        std::vector<int> on;
        for (int s = 0; s < kNumEdges; ++s)
            if (std::find(kEdgeSets[s].begin(), kEdgeSets[s].end(), v) != kEdgeSets[s].end()) on.push_back(s);
        PENTAGRAM_CHECK(on.size() == 2, "vertex must lie on exactly two edges");
        vertices_[static_cast<std::size_t>(v)] =
            Vertex{v, PauliWord::parse(kObservables[static_cast<std::size_t>(v)]), {EdgeId(on[0]), EdgeId(on[1])}};
    }
    for (int s = 0; s < kNumEdges; ++s) {
        for (int t = 0; t < kNumEdges; ++t) {
            if (s == t) continue;
            edges_[static_cast<std::size_t>(s)][static_cast<std::size_t>(order(EdgeId(s), EdgeId(t)) - 1)] =
                intersection(EdgeId(s), EdgeId(t)).vid;
        }
    }
    verify();
}

const Pentagram& Pentagram::canonical() {
    static const Pentagram instance;
    return instance;
}

int Pentagram::order(EdgeId s, EdgeId t) {
    if (s == t) throw InvalidArgument("o_s(t) needs s != t");
    // ascending rank of t within {0..4} \ {s}
    return t.value() < s.value() ? t.value() + 1 : t.value();
}

const Vertex& Pentagram::intersection(EdgeId x, EdgeId y) const {
    if (x == y) throw InvalidArgument("intersection needs two distinct edges");
    for (const Vertex& v : vertices_)
        if ((v.edges[0] == x && v.edges[1] == y) || (v.edges[0] == y && v.edges[1] == x)) return v;
    throw InternalError("edges do not intersect");
}

void Pentagram::verify() const {
    for (int s = 0; s < kNumEdges; ++s) {
        const auto& vs = edges_[static_cast<std::size_t>(s)];
        PauliWord prod(3);
        for (int a = 0; a < 4; ++a) {
            const PauliWord& oa = vertex(vs[static_cast<std::size_t>(a)]).observable;
            PENTAGRAM_CHECK(oa.is_hermitian() && oa.sign() == 1, "observable must carry sign +1");
            for (int q = 0; q < 3; ++q) PENTAGRAM_CHECK(oa.get(static_cast<std::size_t>(q)) != Pauli::Y, "no Y factors");
            for (int b = a + 1; b < 4; ++b)
                PENTAGRAM_CHECK(commutes(oa, vertex(vs[static_cast<std::size_t>(b)]).observable),
                                "observables on an edge must commute");
            prod *= oa;
        }
        PENTAGRAM_CHECK(prod.is_identity() && prod.is_hermitian() && prod.sign() == e(EdgeId(s)),
                        "edge product must equal e(s) times identity");
    }
    for (int s = 0; s < kNumEdges; ++s) {
        for (int t = s + 1; t < kNumEdges; ++t) {
            int shared = 0;
            for (int v : edges_[static_cast<std::size_t>(s)])
                shared += static_cast<int>(std::count(edges_[static_cast<std::size_t>(t)].begin(),
                                                      edges_[static_cast<std::size_t>(t)].end(), v));
            PENTAGRAM_CHECK(shared == 1, "distinct edges must share exactly one vertex");
        }
    }
}

int l_value_vertex(int vid, const GameParams& p) {
    const PauliWord& o = Pentagram::canonical().vertex(vid).observable;
    int v = 1;
    for (int q = 0; q < 3; ++q) {
        if (o.x_bit(static_cast<std::size_t>(q))) v *= p.alpha(q + 1);
        if (o.z_bit(static_cast<std::size_t>(q))) v *= p.beta(q + 1);
    }
    return v;
}

int l_value(EdgeId x, EdgeId y, const GameParams& p) {
    return l_value_vertex(Pentagram::canonical().intersection(x, y).vid, p);
}

bool referee(EdgeId x, EdgeId y, const Assignment& z, const Assignment& w, const GameParams& p) {
    if (x == y) throw InvalidArgument("referee needs distinct edges");
    if (z.product() != Pentagram::e(x) || w.product() != Pentagram::e(y)) return false;
    return z.at_rank(Pentagram::order(x, y)) * w.at_rank(Pentagram::order(y, x)) == l_value(x, y, p);
}

bool referee_same_edge(EdgeId x, const Assignment& z, const Assignment& w, const GameParams& p) {
    if (z.product() != Pentagram::e(x) || w.product() != Pentagram::e(x)) return false;
    const Pentagram& pg = Pentagram::canonical();
    for (int r = 1; r <= 4; ++r)
        if (z.at_rank(r) * w.at_rank(r) != l_value_vertex(pg.vertex_at_rank(x, r), p)) return false;
    return true;
}

bool referee_questions(EdgeId x, EdgeId y, const Assignment& z, const Assignment& w, const GameParams& p) {
    return x == y ? referee_same_edge(x, z, w, p) : referee(x, y, z, w, p);
}

std::vector<EdgeId> violated_edges(const std::vector<int>& labeling) {
    if (labeling.size() != kNumVertices) throw InvalidArgument("labeling must cover all 10 vertices");
    for (int v : labeling)
        if (v != 1 && v != -1) throw InvalidArgument("labeling values must be ±1");
    std::vector<EdgeId> out;
    const Pentagram& pg = Pentagram::canonical();
    for (int s = 0; s < kNumEdges; ++s) {
        int prod = 1;
        for (int v : pg.edge(EdgeId(s))) prod *= labeling[static_cast<std::size_t>(v)];
        if (prod != Pentagram::e(EdgeId(s))) out.push_back(EdgeId(s));
    }
    PENTAGRAM_CHECK(out.size() % 2 == 1, "parity argument violated");
    return out;
}

namespace {

bool asks(QuestionSet q, int x, int y) { return q == QuestionSet::AllPairs || x != y; }

std::int64_t question_count(QuestionSet q) { return q == QuestionSet::AllPairs ? 25 : 20; }

}  // namespace

Rational win_probability(const DeterministicStrategy& a, const DeterministicStrategy& b, const GameParams& p,
                         QuestionSet q) {
    std::int64_t wins = 0;
    for (int x = 0; x < kNumEdges; ++x)
        for (int y = 0; y < kNumEdges; ++y)
            if (asks(q, x, y) && referee_questions(EdgeId(x), EdgeId(y), a(EdgeId(x)), b(EdgeId(y)), p)) ++wins;
    return Rational(wins, question_count(q));
}

namespace {

struct SearchBest {
    int wins = -1;
    std::uint32_t alice = 0;
};

// win[x][y][a][b] for masks a, b.
using WinTable = std::array<std::array<std::array<std::array<std::uint8_t, 16>, 16>, kNumEdges>, kNumEdges>;

int score_alice(const WinTable& win, QuestionSet q, std::uint32_t index, std::array<unsigned, kNumEdges>* bob) {
    std::array<unsigned, kNumEdges> a{};
    for (int x = 0; x < kNumEdges; ++x) a[static_cast<std::size_t>(x)] = (index >> (4 * x)) & 15u;
    int total = 0;
    for (int y = 0; y < kNumEdges; ++y) {
        int best = -1;
        unsigned arg = 0;
        for (unsigned b = 0; b < 16; ++b) {
            int s = 0;
            for (int x = 0; x < kNumEdges; ++x)
                if (asks(q, x, y)) s += win[x][y][a[static_cast<std::size_t>(x)]][b];
            if (s > best) {
                best = s;
                arg = b;
            }
        }
        total += best;
        if (bob) (*bob)[static_cast<std::size_t>(y)] = arg;
    }
    return total;
}

}  // namespace

OptimumResult brute_force_optimal(const GameParams& p, QuestionSet q, unsigned threads) {
    WinTable win{};
    for (int x = 0; x < kNumEdges; ++x)
        for (int y = 0; y < kNumEdges; ++y)
            if (asks(q, x, y))
                for (unsigned a = 0; a < 16; ++a)
                    for (unsigned b = 0; b < 16; ++b)
                        win[x][y][a][b] = referee_questions(EdgeId(x), EdgeId(y), Assignment::from_mask(a),
                                                            Assignment::from_mask(b), p);

    constexpr std::uint32_t kAliceStrategies = 1u << (4 * kNumEdges);
    threads = std::max(1u, threads);
    std::vector<SearchBest> partial(threads);
    auto worker = [&](unsigned t) {
        SearchBest best;
        for (std::uint32_t i = t; i < kAliceStrategies; i += threads) {
            const int s = score_alice(win, q, i, nullptr);
            if (s > best.wins) best = {s, i};
        }
        partial[t] = best;
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    // Max with smallest index wins ties, independent of the partitioning.
    SearchBest best;
    for (const auto& b : partial)
        if (b.wins > best.wins || (b.wins == best.wins && b.alice < best.alice)) best = b;

    OptimumResult r;
    std::array<unsigned, kNumEdges> bob{};
    score_alice(win, q, best.alice, &bob);
    r.alice.player = Player::Alice;
    r.bob.player = Player::Bob;
    for (int s = 0; s < kNumEdges; ++s) {
        r.alice.edges[static_cast<std::size_t>(s)] = Assignment::from_mask((best.alice >> (4 * s)) & 15u);
        r.bob.edges[static_cast<std::size_t>(s)] = Assignment::from_mask(bob[static_cast<std::size_t>(s)]);
    }
    r.wins = best.wins;
    r.questions = question_count(q);
    r.max_prob = Rational(r.wins, r.questions);
    PENTAGRAM_CHECK(win_probability(r.alice, r.bob, p, q) == r.max_prob, "witness does not reproduce optimum");
    return r;
}

std::string strategy_to_json(const DeterministicStrategy& s) {
    nlohmann::ordered_json j;
    j["player"] = s.player == Player::Alice ? "A" : "B";
    nlohmann::ordered_json edges = nlohmann::ordered_json::object();
    for (int e = 0; e < kNumEdges; ++e) {
        const auto& v = s.edges[static_cast<std::size_t>(e)].values();
        edges[std::to_string(e)] = std::vector<int>(v.begin(), v.end());
    }
    j["edges"] = edges;
    return j.dump();
}

DeterministicStrategy strategy_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("strategy JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("player") || !j.contains("edges") || !j["edges"].is_object())
        throw InvalidArgument("strategy JSON needs \"player\" and \"edges\"");
    DeterministicStrategy s;
    const auto player = j["player"];
    if (player == "A") s.player = Player::Alice;
    else if (player == "B") s.player = Player::Bob;
    else throw InvalidArgument("strategy player must be \"A\" or \"B\"");
    for (int e = 0; e < kNumEdges; ++e) {
        const auto key = std::to_string(e);
        if (!j["edges"].contains(key)) throw InvalidArgument("strategy is missing edge " + key);
        const auto& arr = j["edges"][key];
        if (!arr.is_array() || arr.size() != 4) throw InvalidArgument("edge " + key + " needs four values");
        std::array<int, 4> v{};
        for (std::size_t r = 0; r < 4; ++r) {
            if (!arr[r].is_number_integer()) throw InvalidArgument("edge values must be ±1 integers");
            v[r] = arr[r].get<int>();
        }
        s.edges[static_cast<std::size_t>(e)] = Assignment(v);
    }
    if (j["edges"].size() != kNumEdges) throw InvalidArgument("strategy has unknown edges");
    return s;
}

}  // namespace pentagram::game
