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

#include "pentagram/mpp.hpp"

#include <array>

#include "json.hpp"
#include "pentagram/error.hpp"
#include "pentagram/statevector.hpp"

namespace pentagram::mpp {

using game::Assignment;
using game::EdgeId;
using game::GameParams;
using game::Pentagram;

namespace {

void check_code(int c) {
    if (c < 0 || c > 7) throw InvalidArgument("block codes are 3-bit values, got " + std::to_string(c));
}

std::string code_bits(int c) {
    std::string s(3, '0');
    for (int b = 0; b < 3; ++b)
        if (c & (4 >> b)) s[static_cast<std::size_t>(b)] = '1';
    return s;
}

int parse_code(const std::string& s) {
    if (s.size() != 3 || s.find_first_not_of("01") != std::string::npos)
        throw InvalidArgument("block code must be three bits, got '" + s + "'");
    return std::stoi(s, nullptr, 2);
}

std::vector<int> parse_bits(const std::string& bits) {
    std::vector<int> out;
    out.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') throw InvalidArgument("bit strings may only contain 0 and 1");
        out.push_back(c - '0');
    }
    return out;
}

}  // namespace

MppInput::MppInput(std::vector<int> x, std::vector<int> y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_.size() != y_.size()) throw InvalidArgument("x and y must have the same block count");
    if (x_.size() < 2) throw InvalidArgument("the problem needs n >= 2 blocks");
    for (int c : x_) check_code(c);
    for (int c : y_) check_code(c);
}

MppInput MppInput::from_bits(const std::string& bits) {
    if (bits.size() % 6 != 0) throw InvalidArgument("input length must be 6n, got " + std::to_string(bits.size()));
    const auto b = parse_bits(bits);
    const std::size_t n = b.size() / 6;
    std::vector<int> x(n), y(n);
    for (std::size_t j = 0; j < 2 * n; ++j) {
        const int c = 4 * b[3 * j] + 2 * b[3 * j + 1] + b[3 * j + 2];
        (j < n ? x[j] : y[j - n]) = c;
    }
    return MppInput(std::move(x), std::move(y));
}

MppInput MppInput::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("input JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("x") || !j.contains("y") || !j["x"].is_array() || !j["y"].is_array())
        throw InvalidArgument("input JSON needs \"x\" and \"y\" arrays");
    std::vector<int> x, y;
    for (const auto& c : j["x"]) x.push_back(parse_code(c.get<std::string>()));
    for (const auto& c : j["y"]) y.push_back(parse_code(c.get<std::string>()));
    if (j.contains("n") && j["n"].get<std::size_t>() != x.size())
        throw InvalidArgument("input JSON: n does not match the block count");
    return MppInput(std::move(x), std::move(y));
}

std::string MppInput::bits() const {
    std::string s;
    for (int c : x_) s += code_bits(c);
    for (int c : y_) s += code_bits(c);
    return s;
}

std::string MppInput::json() const {
    nlohmann::ordered_json j;
    j["n"] = n();
    std::vector<std::string> xs, ys;
    for (int c : x_) xs.push_back(code_bits(c));
    for (int c : y_) ys.push_back(code_bits(c));
    j["x"] = xs;
    j["y"] = ys;
    return j.dump();
}

MppOutput MppOutput::from_bits(const std::string& bits) {
    if (bits.size() % 6 != 0 || bits.empty())
        throw InvalidArgument("output length must be 6n, got " + std::to_string(bits.size()));
    MppOutput out(bits.size() / 6);
    const auto b = parse_bits(bits);
    for (std::size_t i = 0; i < b.size(); ++i) out.set_bit(i, b[i]);
    return out;
}

std::string MppOutput::bits() const {
    std::string s;
    s.reserve(bits_.size());
    for (int b : bits_) s += static_cast<char>('0' + b);
    return s;
}

std::size_t output_qubit(std::size_t n, std::size_t pos) {
    if (pos >= 6 * n) throw InvalidArgument("output position out of range");
    const int row = static_cast<int>(pos % 3) + 1;
    if (pos < 3 * n) return qubit_index(row, 2 * (pos / 3 + 1) - 1);
    return qubit_index(row, 2 * ((pos - 3 * n) / 3 + 1));
}

std::optional<SubsetIndex> subset_of(const MppInput& x) {
    std::optional<std::size_t> k, l;
    for (std::size_t j = 1; j <= x.n(); ++j) {
        if (x.x(j) != kIdleCode) {
            if (k || !EdgeId::is_edge_code(x.x(j))) return std::nullopt;
            k = j;
        }
        if (x.y(j) != kIdleCode) {
            if (l || !EdgeId::is_edge_code(x.y(j))) return std::nullopt;
            l = j;
        }
    }
    if (!k || !l || *k >= *l) return std::nullopt;
    return SubsetIndex{*k, *l};
}

MppInput sample_Skl(std::size_t n, std::size_t k, std::size_t l, Rng& rng) {
    if (n < 2) throw InvalidArgument("S needs n >= 2");
    if (k < 1 || k >= l || l > n) throw InvalidArgument("S_{k,l} needs 1 <= k < l <= n");
    std::vector<int> x(n, kIdleCode), y(n, kIdleCode);
    x[k - 1] = static_cast<int>(rng.below(game::kNumEdges));
    y[l - 1] = static_cast<int>(rng.below(game::kNumEdges));
    return MppInput(std::move(x), std::move(y));
}

MppInput sample_S(std::size_t n, Rng& rng) {
    if (n < 2) throw InvalidArgument("S needs n >= 2");
    // Uniform over the n(n-1)/2 pairs k < l.
    std::uint64_t idx = rng.below(n * (n - 1) / 2);
    std::size_t k = 1;
    while (idx >= n - k) {
        idx -= n - k;
        ++k;
    }
    return sample_Skl(n, k, k + 1 + static_cast<std::size_t>(idx), rng);
}

std::vector<MppInput> enumerate_Skl(std::size_t n, std::size_t k, std::size_t l) {
    if (n < 2 || k < 1 || k >= l || l > n) throw InvalidArgument("S_{k,l} needs 1 <= k < l <= n");
    std::vector<MppInput> out;
    for (int a = 0; a < game::kNumEdges; ++a) {
        for (int b = 0; b < game::kNumEdges; ++b) {
            std::vector<int> x(n, kIdleCode), y(n, kIdleCode);
            x[k - 1] = a;
            y[l - 1] = b;
            out.emplace_back(std::move(x), std::move(y));
        }
    }
    return out;
}

namespace {

std::array<CliffordOp, 8> build_u_table() {
    std::array<CliffordOp, 8> table;
    const Pentagram& pg = Pentagram::canonical();
    for (int c = 0; c < 8; ++c) {
        if (!EdgeId::is_edge_code(c)) {
            table[static_cast<std::size_t>(c)] = CliffordOp::identity(3);
            continue;
        }
        std::vector<PauliWord> targets;
        for (int r = 1; r <= 3; ++r) targets.push_back(pg.vertex(pg.vertex_at_rank(EdgeId(c), r)).observable);
        table[static_cast<std::size_t>(c)] = clifford_from_z_images(targets);
    }
    return table;
}

std::array<std::array<CliffordOp, 8>, 8> build_v_table() {
    std::array<std::array<CliffordOp, 8>, 8> table;
    for (int y = 0; y < 8; ++y) {
        for (int x = 0; x < 8; ++x) {
            if (!v_swaps(y, x)) {
                table[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = CliffordOp::identity(6);
                continue;
            }
            // M14 M25 M36 [U(y)† ⊗ U(x)†], M_ij = (H_i ⊗ I) CNOT_ij
            std::vector<Gate> gates = u_gate(y).adjoint().tensor(u_gate(x).adjoint()).gates();
            for (std::uint32_t s = 0; s < 3; ++s) {
                gates.push_back({GateKind::CNOT, s, s + 3});
                gates.push_back({GateKind::H, s});
            }
            table[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = CliffordOp(6, std::move(gates));
        }
    }
    return table;
}

const CliffordOp& bell_pair_op() {
    static const CliffordOp op(2, {{GateKind::H, 0}, {GateKind::CNOT, 0, 1}});
    return op;
}

std::vector<std::size_t> column(std::size_t t) {
    return {qubit_index(1, t), qubit_index(2, t), qubit_index(3, t)};
}

}  // namespace

const CliffordOp& u_gate(int code) {
    check_code(code);
    static const std::array<CliffordOp, 8> table = build_u_table();
    return table[static_cast<std::size_t>(code)];
}

bool v_swaps(int y_code, int x_code) {
    check_code(y_code);
    check_code(x_code);
    return (is_idle(y_code) && is_idle(x_code)) || x_code == y_code;
}

const CliffordOp& v_gate(int y_code, int x_code) {
    check_code(y_code);
    check_code(x_code);
    static const auto table = build_v_table();
    return table[static_cast<std::size_t>(y_code)][static_cast<std::size_t>(x_code)];
}

MppPlan build_mpp_circuit(const MppInput& x) {
    MppPlan plan;
    plan.n = x.n();
    const std::size_t n = x.n();
    for (std::size_t j = 1; j <= n; ++j)
        for (int s = 1; s <= 3; ++s)
            plan.ops.push_back({Stage::BellPairs, &bell_pair_op(), {qubit_index(s, 2 * j - 1), qubit_index(s, 2 * j)}});
    for (std::size_t j = 1; j <= n; ++j) {
        plan.ops.push_back({Stage::LocalBasis, &u_gate(x.x(j)), column(2 * j - 1)});
        plan.ops.push_back({Stage::LocalBasis, &u_gate(x.y(j)), column(2 * j)});
    }
    for (std::size_t j = 1; j < n; ++j) {
        auto qs = column(2 * j);
        const auto right = column(2 * j + 1);
        qs.insert(qs.end(), right.begin(), right.end());
        plan.ops.push_back({Stage::Swapping, &v_gate(x.y(j), x.x(j + 1)), std::move(qs)});
    }
    return plan;
}

Circuit MppPlan::circuit(bool include_local_basis) const {
    Circuit c{num_qubits(), {}};
    for (const auto& op : ops)
        if (include_local_basis || op.stage != Stage::LocalBasis) c.append(op.op->as_circuit(), op.qubits);
    return c;
}

StabilizerState prepare_mpp_state(const MppInput& x) {
    const MppPlan plan = build_mpp_circuit(x);
    StabilizerState st(plan.num_qubits());
    for (const auto& op : plan.ops) st.apply(*op.op, op.qubits);
    return st;
}

namespace {

std::uint64_t output_index_to_basis(std::size_t n, const MppOutput& z) {
    std::uint64_t idx = 0;
    for (std::size_t pos = 0; pos < 6 * n; ++pos)
        if (z.bit(pos)) idx |= std::uint64_t{1} << output_qubit(n, pos);
    return idx;
}

MppOutput basis_to_output(std::size_t n, std::uint64_t idx) {
    MppOutput z(n);
    for (std::size_t pos = 0; pos < 6 * n; ++pos) z.set_bit(pos, static_cast<int>((idx >> output_qubit(n, pos)) & 1));
    return z;
}

StateVector dense_state(const MppInput& x) {
    if (6 * x.n() > StateVector::kMaxQubits)
        throw DomainError("statevector backend supports n <= 3, got n = " + std::to_string(x.n()));
    return statevector_run(build_mpp_circuit(x).circuit());
}

}  // namespace

MppOutput run_mpp(const MppInput& x, Backend backend, Rng& rng) {
    const std::size_t n = x.n();
    if (backend == Backend::StateVector) return basis_to_output(n, dense_state(x).sample(rng));
    StabilizerState st = prepare_mpp_state(x);
    MppOutput z(n);
    for (std::size_t pos = 0; pos < 6 * n; ++pos) z.set_bit(pos, st.measure_z(output_qubit(n, pos), rng));
    return z;
}

double output_probability(const MppInput& x, const MppOutput& z) {
    if (z.n() != x.n()) throw InvalidArgument("input and output block counts differ");
    const StateVector sv = dense_state(x);
    return std::norm(sv.amplitudes()[output_index_to_basis(x.n(), z)]);
}

std::map<std::string, double> exact_distribution(const MppInput& x) {
    std::map<std::string, double> out;
    for (const auto& [idx, p] : dense_state(x).distribution()) out.emplace(basis_to_output(x.n(), idx).bits(), p);
    return out;
}

GameParams extract_params(const MppOutput& z, std::size_t k, std::size_t l) {
    if (k < 1 || k >= l || l > z.n()) throw InvalidArgument("extract_params needs 1 <= k < l <= n");
    std::array<int, 6> v{};
    for (int i = 1; i <= 3; ++i) {
        int a = 1, b = 1;
        for (std::size_t j = k; j < l; ++j) {
            a *= z.w(j, i);
            b *= z.z(j + 1, i);
        }
        v[static_cast<std::size_t>(2 * (i - 1))] = a;
        v[static_cast<std::size_t>(2 * (i - 1) + 1)] = b;
    }
    return GameParams(v);
}

Assignment completed_z(const MppOutput& out, std::size_t k, EdgeId edge) {
    const int a = out.z(k, 1), b = out.z(k, 2), c = out.z(k, 3);
    return Assignment({a, b, c, a * b * c * Pentagram::e(edge)});
}

Assignment completed_w(const MppOutput& out, std::size_t l, EdgeId edge) {
    const int a = out.w(l, 1), b = out.w(l, 2), c = out.w(l, 3);
    return Assignment({a, b, c, a * b * c * Pentagram::e(edge)});
}

bool verify_game_relation(const MppInput& x, const MppOutput& z) {
    if (z.n() != x.n()) throw InvalidArgument("input and output block counts differ");
    const auto kl = subset_of(x);
    if (!kl) throw InvalidArgument("verify_game_relation needs an input from S");
    const EdgeId xe(x.x(kl->k)), ye(x.y(kl->l));
    const GameParams p = extract_params(z, kl->k, kl->l);
    const Assignment zq = completed_z(z, kl->k, xe);
    const Assignment wq = completed_w(z, kl->l, ye);
    PENTAGRAM_CHECK(zq.product() == Pentagram::e(xe) && wq.product() == Pentagram::e(ye),
                    "completed quadruple violates its parity");
    return game::referee_questions(xe, ye, zq, wq, p);
}

bool verify_support(const MppInput& x, const MppOutput& z) {
    if (z.n() != x.n()) return false;
    StabilizerState st = prepare_mpp_state(x);
    for (std::size_t pos = 0; pos < 6 * x.n(); ++pos)
        if (st.postselect_z(output_qubit(x.n(), pos), z.bit(pos)) == BranchWeight::Zero) return false;
    return true;
}

Circuit prepare_phi_circuit(int alpha, int beta) {
    if ((alpha != 1 && alpha != -1) || (beta != 1 && beta != -1)) throw InvalidArgument("α, β must be ±1");
    // |Φ_{α,β}> = CNOT (H ⊗ I) |(1-α)/2, (1-β)/2>
    Circuit c{2, {}};
    if (alpha == -1) c.gates.push_back({GateKind::X, 0});
    if (beta == -1) c.gates.push_back({GateKind::X, 1});
    c.gates.push_back({GateKind::H, 0});
    c.gates.push_back({GateKind::CNOT, 0, 1});
    return c;
}

StabilizerState prepare_shared_state(const GameParams& p) {
    StabilizerState st(6);
    for (int s = 1; s <= 3; ++s) {
        const std::array<std::size_t, 2> pair{static_cast<std::size_t>(s - 1), static_cast<std::size_t>(s + 2)};
        st.apply(CliffordOp(2, prepare_phi_circuit(p.alpha(s), p.beta(s)).gates), pair);
    }
    return st;
}

namespace {
constexpr std::array<std::size_t, 3> kAlice{0, 1, 2};
constexpr std::array<std::size_t, 3> kBob{3, 4, 5};
}  // namespace

std::pair<Assignment, Assignment> quantum_round(EdgeId x, EdgeId y, const GameParams& p, Rng& rng) {
    if (x == y) throw InvalidArgument("quantum_round needs distinct edges");
    StabilizerState st = prepare_shared_state(p);
    st.apply(u_gate(x.code()), kAlice);
    st.apply(u_gate(y.code()), kBob);
    std::array<int, 6> v{};
    for (std::size_t q = 0; q < 6; ++q) v[q] = st.measure_z(q, rng) ? -1 : 1;
    const Assignment z({v[0], v[1], v[2], v[0] * v[1] * v[2] * Pentagram::e(x)});
    const Assignment w({v[3], v[4], v[5], v[3] * v[4] * v[5] * Pentagram::e(y)});
    return {z, w};
}

namespace {

// Z-type operator whose eigenvalue is the rank-r answer of a player holding
// `edge` on qubits `qs`, and the constant sign that completes it.
std::pair<PauliWord, int> rank_operator(EdgeId edge, int rank, const std::array<std::size_t, 3>& qs) {
    PauliWord p(6);
    if (rank <= 3) {
        p.set(qs[static_cast<std::size_t>(rank - 1)], Pauli::Z);
        return {p, 1};
    }
    for (std::size_t q : qs) p.set(q, Pauli::Z);
    return {p, Pentagram::e(edge)};
}

}  // namespace

bool certify_quantum_round(EdgeId x, EdgeId y, const GameParams& p) {
    if (x == y) throw InvalidArgument("certify_quantum_round needs distinct edges");
    const Pentagram& pg = Pentagram::canonical();
    const int l = game::l_value(x, y, p);

    // Shared state: O ⊗ O at the intersection has the deterministic value L.
    const StabilizerState shared = prepare_shared_state(p);
    const PauliWord& o = pg.intersection(x, y).observable;
    const PauliWord oo = o.embed(6, kAlice) * o.embed(6, kBob);
    if (shared.expect(oo) != l) return false;

    // After the basis changes, the two measured answers multiply to L.
    StabilizerState st = shared;
    st.apply(u_gate(x.code()), kAlice);
    st.apply(u_gate(y.code()), kBob);
    const auto [za, sa] = rank_operator(x, Pentagram::order(x, y), kAlice);
    const auto [zb, sb] = rank_operator(y, Pentagram::order(y, x), kBob);
    if (st.expect(za * zb) * sa * sb != l) return false;

    // Rank-4 completion is exact: ∏ of the edge observables is e(s)·I.
    for (EdgeId s : {x, y}) {
        PauliWord prod(3);
        for (int r = 1; r <= 4; ++r) prod *= pg.vertex(pg.vertex_at_rank(s, r)).observable;
        if (!prod.is_identity() || prod.sign() != Pentagram::e(s)) return false;
    }
    return true;
}

}  // namespace pentagram::mpp
