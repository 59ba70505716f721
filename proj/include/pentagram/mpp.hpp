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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pentagram/clifford.hpp"
#include "pentagram/game.hpp"
#include "pentagram/rng.hpp"
#include "pentagram/tableau.hpp"

namespace pentagram::mpp {

inline constexpr int kIdleCode = 7;  // 111

inline bool is_idle(int code) { return code >= 5 && code <= 7; }

// 6n input bits x_1..x_n, y_1..y_n; each 3-bit block is written MSB first.
class MppInput {
  public:
    MppInput(std::vector<int> x, std::vector<int> y);
    static MppInput from_bits(const std::string& bits);
    static MppInput from_json(const std::string& text);

    std::size_t n() const { return x_.size(); }
    int x(std::size_t j) const { return x_.at(j - 1); }  // j in 1..n
    int y(std::size_t j) const { return y_.at(j - 1); }
    const std::vector<int>& xs() const { return x_; }
    const std::vector<int>& ys() const { return y_; }

    std::string bits() const;
    std::string json() const;

    friend bool operator==(const MppInput&, const MppInput&) = default;

  private:
    std::vector<int> x_;
    std::vector<int> y_;
};

// 6n output bits z_1..z_n, w_1..w_n; bit b stands for the value (-1)^b.
class MppOutput {
  public:
    explicit MppOutput(std::size_t n) : bits_(6 * n, 0) {}
    static MppOutput from_bits(const std::string& bits);

    std::size_t n() const { return bits_.size() / 6; }
    // j in 1..n, i in 1..3
    int z_bit(std::size_t j, int i) const { return bits_.at(3 * (j - 1) + static_cast<std::size_t>(i - 1)); }
    int w_bit(std::size_t j, int i) const { return bits_.at(3 * (n() + j - 1) + static_cast<std::size_t>(i - 1)); }
    int z(std::size_t j, int i) const { return z_bit(j, i) ? -1 : 1; }
    int w(std::size_t j, int i) const { return w_bit(j, i) ? -1 : 1; }
    void set_z_bit(std::size_t j, int i, int b) { bits_.at(3 * (j - 1) + static_cast<std::size_t>(i - 1)) = b & 1; }
    void set_w_bit(std::size_t j, int i, int b) {
        bits_.at(3 * (n() + j - 1) + static_cast<std::size_t>(i - 1)) = b & 1;
    }
    // Output position 0..6n-1 in packed order.
    int bit(std::size_t pos) const { return bits_.at(pos); }
    void set_bit(std::size_t pos, int b) { bits_.at(pos) = b & 1; }

    std::string bits() const;

    friend bool operator==(const MppOutput&, const MppOutput&) = default;

  private:
    std::vector<int> bits_;
};

// Data qubit p_s(t), s in 1..3, t in 1..2n.
inline std::size_t qubit_index(int s, std::size_t t) { return 3 * (t - 1) + static_cast<std::size_t>(s - 1); }
// Qubit that produces packed output position `pos` for block count n.
std::size_t output_qubit(std::size_t n, std::size_t pos);

struct SubsetIndex {
    std::size_t k;
    std::size_t l;
    friend bool operator==(const SubsetIndex&, const SubsetIndex&) = default;
};

// (k, l) when X is in S_{k,l}; nullopt when X is not in S.
std::optional<SubsetIndex> subset_of(const MppInput& x);

MppInput sample_S(std::size_t n, Rng& rng);
MppInput sample_Skl(std::size_t n, std::size_t k, std::size_t l, Rng& rng);
// All 25 members of S_{k,l} in lexicographic (x_k, y_l) order.
std::vector<MppInput> enumerate_Skl(std::size_t n, std::size_t k, std::size_t l);

// Basis change onto edge `code`'s rank-1..3 observables: C† Z_j C = O_j.
// Identity for idle codes.
const CliffordOp& u_gate(int code);
// Bell-measurement basis change on (column 2j, column 2j+1), or identity.
const CliffordOp& v_gate(int y_code, int x_code);
bool v_swaps(int y_code, int x_code);

enum class Stage : std::uint8_t { BellPairs, LocalBasis, Swapping };

struct PlannedOp {
    Stage stage;
    const CliffordOp* op;
    std::vector<std::size_t> qubits;
};

// The gate plan of C^MPP(X); measurement of all 6n qubits follows it.
struct MppPlan {
    std::size_t n = 0;
    std::vector<PlannedOp> ops;

    std::size_t num_qubits() const { return 6 * n; }
    // With include_local_basis = false the U layer is dropped, leaving the
    // Bell pairs and the swapping layer only.
    Circuit circuit(bool include_local_basis = true) const;
};

MppPlan build_mpp_circuit(const MppInput& x);

enum class Backend : std::uint8_t { Stabilizer, StateVector };

// Prepared (pre-measurement) state of C^MPP(X)|0^{6n}>.
StabilizerState prepare_mpp_state(const MppInput& x);

MppOutput run_mpp(const MppInput& x, Backend backend, Rng& rng);
// Output probability via the dense backend, n <= 3.
double output_probability(const MppInput& x, const MppOutput& z);
// Exact output distribution via the dense backend, keyed by packed bits.
std::map<std::string, double> exact_distribution(const MppInput& x);

// α_i = ∏_{j=k}^{l-1} w_j^i, β_i = ∏_{j=k}^{l-1} z_{j+1}^i.
game::GameParams extract_params(const MppOutput& z, std::size_t k, std::size_t l);

// Completed quadruple for block z_k (or w_l): ranks 1..3 measured, rank 4
// as z^1 z^2 z^3 e(edge).
game::Assignment completed_z(const MppOutput& out, std::size_t k, game::EdgeId edge);
game::Assignment completed_w(const MppOutput& out, std::size_t l, game::EdgeId edge);

// The game relation between z_k and w_l under the extracted parameters.
bool verify_game_relation(const MppInput& x, const MppOutput& z);
// Nonzero amplitude of Z in C^MPP(X)|0^{6n}>, by postselection.
bool verify_support(const MppInput& x, const MppOutput& z);

// One round of the generalized game with the shared state
// ⊗_s |Φ_{α_s,β_s}> on qubit pairs (s, s+3).
std::pair<game::Assignment, game::Assignment> quantum_round(game::EdgeId x, game::EdgeId y,
                                                           const game::GameParams& p, Rng& rng);
// Shared state before measurement bases are applied.
StabilizerState prepare_shared_state(const game::GameParams& p);
Circuit prepare_phi_circuit(int alpha, int beta);
// Certifies a win of every outcome of the round from stabilizer expectation
// values alone; no sampling involved.
bool certify_quantum_round(game::EdgeId x, game::EdgeId y, const game::GameParams& p);

}  // namespace pentagram::mpp
