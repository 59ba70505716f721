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
#include <span>
#include <vector>

#include "pentagram/clifford.hpp"
#include "pentagram/pauli.hpp"
#include "pentagram/rng.hpp"

namespace pentagram {

// Probability of a postselected single-qubit outcome on a stabilizer state.
enum class BranchWeight : std::uint8_t { Zero, Half, One };

inline double branch_probability(BranchWeight w) {
    return w == BranchWeight::Zero ? 0.0 : (w == BranchWeight::Half ? 0.5 : 1.0);
}

// Aaronson-Gottesman tableau: rows [0, n) are destabilizers, [n, 2n) the
// stabilizer generators, row 2n is scratch. Rows are bit-packed and row
// products run word-parallel.
class StabilizerState {
  public:
    explicit StabilizerState(std::size_t num_qubits);  // |0...0>

    std::size_t size() const { return n_; }

    void apply(const Gate& g);
    void apply(std::span<const Gate> gates);
    void apply(const Circuit& c);
    // Applies `op` with its qubit j mapped to targets[j].
    void apply(const CliffordOp& op, std::span<const std::size_t> targets);

    // True if Z_q (up to sign) is in the stabilizer group.
    bool is_deterministic(std::size_t q) const;
    int measure_z(std::size_t q, Rng& rng);
    // Forces outcome `bit`; the state is left unchanged when the weight is Zero.
    BranchWeight postselect_z(std::size_t q, int bit);

    // +1 / -1 if ±P is a stabilizer, 0 if P's outcome is uniformly random.
    int expect(const PauliWord& p) const;

    PauliWord stabilizer(std::size_t i) const { return row(n_ + i); }
    PauliWord destabilizer(std::size_t i) const { return row(i); }

    // Checks commutation, independence and sign invariants; for tests.
    bool valid() const;

  private:
    std::uint64_t* xrow(std::size_t r) { return xs_.data() + r * words_; }
    std::uint64_t* zrow(std::size_t r) { return zs_.data() + r * words_; }
    const std::uint64_t* xrow(std::size_t r) const { return xs_.data() + r * words_; }
    const std::uint64_t* zrow(std::size_t r) const { return zs_.data() + r * words_; }
    bool xbit(std::size_t r, std::size_t q) const { return (xrow(r)[q >> 6] >> (q & 63)) & 1; }
    bool zbit(std::size_t r, std::size_t q) const { return (zrow(r)[q >> 6] >> (q & 63)) & 1; }

    PauliWord row(std::size_t r) const;
    // row[h] := row[h] * row[i] (AG rowsum).
    void rowsum(std::size_t h, std::size_t i);
    void clear_row(std::size_t r);
    void copy_row(std::size_t dst, std::size_t src);
    std::size_t find_anticommuting_stabilizer(std::size_t q) const;
    int deterministic_outcome(std::size_t q);
    void collapse(std::size_t q, std::size_t p, int bit);

    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> xs_;
    std::vector<std::uint64_t> zs_;
    std::vector<std::uint8_t> r_;
};

}  // namespace pentagram
