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
#include <string>
#include <string_view>
#include <vector>

namespace pentagram {

enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

// Multiplies the packed Pauli (x1, z1) in place by (x2, z2) on the right and
// returns the exponent k (mod 4) of the i^k factor picked up by the product.
// Y is the Hermitian Y (x = z = 1), not XZ.
std::uint8_t pauli_mul_inplace(std::span<std::uint64_t> x1, std::span<std::uint64_t> z1,
                               std::span<const std::uint64_t> x2,
                               std::span<const std::uint64_t> z2);

// i^phase * (P_0 ⊗ ... ⊗ P_{n-1}), bit-packed 64 qubits per word.
class PauliWord {
  public:
    PauliWord() = default;
    explicit PauliWord(std::size_t num_qubits);

    // Accepts an optional sign prefix ("+", "-", "+i", "-i", "i") followed by
    // one of IXYZ per qubit, e.g. "+ZXX" or "-iY".
    static PauliWord parse(std::string_view text);
    static PauliWord single(std::size_t num_qubits, std::size_t qubit, Pauli p);

    std::size_t size() const { return n_; }
    std::size_t words() const { return x_.size(); }

    Pauli get(std::size_t q) const;
    void set(std::size_t q, Pauli p);
    bool x_bit(std::size_t q) const { return (x_[q >> 6] >> (q & 63)) & 1; }
    bool z_bit(std::size_t q) const { return (z_[q >> 6] >> (q & 63)) & 1; }

    // Exponent k of the global factor i^k.
    std::uint8_t phase() const { return phase_; }
    void set_phase(std::uint8_t k) { phase_ = k & 3; }
    // +1/-1 for Hermitian words; throws for ±i.
    int sign() const;
    bool is_hermitian() const { return (phase_ & 1) == 0; }
    bool is_identity() const;
    std::size_t weight() const;

    std::span<std::uint64_t> xs() { return x_; }
    std::span<std::uint64_t> zs() { return z_; }
    std::span<const std::uint64_t> xs() const { return x_; }
    std::span<const std::uint64_t> zs() const { return z_; }

    // Same operator up to the global phase.
    bool same_support(const PauliWord& other) const;

    // Embeds this word into a larger register: qubit j goes to targets[j].
    PauliWord embed(std::size_t num_qubits, std::span<const std::size_t> targets) const;

    std::string str() const;

    PauliWord& operator*=(const PauliWord& rhs);
    friend PauliWord operator*(PauliWord lhs, const PauliWord& rhs) { return lhs *= rhs; }
    friend bool operator==(const PauliWord& a, const PauliWord& b) {
        return a.n_ == b.n_ && a.phase_ == b.phase_ && a.x_ == b.x_ && a.z_ == b.z_;
    }

  private:
    std::size_t n_ = 0;
    std::uint8_t phase_ = 0;
    std::vector<std::uint64_t> x_;
    std::vector<std::uint64_t> z_;
};

PauliWord pauli_mul(const PauliWord& p, const PauliWord& q);

// Symplectic inner product parity == 0.
bool commutes(const PauliWord& p, const PauliWord& q);

}  // namespace pentagram
