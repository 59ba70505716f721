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
#include <vector>

#include "pentagram/pauli.hpp"

namespace pentagram {

enum class GateKind : std::uint8_t { H, S, CNOT, CZ, X, Z };

struct Gate {
    GateKind kind;
    std::uint32_t q0;
    std::uint32_t q1 = 0;  // target for CNOT, second qubit for CZ

    bool two_qubit() const { return kind == GateKind::CNOT || kind == GateKind::CZ; }
    friend bool operator==(const Gate&, const Gate&) = default;
};

const char* gate_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);

// A gate list on a fixed register. Gates are applied front to back.
struct Circuit {
    std::size_t num_qubits = 0;
    std::vector<Gate> gates;

    void append(const Circuit& other, std::span<const std::size_t> qubit_map);
    // ASAP layer count.
    std::size_t depth() const;
};

// g P g† (Schrödinger-picture image of a stabilizer).
void conjugate_forward(const Gate& g, PauliWord& p);
// g† P g.
void conjugate_backward(const Gate& g, PauliWord& p);

// Gates realizing g† for each g, in reverse order.
std::vector<Gate> inverse_gates(std::span<const Gate> gates);

// A Clifford unitary C given by a gate sequence, together with its
// Heisenberg images C† X_j C and C† Z_j C.
class CliffordOp {
  public:
    CliffordOp() = default;
    CliffordOp(std::size_t num_qubits, std::vector<Gate> gates);

    static CliffordOp identity(std::size_t num_qubits) { return CliffordOp(num_qubits, {}); }

    std::size_t size() const { return n_; }
    const std::vector<Gate>& gates() const { return gates_; }
    const PauliWord& x_image(std::size_t j) const { return x_images_.at(j); }
    const PauliWord& z_image(std::size_t j) const { return z_images_.at(j); }

    // C† P C, by replaying the gates.
    PauliWord heisenberg(PauliWord p) const;
    // C P C†.
    PauliWord conjugate(PauliWord p) const;

    CliffordOp adjoint() const;
    // Acts as `this` on qubits 0..n-1 and as `rhs` on n..n+m-1.
    CliffordOp tensor(const CliffordOp& rhs) const;
    // this * rhs: rhs is applied first.
    CliffordOp compose(const CliffordOp& rhs) const;

    bool is_identity() const;
    // Equality of the conjugation action including signs.
    bool same_action(const CliffordOp& other) const;

    Circuit as_circuit() const { return Circuit{n_, gates_}; }

  private:
    std::size_t n_ = 0;
    std::vector<Gate> gates_;
    std::vector<PauliWord> x_images_;
    std::vector<PauliWord> z_images_;
};

// Finds C over the gate set {H, S, CNOT, CZ, X, Z} with C† Z_j C = targets[j]
// for j < targets.size(). The targets must be Hermitian, pairwise commuting
// and independent; the unconstrained generators follow from the reduction.
CliffordOp clifford_from_z_images(std::span<const PauliWord> targets);

}  // namespace pentagram
