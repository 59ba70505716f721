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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "pentagram/clifford.hpp"
#include "pentagram/pauli.hpp"
#include "pentagram/rng.hpp"

namespace pentagram {

// Dense reference simulator. Basis index bit q is the value of qubit q.
class StateVector {
  public:
    static constexpr std::size_t kMaxQubits = 20;

    // |bits>, bits[q] in {0,1}.
    explicit StateVector(std::size_t num_qubits, std::uint64_t basis_state = 0);

    std::size_t size() const { return n_; }
    std::span<const std::complex<double>> amplitudes() const { return amp_; }

    void apply(const Gate& g);
    void apply(std::span<const Gate> gates);
    void apply(const Circuit& c);

    double norm() const;
    // <psi| P |psi>
    double expectation(const PauliWord& p) const;
    // Computational-basis outcomes with probability above `cutoff`.
    std::map<std::uint64_t, double> distribution(double cutoff = 1e-12) const;
    std::uint64_t sample(Rng& rng) const;

  private:
    std::size_t n_;
    std::vector<std::complex<double>> amp_;
};

// Runs `c` on |input> and returns the final state.
StateVector statevector_run(const Circuit& c, std::uint64_t input = 0);
std::map<std::uint64_t, double> statevector_distribution(const StateVector& sv);

}  // namespace pentagram
