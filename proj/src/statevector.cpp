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

#include "pentagram/statevector.hpp"

#include <bit>
#include <cmath>

#include "pentagram/error.hpp"

namespace pentagram {

namespace {
using cd = std::complex<double>;
constexpr double kInvSqrt2 = 0.70710678118654752440;
}  // namespace

StateVector::StateVector(std::size_t num_qubits, std::uint64_t basis_state) : n_(num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxQubits)
        throw DomainError("statevector backend supports 1.." + std::to_string(kMaxQubits) + " qubits");
    amp_.assign(std::size_t{1} << n_, cd{0.0, 0.0});
    if (basis_state >= amp_.size()) throw InvalidArgument("basis state out of range");
    amp_[basis_state] = 1.0;
}

void StateVector::apply(const Gate& g) {
    if (g.q0 >= n_ || (g.two_qubit() && (g.q1 >= n_ || g.q1 == g.q0)))
        throw InvalidArgument("gate qubit out of range");
    const std::uint64_t ma = std::uint64_t{1} << g.q0;
    const std::uint64_t mb = std::uint64_t{1} << g.q1;
    const std::size_t dim = amp_.size();
    switch (g.kind) {
        case GateKind::H:
            for (std::uint64_t i = 0; i < dim; ++i) {
                if (i & ma) continue;
                const cd a0 = amp_[i], a1 = amp_[i | ma];
                amp_[i] = (a0 + a1) * kInvSqrt2;
                amp_[i | ma] = (a0 - a1) * kInvSqrt2;
            }
            break;
        case GateKind::S:
            for (std::uint64_t i = 0; i < dim; ++i)
                if (i & ma) amp_[i] *= cd{0.0, 1.0};
            break;
        case GateKind::Z:
            for (std::uint64_t i = 0; i < dim; ++i)
                if (i & ma) amp_[i] = -amp_[i];
            break;
        case GateKind::X:
            for (std::uint64_t i = 0; i < dim; ++i)
                if (!(i & ma)) std::swap(amp_[i], amp_[i | ma]);
            break;
        case GateKind::CNOT:
            for (std::uint64_t i = 0; i < dim; ++i)
                if ((i & ma) && !(i & mb)) std::swap(amp_[i], amp_[i | mb]);
            break;
        case GateKind::CZ:
            for (std::uint64_t i = 0; i < dim; ++i)
                if ((i & ma) && (i & mb)) amp_[i] = -amp_[i];
            break;
    }
}

void StateVector::apply(std::span<const Gate> gates) {
    for (const Gate& g : gates) apply(g);
}

void StateVector::apply(const Circuit& c) {
    if (c.num_qubits != n_) throw InvalidArgument("circuit size does not match state");
    apply(c.gates);
}

double StateVector::norm() const {
    double s = 0.0;
    for (const cd& a : amp_) s += std::norm(a);
    return std::sqrt(s);
}

double StateVector::expectation(const PauliWord& p) const {
    if (p.size() != n_) throw InvalidArgument("expectation: size mismatch");
    std::uint64_t xm = 0, zm = 0;
    for (std::size_t q = 0; q < n_; ++q) {
        if (p.x_bit(q)) xm |= std::uint64_t{1} << q;
        if (p.z_bit(q)) zm |= std::uint64_t{1} << q;
    }
    // P|i> = i^{phase} * i^{#Y} * (-1)^{popcount(i & zm)} |i ^ xm>, using Y = iXZ.
    const int ny = std::popcount(xm & zm);
    const cd global = std::pow(cd{0.0, 1.0}, static_cast<double>((p.phase() + ny) & 3));
    cd acc{0.0, 0.0};
    for (std::uint64_t i = 0; i < amp_.size(); ++i) {
        const double s = (std::popcount(i & zm) & 1) ? -1.0 : 1.0;
        acc += std::conj(amp_[i ^ xm]) * s * amp_[i];
    }
    return (global * acc).real();
}

std::map<std::uint64_t, double> StateVector::distribution(double cutoff) const {
    std::map<std::uint64_t, double> out;
    for (std::uint64_t i = 0; i < amp_.size(); ++i) {
        const double pr = std::norm(amp_[i]);
        if (pr > cutoff) out.emplace(i, pr);
    }
    return out;
}

std::uint64_t StateVector::sample(Rng& rng) const {
    double u = rng.uniform();
    for (std::uint64_t i = 0; i < amp_.size(); ++i) {
        u -= std::norm(amp_[i]);
        if (u < 0.0) return i;
    }
    for (std::uint64_t i = amp_.size(); i-- > 0;)
        if (std::norm(amp_[i]) > 0.0) return i;
    return 0;
}

StateVector statevector_run(const Circuit& c, std::uint64_t input) {
    StateVector sv(c.num_qubits, input);
    sv.apply(c);
    return sv;
}

std::map<std::uint64_t, double> statevector_distribution(const StateVector& sv) { return sv.distribution(); }

}  // namespace pentagram
