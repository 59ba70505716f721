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

#include "pentagram/pauli.hpp"

#include <bit>

#include "pentagram/error.hpp"

namespace pentagram {

std::uint8_t pauli_mul_inplace(std::span<std::uint64_t> x1, std::span<std::uint64_t> z1,
                               std::span<const std::uint64_t> x2,
                               std::span<const std::uint64_t> z2) {
    // Per qubit, anticommuting pairs contribute +i when the left factor
    // precedes the right one in the cycle X -> Y -> Z -> X, and -i otherwise.
    unsigned plus = 0;
    unsigned minus = 0;
    for (std::size_t w = 0; w < x1.size(); ++w) {
        const std::uint64_t a = x1[w], b = z1[w], c = x2[w], d = z2[w];
        const std::uint64_t anti = (a & d) ^ (b & c);
        const std::uint64_t fwd = (a & ~b & c & d) | (a & b & ~c & d) | (~a & b & c & ~d);
        plus += static_cast<unsigned>(std::popcount(fwd));
        minus += static_cast<unsigned>(std::popcount(anti & ~fwd));
        x1[w] = a ^ c;
        z1[w] = b ^ d;
    }
    return static_cast<std::uint8_t>((plus + 3 * minus) & 3);
}

PauliWord::PauliWord(std::size_t num_qubits)
    : n_(num_qubits), x_((num_qubits + 63) / 64, 0), z_((num_qubits + 63) / 64, 0) {}

PauliWord PauliWord::parse(std::string_view text) {
    std::uint8_t phase = 0;
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') phase = 2;
        ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase = (phase + 1) & 3;
        ++pos;
    }
    if (pos == text.size()) throw InvalidArgument("Pauli word '" + std::string(text) + "' has no factors");
    PauliWord w(text.size() - pos);
    for (std::size_t q = 0; pos < text.size(); ++pos, ++q) {
        switch (text[pos]) {
            case 'I': case '_': break;
            case 'X': w.set(q, Pauli::X); break;
            case 'Y': w.set(q, Pauli::Y); break;
            case 'Z': w.set(q, Pauli::Z); break;
            default:
                throw InvalidArgument("bad Pauli character in '" + std::string(text) + "'");
        }
    }
    w.phase_ = phase;
    return w;
}

PauliWord PauliWord::single(std::size_t num_qubits, std::size_t qubit, Pauli p) {
    PauliWord w(num_qubits);
    w.set(qubit, p);
    return w;
}

Pauli PauliWord::get(std::size_t q) const {
    return static_cast<Pauli>((x_bit(q) ? 1 : 0) | (z_bit(q) ? 2 : 0));
}

void PauliWord::set(std::size_t q, Pauli p) {
    if (q >= n_) throw InvalidArgument("qubit index out of range");
    const std::uint64_t m = std::uint64_t{1} << (q & 63);
    const auto v = static_cast<unsigned>(p);
    x_[q >> 6] = (v & 1) ? (x_[q >> 6] | m) : (x_[q >> 6] & ~m);
    z_[q >> 6] = (v & 2) ? (z_[q >> 6] | m) : (z_[q >> 6] & ~m);
}

int PauliWord::sign() const {
    if (!is_hermitian()) throw DomainError("Pauli word " + str() + " has an imaginary phase");
    return phase_ == 0 ? 1 : -1;
}

bool PauliWord::is_identity() const {
    for (std::size_t w = 0; w < x_.size(); ++w)
        if (x_[w] | z_[w]) return false;
    return true;
}

std::size_t PauliWord::weight() const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < x_.size(); ++w) c += std::popcount(x_[w] | z_[w]);
    return c;
}

bool PauliWord::same_support(const PauliWord& other) const {
    return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
}

PauliWord PauliWord::embed(std::size_t num_qubits, std::span<const std::size_t> targets) const {
    if (targets.size() != n_) throw InvalidArgument("embed: target count mismatch");
    PauliWord out(num_qubits);
    for (std::size_t j = 0; j < n_; ++j) out.set(targets[j], get(j));
    out.phase_ = phase_;
    return out;
}

std::string PauliWord::str() const {
    static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
    static constexpr char kChar[4] = {'I', 'X', 'Z', 'Y'};
    std::string s = kPrefix[phase_];
    for (std::size_t q = 0; q < n_; ++q) s += kChar[static_cast<unsigned>(get(q))];
    return s;
}

PauliWord& PauliWord::operator*=(const PauliWord& rhs) {
    if (rhs.n_ != n_) throw InvalidArgument("Pauli product of words with different sizes");
    const std::uint8_t k = pauli_mul_inplace(x_, z_, rhs.x_, rhs.z_);
    phase_ = static_cast<std::uint8_t>((phase_ + rhs.phase_ + k) & 3);
    return *this;
}

PauliWord pauli_mul(const PauliWord& p, const PauliWord& q) { return p * q; }

bool commutes(const PauliWord& p, const PauliWord& q) {
    if (p.size() != q.size()) throw InvalidArgument("commutes: size mismatch");
    unsigned parity = 0;
    const auto px = p.xs(), pz = p.zs(), qx = q.xs(), qz = q.zs();
    for (std::size_t w = 0; w < px.size(); ++w)
        parity ^= std::popcount((px[w] & qz[w]) ^ (pz[w] & qx[w])) & 1;
    return parity == 0;
}

}  // namespace pentagram
