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

#include "pentagram/tableau.hpp"

#include <bit>

#include "pentagram/error.hpp"

namespace pentagram {

namespace {
constexpr std::size_t kNone = static_cast<std::size_t>(-1);
}

StabilizerState::StabilizerState(std::size_t num_qubits)
    : n_(num_qubits),
      words_((num_qubits + 63) / 64),
      xs_((2 * num_qubits + 1) * words_, 0),
      zs_((2 * num_qubits + 1) * words_, 0),
      r_(2 * num_qubits + 1, 0) {
    if (num_qubits == 0) throw InvalidArgument("stabilizer state needs at least one qubit");
    for (std::size_t q = 0; q < n_; ++q) {
        xrow(q)[q >> 6] |= std::uint64_t{1} << (q & 63);
        zrow(n_ + q)[q >> 6] |= std::uint64_t{1} << (q & 63);
    }
}

void StabilizerState::apply(const Gate& g) {
    const std::size_t a = g.q0, b = g.q1;
    if (a >= n_ || (g.two_qubit() && (b >= n_ || a == b)))
        throw InvalidArgument("gate qubit out of range");
    const std::size_t wa = a >> 6, wb = b >> 6;
    const int sa = static_cast<int>(a & 63), sb = static_cast<int>(b & 63);
    const std::size_t rows = 2 * n_;
    switch (g.kind) {
        case GateKind::H:
            for (std::size_t r = 0; r < rows; ++r) {
                std::uint64_t& x = xrow(r)[wa];
                std::uint64_t& z = zrow(r)[wa];
                const std::uint64_t xv = (x >> sa) & 1, zv = (z >> sa) & 1;
                r_[r] ^= static_cast<std::uint8_t>(xv & zv);
                if (xv != zv) {
                    x ^= std::uint64_t{1} << sa;
                    z ^= std::uint64_t{1} << sa;
                }
            }
            break;
        case GateKind::S:
            for (std::size_t r = 0; r < rows; ++r) {
                const std::uint64_t xv = (xrow(r)[wa] >> sa) & 1;
                const std::uint64_t zv = (zrow(r)[wa] >> sa) & 1;
                r_[r] ^= static_cast<std::uint8_t>(xv & zv);
                zrow(r)[wa] ^= xv << sa;
            }
            break;
        case GateKind::X:
            for (std::size_t r = 0; r < rows; ++r)
                r_[r] ^= static_cast<std::uint8_t>((zrow(r)[wa] >> sa) & 1);
            break;
        case GateKind::Z:
            for (std::size_t r = 0; r < rows; ++r)
                r_[r] ^= static_cast<std::uint8_t>((xrow(r)[wa] >> sa) & 1);
            break;
        case GateKind::CNOT:
            for (std::size_t r = 0; r < rows; ++r) {
                const std::uint64_t xa = (xrow(r)[wa] >> sa) & 1, za = (zrow(r)[wa] >> sa) & 1;
                const std::uint64_t xb = (xrow(r)[wb] >> sb) & 1, zb = (zrow(r)[wb] >> sb) & 1;
                r_[r] ^= static_cast<std::uint8_t>(xa & zb & (xb ^ za ^ 1));
                xrow(r)[wb] ^= xa << sb;
                zrow(r)[wa] ^= zb << sa;
            }
            break;
        case GateKind::CZ:
            apply(Gate{GateKind::H, g.q1});
            apply(Gate{GateKind::CNOT, g.q0, g.q1});
            apply(Gate{GateKind::H, g.q1});
            break;
    }
}

void StabilizerState::apply(std::span<const Gate> gates) {
    for (const Gate& g : gates) apply(g);
}

void StabilizerState::apply(const Circuit& c) {
    if (c.num_qubits != n_) throw InvalidArgument("circuit size does not match state");
    apply(c.gates);
}

void StabilizerState::apply(const CliffordOp& op, std::span<const std::size_t> targets) {
    if (targets.size() != op.size()) throw InvalidArgument("target count mismatch");
    for (Gate g : op.gates()) {
        g.q0 = static_cast<std::uint32_t>(targets[g.q0]);
        if (g.two_qubit()) g.q1 = static_cast<std::uint32_t>(targets[g.q1]);
        apply(g);
    }
}

PauliWord StabilizerState::row(std::size_t r) const {
    PauliWord p(n_);
    auto px = p.xs();
    auto pz = p.zs();
    for (std::size_t w = 0; w < words_; ++w) {
        px[w] = xrow(r)[w];
        pz[w] = zrow(r)[w];
    }
    p.set_phase(r_[r] ? 2 : 0);
    return p;
}

void StabilizerState::rowsum(std::size_t h, std::size_t i) {
    // Every product whose sign is ever read is between commuting rows, so
    // row_h * row_i == row_i * row_h and multiplying in place is exact.
    const std::uint8_t k =
        pauli_mul_inplace(std::span<std::uint64_t>(xrow(h), words_), std::span<std::uint64_t>(zrow(h), words_),
                          std::span<const std::uint64_t>(xrow(i), words_),
                          std::span<const std::uint64_t>(zrow(i), words_));
    const unsigned total = 2u * r_[h] + 2u * r_[i] + k;
    r_[h] = static_cast<std::uint8_t>((total & 3) >= 2 ? 1 : 0);
}

void StabilizerState::clear_row(std::size_t r) {
    std::fill(xrow(r), xrow(r) + words_, 0);
    std::fill(zrow(r), zrow(r) + words_, 0);
    r_[r] = 0;
}

void StabilizerState::copy_row(std::size_t dst, std::size_t src) {
    std::copy(xrow(src), xrow(src) + words_, xrow(dst));
    std::copy(zrow(src), zrow(src) + words_, zrow(dst));
    r_[dst] = r_[src];
}

std::size_t StabilizerState::find_anticommuting_stabilizer(std::size_t q) const {
    for (std::size_t p = n_; p < 2 * n_; ++p)
        if (xbit(p, q)) return p;
    return kNone;
}

bool StabilizerState::is_deterministic(std::size_t q) const {
    if (q >= n_) throw InvalidArgument("qubit out of range");
    return find_anticommuting_stabilizer(q) == kNone;
}

int StabilizerState::deterministic_outcome(std::size_t q) {
    const std::size_t scratch = 2 * n_;
    clear_row(scratch);
    for (std::size_t i = 0; i < n_; ++i)
        if (xbit(i, q)) rowsum(scratch, i + n_);
    return r_[scratch];
}

void StabilizerState::collapse(std::size_t q, std::size_t p, int bit) {
    for (std::size_t i = 0; i < 2 * n_; ++i)
        if (i != p && xbit(i, q)) rowsum(i, p);
    copy_row(p - n_, p);
    clear_row(p);
    zrow(p)[q >> 6] |= std::uint64_t{1} << (q & 63);
    r_[p] = static_cast<std::uint8_t>(bit & 1);
}

int StabilizerState::measure_z(std::size_t q, Rng& rng) {
    if (q >= n_) throw InvalidArgument("qubit out of range");
    const std::size_t p = find_anticommuting_stabilizer(q);
    if (p == kNone) return deterministic_outcome(q);
    const int bit = rng.bit() ? 1 : 0;
    collapse(q, p, bit);
    return bit;
}

BranchWeight StabilizerState::postselect_z(std::size_t q, int bit) {
    if (q >= n_) throw InvalidArgument("qubit out of range");
    const std::size_t p = find_anticommuting_stabilizer(q);
    if (p == kNone) return deterministic_outcome(q) == (bit & 1) ? BranchWeight::One : BranchWeight::Zero;
    collapse(q, p, bit);
    return BranchWeight::Half;
}

int StabilizerState::expect(const PauliWord& p) const {
    if (p.size() != n_) throw InvalidArgument("expect: size mismatch");
    if (!p.is_hermitian()) throw InvalidArgument("expect: non-Hermitian Pauli word");
    for (std::size_t i = n_; i < 2 * n_; ++i)
        if (!commutes(row(i), p)) return 0;
    // P commutes with every stabilizer, so ±P is the product of the
    // stabilizers whose paired destabilizer anticommutes with P.
    PauliWord acc(n_);
    for (std::size_t i = 0; i < n_; ++i)
        if (!commutes(row(i), p)) acc *= row(n_ + i);
    PENTAGRAM_CHECK(acc.same_support(p), "commuting Pauli not in the stabilizer group");
    return acc.phase() == p.phase() ? 1 : -1;
}

bool StabilizerState::valid() const {
    for (std::size_t i = 0; i < 2 * n_; ++i) {
        const PauliWord a = row(i);
        for (std::size_t j = i + 1; j < 2 * n_; ++j) {
            const bool should_anti = (j == i + n_);
            if (commutes(a, row(j)) == should_anti) return false;
        }
    }
    return true;
}

}  // namespace pentagram
