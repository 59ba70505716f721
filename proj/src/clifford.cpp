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

#include "pentagram/clifford.hpp"

#include <algorithm>

#include "pentagram/error.hpp"

namespace pentagram {

namespace {

bool xb(const PauliWord& p, std::size_t q) { return p.x_bit(q); }
bool zb(const PauliWord& p, std::size_t q) { return p.z_bit(q); }

void flip_sign(PauliWord& p) { p.set_phase(p.phase() + 2); }

void check_qubits(const Gate& g, std::size_t n) {
    if (g.q0 >= n || (g.two_qubit() && (g.q1 >= n || g.q1 == g.q0)))
        throw InvalidArgument("gate qubits out of range");
}

// Rank over GF(2) of the symplectic vectors of `rows`.
std::size_t gf2_rank(std::span<const PauliWord> rows) {
    if (rows.empty()) return 0;
    const std::size_t n = rows.front().size();
    std::vector<std::vector<bool>> m;
    for (const auto& r : rows) {
        std::vector<bool> v(2 * n);
        for (std::size_t q = 0; q < n; ++q) {
            v[q] = r.x_bit(q);
            v[n + q] = r.z_bit(q);
        }
        m.push_back(std::move(v));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 2 * n && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && !m[piv][col]) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r != rank && m[r][col]) {
                for (std::size_t c = 0; c < 2 * n; ++c) m[r][c] = m[r][c] ^ m[rank][c];
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

const char* gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::S: return "S";
        case GateKind::CNOT: return "CNOT";
        case GateKind::CZ: return "CZ";
        case GateKind::X: return "X";
        case GateKind::Z: return "Z";
    }
    return "?";
}

GateKind gate_kind_from_name(const std::string& name) {
    if (name == "H") return GateKind::H;
    if (name == "S") return GateKind::S;
    if (name == "CNOT" || name == "CX") return GateKind::CNOT;
    if (name == "CZ") return GateKind::CZ;
    if (name == "X") return GateKind::X;
    if (name == "Z") return GateKind::Z;
    throw InvalidArgument("unknown gate '" + name + "'");
}

void Circuit::append(const Circuit& other, std::span<const std::size_t> qubit_map) {
    if (qubit_map.size() != other.num_qubits) throw InvalidArgument("qubit map size mismatch");
    for (const Gate& g : other.gates) {
        Gate m = g;
        m.q0 = static_cast<std::uint32_t>(qubit_map[g.q0]);
        if (g.two_qubit()) m.q1 = static_cast<std::uint32_t>(qubit_map[g.q1]);
        check_qubits(m, num_qubits);
        gates.push_back(m);
    }
}

std::size_t Circuit::depth() const {
    std::vector<std::size_t> level(num_qubits, 0);
    std::size_t d = 0;
    for (const Gate& g : gates) {
        std::size_t l = level[g.q0];
        if (g.two_qubit()) l = std::max(l, level[g.q1]);
        ++l;
        level[g.q0] = l;
        if (g.two_qubit()) level[g.q1] = l;
        d = std::max(d, l);
    }
    return d;
}

void conjugate_forward(const Gate& g, PauliWord& p) {
    const std::size_t a = g.q0, b = g.q1;
    switch (g.kind) {
        case GateKind::H: {
            // X <-> Z, Y -> -Y
            const Pauli f = p.get(a);
            if (f == Pauli::X) p.set(a, Pauli::Z);
            else if (f == Pauli::Z) p.set(a, Pauli::X);
            else if (f == Pauli::Y) flip_sign(p);
            break;
        }
        case GateKind::S: {
            // X -> Y, Y -> -X
            const Pauli f = p.get(a);
            if (f == Pauli::X) p.set(a, Pauli::Y);
            else if (f == Pauli::Y) {
                p.set(a, Pauli::X);
                flip_sign(p);
            }
            break;
        }
        case GateKind::X:
            if (zb(p, a)) flip_sign(p);
            break;
        case GateKind::Z:
            if (xb(p, a)) flip_sign(p);
            break;
        case GateKind::CNOT: {
            // Aaronson-Gottesman update with Hermitian Y.
            const bool xa = xb(p, a), za = zb(p, a), xt = xb(p, b), zt = zb(p, b);
            if (xa && zt && (xt == za)) flip_sign(p);
            const bool nxt = xt ^ xa, nza = za ^ zt;
            p.set(b, static_cast<Pauli>((nxt ? 1 : 0) | (zt ? 2 : 0)));
            p.set(a, static_cast<Pauli>((xa ? 1 : 0) | (nza ? 2 : 0)));
            break;
        }
        case GateKind::CZ: {
            conjugate_forward(Gate{GateKind::H, g.q1}, p);
            conjugate_forward(Gate{GateKind::CNOT, g.q0, g.q1}, p);
            conjugate_forward(Gate{GateKind::H, g.q1}, p);
            break;
        }
    }
}

void conjugate_backward(const Gate& g, PauliWord& p) {
    if (g.kind == GateKind::S) {
        // S† X S = -Y, S† Y S = X
        const Pauli f = p.get(g.q0);
        if (f == Pauli::X) {
            p.set(g.q0, Pauli::Y);
            flip_sign(p);
        } else if (f == Pauli::Y) {
            p.set(g.q0, Pauli::X);
        }
        return;
    }
    conjugate_forward(g, p);  // the rest are self-inverse
}

std::vector<Gate> inverse_gates(std::span<const Gate> gates) {
    std::vector<Gate> out;
    out.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        if (it->kind == GateKind::S) {
            // S† = S Z (diagonal, commuting)
            out.push_back(Gate{GateKind::Z, it->q0});
            out.push_back(Gate{GateKind::S, it->q0});
        } else {
            out.push_back(*it);
        }
    }
    return out;
}

CliffordOp::CliffordOp(std::size_t num_qubits, std::vector<Gate> gates)
    : n_(num_qubits), gates_(std::move(gates)) {
    for (const Gate& g : gates_) check_qubits(g, n_);
    x_images_.reserve(n_);
    z_images_.reserve(n_);
    for (std::size_t j = 0; j < n_; ++j) {
        x_images_.push_back(heisenberg(PauliWord::single(n_, j, Pauli::X)));
        z_images_.push_back(heisenberg(PauliWord::single(n_, j, Pauli::Z)));
    }
}

PauliWord CliffordOp::heisenberg(PauliWord p) const {
    if (p.size() != n_) throw InvalidArgument("heisenberg: size mismatch");
    // C = g_m ... g_1, so C† P C = g_1† ( ... (g_m† P g_m) ... ) g_1.
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) conjugate_backward(*it, p);
    return p;
}

PauliWord CliffordOp::conjugate(PauliWord p) const {
    if (p.size() != n_) throw InvalidArgument("conjugate: size mismatch");
    for (const Gate& g : gates_) conjugate_forward(g, p);
    return p;
}

CliffordOp CliffordOp::adjoint() const { return CliffordOp(n_, inverse_gates(gates_)); }

CliffordOp CliffordOp::tensor(const CliffordOp& rhs) const {
    std::vector<Gate> gs = gates_;
    for (Gate g : rhs.gates_) {
        g.q0 += static_cast<std::uint32_t>(n_);
        if (g.two_qubit()) g.q1 += static_cast<std::uint32_t>(n_);
        gs.push_back(g);
    }
    return CliffordOp(n_ + rhs.n_, std::move(gs));
}

CliffordOp CliffordOp::compose(const CliffordOp& rhs) const {
    if (rhs.n_ != n_) throw InvalidArgument("compose: size mismatch");
    std::vector<Gate> gs = rhs.gates_;
    gs.insert(gs.end(), gates_.begin(), gates_.end());
    return CliffordOp(n_, std::move(gs));
}

bool CliffordOp::is_identity() const { return same_action(identity(n_)); }

bool CliffordOp::same_action(const CliffordOp& other) const {
    return n_ == other.n_ && x_images_ == other.x_images_ && z_images_ == other.z_images_;
}

CliffordOp clifford_from_z_images(std::span<const PauliWord> targets) {
    if (targets.empty()) throw InvalidArgument("no target images");
    const std::size_t n = targets.front().size();
    if (targets.size() > n) throw InvalidArgument("more targets than qubits");
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i].size() != n) throw InvalidArgument("targets of different sizes");
        if (!targets[i].is_hermitian()) throw InvalidArgument("target with phase ±i");
        for (std::size_t j = 0; j < i; ++j)
            if (!commutes(targets[i], targets[j])) throw InvalidArgument("targets do not commute");
    }
    if (gf2_rank(targets) != targets.size()) throw InvalidArgument("targets are dependent");

    // Reduce each target to Z_j by gates that fix Z_0..Z_{j-1}; the product U
    // of the emitted gates satisfies U T_j U† = Z_j, i.e. C = U.
    std::vector<PauliWord> cur(targets.begin(), targets.end());
    std::vector<Gate> gates;
    auto emit = [&](Gate g) {
        gates.push_back(g);
        for (auto& t : cur) conjugate_forward(g, t);
    };
    const auto u32 = [](std::size_t v) { return static_cast<std::uint32_t>(v); };

    for (std::size_t j = 0; j < cur.size(); ++j) {
        for (std::size_t q = j; q < n; ++q) {
            const Pauli f = cur[j].get(q);
            if (f == Pauli::Y) emit({GateKind::S, u32(q)});
            if (f == Pauli::X || f == Pauli::Y) emit({GateKind::H, u32(q)});
        }
        std::vector<std::size_t> support;
        for (std::size_t q = j; q < n; ++q)
            if (cur[j].z_bit(q)) support.push_back(q);
        PENTAGRAM_CHECK(!support.empty(), "independent target lost its support");
        const std::size_t pivot =
            std::find(support.begin(), support.end(), j) != support.end() ? j : support.front();
        for (std::size_t q : support)
            if (q != pivot) emit({GateKind::CNOT, u32(q), u32(pivot)});
        if (pivot != j) {
            emit({GateKind::CNOT, u32(pivot), u32(j)});
            emit({GateKind::CNOT, u32(j), u32(pivot)});
            emit({GateKind::CNOT, u32(pivot), u32(j)});
        }
        for (std::size_t i = 0; i < j; ++i)
            if (cur[j].z_bit(i)) emit({GateKind::CNOT, u32(i), u32(j)});
        if (cur[j].phase() == 2) emit({GateKind::X, u32(j)});
        PENTAGRAM_CHECK(cur[j] == PauliWord::single(n, j, Pauli::Z), "synthesis did not reach Z_j");
    }
    CliffordOp op(n, std::move(gates));
    for (std::size_t j = 0; j < targets.size(); ++j)
        PENTAGRAM_CHECK(op.z_image(j) == targets[j], "synthesized Clifford misses a target");
    return op;
}

}  // namespace pentagram
