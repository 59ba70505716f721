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

#include "pentagram/lightcone.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>
#include <unordered_set>

#include "json.hpp"
#include "pentagram/error.hpp"
#include "pentagram/mpp.hpp"

namespace pentagram::lightcone {

namespace {
constexpr std::size_t kMaxFanIn = 16;
}

std::string Wire::str() const { return (kind == Kind::Input ? "i" : "g") + std::to_string(index); }

Wire Wire::parse(const std::string& s) {
    if (s.size() < 2 || (s[0] != 'i' && s[0] != 'g') || s.find_first_not_of("0123456789", 1) != std::string::npos)
        throw InvalidArgument("wire reference must look like i3 or g7, got '" + s + "'");
    const auto idx = static_cast<std::uint32_t>(std::stoul(s.substr(1)));
    return s[0] == 'i' ? input(idx) : gate(idx);
}

ClassicalCircuit::ClassicalCircuit(std::size_t data_inputs, std::size_t random_inputs,
                                   std::vector<ClassicalGate> gates, std::vector<Wire> outputs)
    : data_inputs_(data_inputs), random_inputs_(random_inputs), gates_(std::move(gates)), outputs_(std::move(outputs)) {
    const std::size_t total = total_inputs();
    layers_.resize(gates_.size());
    auto wire_layer = [&](const Wire& w, std::size_t limit) -> std::size_t {
        if (w.kind == Wire::Kind::Input) {
            if (w.index >= total) throw InvalidArgument("wire " + w.str() + " names a missing input");
            return 0;
        }
        if (w.index >= limit) throw InvalidArgument("wire " + w.str() + " is not an earlier gate");
        return layers_[w.index];
    };
    for (std::size_t g = 0; g < gates_.size(); ++g) {
        const auto& gate = gates_[g];
        if (gate.in.empty() || gate.in.size() > kMaxFanIn)
            throw InvalidArgument("gate g" + std::to_string(g) + " needs fan-in 1.." + std::to_string(kMaxFanIn));
        if (gate.table.size() != (std::size_t{1} << gate.in.size()))
            throw InvalidArgument("gate g" + std::to_string(g) + " needs a truth table of 2^fanin entries");
        for (auto b : gate.table)
            if (b > 1) throw InvalidArgument("truth table entries must be 0 or 1");
        std::size_t l = 0;
        for (const Wire& w : gate.in) l = std::max(l, wire_layer(w, g));
        layers_[g] = l + 1;
        depth_ = std::max(depth_, l + 1);
    }
    for (const Wire& w : outputs_) wire_layer(w, gates_.size());
}

std::size_t ClassicalCircuit::max_fan_in() const {
    std::size_t m = 0;
    for (const auto& g : gates_) m = std::max(m, g.in.size());
    return m;
}

std::vector<std::uint8_t> ClassicalCircuit::evaluate(const std::vector<std::uint8_t>& inputs) const {
    if (inputs.size() != total_inputs()) throw InvalidArgument("evaluate: wrong number of inputs");
    std::vector<std::uint8_t> val(gates_.size());
    auto get = [&](const Wire& w) { return w.kind == Wire::Kind::Input ? inputs[w.index] & 1 : val[w.index]; };
    for (std::size_t g = 0; g < gates_.size(); ++g) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < gates_[g].in.size(); ++i) idx |= static_cast<std::size_t>(get(gates_[g].in[i])) << i;
        val[g] = gates_[g].table[idx];
    }
    std::vector<std::uint8_t> out;
    out.reserve(outputs_.size());
    for (const Wire& w : outputs_) out.push_back(get(w));
    return out;
}

std::vector<std::uint64_t> ClassicalCircuit::evaluate_words(const std::vector<std::uint64_t>& inputs) const {
    if (inputs.size() != total_inputs()) throw InvalidArgument("evaluate: wrong number of inputs");
    std::vector<std::uint64_t> val(gates_.size());
    auto get = [&](const Wire& w) { return w.kind == Wire::Kind::Input ? inputs[w.index] : val[w.index]; };
    std::vector<std::uint64_t> args;
    for (std::size_t g = 0; g < gates_.size(); ++g) {
        const auto& gate = gates_[g];
        args.clear();
        for (const Wire& w : gate.in) args.push_back(get(w));
        std::uint64_t acc = 0;
        for (std::size_t t = 0; t < gate.table.size(); ++t) {
            if (!gate.table[t]) continue;
            std::uint64_t term = ~std::uint64_t{0};
            for (std::size_t i = 0; i < args.size(); ++i) term &= (t >> i) & 1 ? args[i] : ~args[i];
            acc |= term;
        }
        val[g] = acc;
    }
    std::vector<std::uint64_t> out;
    out.reserve(outputs_.size());
    for (const Wire& w : outputs_) out.push_back(get(w));
    return out;
}

ClassicalCircuit ClassicalCircuit::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("circuit JSON: ") + e.what());
    }
    try {
        const std::size_t inputs = j.at("inputs").get<std::size_t>();
        const std::size_t random = j.value("random_inputs", std::size_t{0});
        std::map<std::string, std::uint32_t> ids;
        std::vector<ClassicalGate> gates;
        auto resolve = [&](const std::string& ref) -> Wire {
            if (auto it = ids.find(ref); it != ids.end()) return Wire::gate(it->second);
            const Wire w = Wire::parse(ref);
            if (w.kind == Wire::Kind::Gate) throw InvalidArgument("reference to undefined gate '" + ref + "'");
            return w;
        };
        for (const auto& g : j.at("gates")) {
            ClassicalGate gate;
            for (const auto& ref : g.at("in")) gate.in.push_back(resolve(ref.get<std::string>()));
            for (const auto& t : g.at("table")) gate.table.push_back(static_cast<std::uint8_t>(t.get<int>()));
            const std::string id = g.contains("id") ? g["id"].get<std::string>() : "g" + std::to_string(gates.size());
            if (!ids.emplace(id, static_cast<std::uint32_t>(gates.size())).second)
                throw InvalidArgument("duplicate gate id '" + id + "'");
            gates.push_back(std::move(gate));
        }
        std::vector<Wire> outputs;
        for (const auto& ref : j.at("outputs")) outputs.push_back(resolve(ref.get<std::string>()));
        return ClassicalCircuit(inputs, random, std::move(gates), std::move(outputs));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("circuit JSON: ") + e.what());
    }
}

std::string ClassicalCircuit::json() const {
    nlohmann::ordered_json j;
    j["inputs"] = data_inputs_;
    if (random_inputs_) j["random_inputs"] = random_inputs_;
    auto gates = nlohmann::ordered_json::array();
    for (std::size_t g = 0; g < gates_.size(); ++g) {
        nlohmann::ordered_json o;
        o["id"] = "g" + std::to_string(g);
        std::vector<std::string> in;
        for (const Wire& w : gates_[g].in) in.push_back(w.str());
        o["in"] = in;
        o["table"] = std::vector<int>(gates_[g].table.begin(), gates_[g].table.end());
        gates.push_back(std::move(o));
    }
    j["gates"] = std::move(gates);
    std::vector<std::string> outs;
    for (const Wire& w : outputs_) outs.push_back(w.str());
    j["outputs"] = outs;
    return j.dump();
}

std::vector<std::size_t> lightcone(const ClassicalCircuit& c, std::size_t input_bit) {
    if (input_bit >= c.data_inputs()) throw InvalidArgument("lightcone: input index out of range");
    const auto& gates = c.gates();
    std::vector<bool> reached(gates.size(), false);
    const Wire src = Wire::input(static_cast<std::uint32_t>(input_bit));
    auto hit = [&](const Wire& w) { return w == src || (w.kind == Wire::Kind::Gate && reached[w.index]); };
    for (std::size_t g = 0; g < gates.size(); ++g)
        reached[g] = std::any_of(gates[g].in.begin(), gates[g].in.end(), hit);
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < c.num_outputs(); ++j)
        if (hit(c.outputs()[j])) out.push_back(j);
    return out;
}

std::vector<std::vector<std::size_t>> all_lightcones(const ClassicalCircuit& c) {
    // Backward cone (data inputs only) per gate, then inverted per output.
    const auto& gates = c.gates();
    std::vector<std::vector<std::uint32_t>> cone(gates.size());
    std::vector<std::uint32_t> merged;
    auto wire_cone = [&](const Wire& w, std::vector<std::uint32_t>& into) {
        if (w.kind == Wire::Kind::Input) {
            if (w.index < c.data_inputs()) into.push_back(w.index);
        } else {
            into.insert(into.end(), cone[w.index].begin(), cone[w.index].end());
        }
    };
    for (std::size_t g = 0; g < gates.size(); ++g) {
        merged.clear();
        for (const Wire& w : gates[g].in) wire_cone(w, merged);
        std::sort(merged.begin(), merged.end());
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        cone[g] = merged;
    }
    std::vector<std::vector<std::size_t>> out(c.data_inputs());
    for (std::size_t j = 0; j < c.num_outputs(); ++j) {
        merged.clear();
        wire_cone(c.outputs()[j], merged);
        std::sort(merged.begin(), merged.end());
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        for (auto i : merged) out[i].push_back(j);
    }
    return out;
}

namespace {

// Input words for evaluation batch `word`: evaluation b uses the input
// string with integer value word * 64 + b.
std::vector<std::uint64_t> batch_inputs(std::size_t num_inputs, std::uint64_t word) {
    static constexpr std::uint64_t kPattern[6] = {0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL,
                                                  0xF0F0F0F0F0F0F0F0ULL, 0xFF00FF00FF00FF00ULL,
                                                  0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
    std::vector<std::uint64_t> in(num_inputs);
    for (std::size_t i = 0; i < num_inputs; ++i)
        in[i] = i < 6 ? kPattern[i] : (((word >> (i - 6)) & 1) ? ~std::uint64_t{0} : 0);
    return in;
}

void check_exhaustive(const ClassicalCircuit& c) {
    if (c.total_inputs() > kMaxExhaustiveInputs)
        throw DomainError("exhaustive correlation check supports at most " + std::to_string(kMaxExhaustiveInputs) +
                          " inputs");
}

// OR over all input strings of (out(X) xor out(X with bit i flipped)), per output.
std::vector<std::uint64_t> flip_sensitivity(const ClassicalCircuit& c, std::size_t i) {
    const std::size_t n_in = c.total_inputs();
    const std::uint64_t valid = n_in >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (std::size_t{1} << n_in)) - 1);
    const std::uint64_t batches = n_in >= 6 ? (std::uint64_t{1} << (n_in - 6)) : 1;
    std::vector<std::uint64_t> acc(c.num_outputs(), 0);
    for (std::uint64_t b = 0; b < batches; ++b) {
        auto in = batch_inputs(n_in, b);
        const auto base = c.evaluate_words(in);
        in[i] = ~in[i];
        const auto flipped = c.evaluate_words(in);
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] |= (base[j] ^ flipped[j]) & valid;
    }
    return acc;
}

}  // namespace

bool correlated_exact(const ClassicalCircuit& c, std::size_t input_bit, std::size_t output_bit) {
    check_exhaustive(c);
    if (input_bit >= c.total_inputs() || output_bit >= c.num_outputs())
        throw InvalidArgument("correlated_exact: index out of range");
    return flip_sensitivity(c, input_bit)[output_bit] != 0;
}

std::vector<std::vector<bool>> correlation_table(const ClassicalCircuit& c) {
    check_exhaustive(c);
    std::vector<std::vector<bool>> out;
    for (std::size_t i = 0; i < c.total_inputs(); ++i) {
        const auto acc = flip_sensitivity(c, i);
        std::vector<bool> row(acc.size());
        for (std::size_t j = 0; j < acc.size(); ++j) row[j] = acc[j] != 0;
        out.push_back(std::move(row));
    }
    return out;
}

EventAnalyzer::EventAnalyzer(const ClassicalCircuit& c, std::size_t n) : n_(n) {
    if (n < 2) throw InvalidArgument("event E needs n >= 2");
    if (c.data_inputs() != 6 * n || c.num_outputs() != 6 * n)
        throw InvalidArgument("circuit does not have the 6n-in / 6n-out layout for n = " + std::to_string(n));
    const auto cones = all_lightcones(c);
    auto block = [&](std::size_t first) {
        std::vector<std::size_t> u;
        for (std::size_t b = first; b < first + 3; ++b) u.insert(u.end(), cones[b].begin(), cones[b].end());
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
        return u;
    };
    for (std::size_t j = 0; j < n; ++j) {
        x_cones_.push_back(block(3 * j));
        y_cones_.push_back(block(3 * n + 3 * j));
    }
}

bool EventAnalyzer::event(std::size_t k, std::size_t l) const {
    if (k < 1 || k >= l || l > n_) throw InvalidArgument("event E needs 1 <= k < l <= n");
    const auto& lx = x_cones_[k - 1];
    const auto& ly = y_cones_[l - 1];
    auto a = lx.begin();
    auto b = ly.begin();
    while (a != lx.end() && b != ly.end()) {
        if (*a == *b) return false;
        if (*a < *b) ++a;
        else ++b;
    }
    for (std::size_t i = 0; i < 3; ++i) {
        if (std::binary_search(lx.begin(), lx.end(), 3 * n_ + 3 * (l - 1) + i)) return false;  // w_l
        if (std::binary_search(ly.begin(), ly.end(), 3 * (k - 1) + i)) return false;           // z_k
    }
    return true;
}

std::uint64_t EventAnalyzer::bad_pairs() const {
    // Pairs are bad only through some output position, so it is enough to
    // look at which blocks reach each output.
    std::vector<std::vector<std::uint32_t>> xs_at(6 * n_), ys_at(6 * n_);
    for (std::size_t k = 0; k < n_; ++k) {
        for (auto o : x_cones_[k]) xs_at[o].push_back(static_cast<std::uint32_t>(k + 1));
        for (auto o : y_cones_[k]) ys_at[o].push_back(static_cast<std::uint32_t>(k + 1));
    }
    std::unordered_set<std::uint64_t> bad;
    auto mark = [&](std::uint64_t k, std::uint64_t l) {
        if (k < l) bad.insert(k * (n_ + 1) + l);
    };
    for (std::size_t o = 0; o < 6 * n_; ++o)
        for (auto k : xs_at[o])
            for (auto l : ys_at[o]) mark(k, l);
    for (std::size_t l = 1; l <= n_; ++l)
        for (std::size_t i = 0; i < 3; ++i)
            for (auto k : xs_at[3 * n_ + 3 * (l - 1) + i]) mark(k, l);
    for (std::size_t k = 1; k <= n_; ++k)
        for (std::size_t i = 0; i < 3; ++i)
            for (auto l : ys_at[3 * (k - 1) + i]) mark(k, l);
    return bad.size();
}

Rational EventAnalyzer::prob() const {
    const auto total = static_cast<std::int64_t>(n_ * (n_ - 1) / 2);
    return Rational(total - static_cast<std::int64_t>(bad_pairs()), total);
}

bool event_E(const ClassicalCircuit& c, std::size_t n, std::size_t k, std::size_t l) {
    return EventAnalyzer(c, n).event(k, l);
}

Rational prob_E(const ClassicalCircuit& c, std::size_t n) { return EventAnalyzer(c, n).prob(); }

namespace {

double half_log(double value, double base) { return 0.5 * std::log(value) / std::log(base); }

void check_bound_args(double n, double fan_in, double p) {
    if (!(n >= 2) || !(fan_in >= 2)) throw InvalidArgument("depth bounds need n >= 2 and B >= 2");
    if (!(p <= 1.0)) throw InvalidArgument("success probability must be at most 1");
}

}  // namespace

double bound_eq1(double n, double fan_in, double p) {
    check_bound_args(n, fan_in, p);
    if (!(p > 19.0 / 20.0)) throw DomainError("the depth bound is undefined for p <= 19/20");
    return half_log(n / 216.0 * (p - 19.0 / 20.0), fan_in);
}

double bound_eq3(double n, double fan_in, double p) {
    check_bound_args(n, fan_in, p);
    if (!(p > 8.0 / 9.0)) throw DomainError("the depth bound is undefined for p <= 8/9");
    return half_log(n / 80.0 * (p - 8.0 / 9.0), fan_in);
}

double prop5_lower_bound(std::size_t n, std::size_t fan_in, std::size_t depth) {
    return 1.0 - 216.0 * std::pow(static_cast<double>(fan_in), 2.0 * static_cast<double>(depth)) /
                     static_cast<double>(n);
}

bool satisfies_prop5(const Rational& prob, std::size_t n, std::size_t fan_in, std::size_t depth) {
    // num/den >= (n - 216 B^{2D}) / n
    __int128 power = 1;
    for (std::size_t i = 0; i < 2 * depth; ++i) power *= static_cast<__int128>(fan_in);
    const __int128 rhs_num = static_cast<__int128>(n) - 216 * power;
    return static_cast<__int128>(prob.num()) * static_cast<__int128>(n) >=
           rhs_num * static_cast<__int128>(prob.den());
}

ClassicalCircuit random_nc0_circuit(std::size_t n, std::size_t fan_in, std::size_t depth, Rng& rng,
                                    std::size_t random_inputs) {
    if (fan_in < 2 || fan_in > kMaxFanIn) throw InvalidArgument("random circuits need 2 <= B <= 16");
    if (depth < 1) throw InvalidArgument("random circuits need D >= 1");
    if (n < 1) throw InvalidArgument("random circuits need n >= 1");
    const std::size_t width = 6 * n;
    const std::size_t total_in = width + random_inputs;
    std::vector<ClassicalGate> gates;
    gates.reserve(width * depth);
    for (std::size_t d = 1; d <= depth; ++d) {
        const std::size_t prev_first = d >= 2 ? (d - 2) * width : 0;  // first gate of layer d-1
        auto from_prev = [&](std::size_t around) -> Wire {
            // half of the picks stay near `around`, the rest are uniform
            std::size_t pos = rng.bit() ? (around + width + rng.below(2 * fan_in + 1) - fan_in) % width
                                        : rng.below(width);
            return d == 1 ? Wire::input(static_cast<std::uint32_t>(pos))
                          : Wire::gate(static_cast<std::uint32_t>(prev_first + pos));
        };
        for (std::size_t g = 0; g < width; ++g) {
            ClassicalGate gate;
            const std::size_t f = 1 + rng.below(fan_in);
            gate.in.push_back(from_prev(g));
            while (gate.in.size() < f) {
                if (rng.bit()) gate.in.push_back(from_prev(g));
                else gate.in.push_back(Wire::input(static_cast<std::uint32_t>(rng.below(total_in))));
            }
            gate.table.resize(std::size_t{1} << f);
            for (auto& t : gate.table) t = rng.bit() ? 1 : 0;
            gates.push_back(std::move(gate));
        }
    }
    std::vector<Wire> outputs;
    for (std::size_t j = 0; j < width; ++j) outputs.push_back(Wire::gate(static_cast<std::uint32_t>((depth - 1) * width + j)));
    return ClassicalCircuit(width, random_inputs, std::move(gates), std::move(outputs));
}

ClassicalCircuit identity_circuit(std::size_t n) {
    std::vector<Wire> outputs;
    for (std::size_t j = 0; j < 6 * n; ++j) outputs.push_back(Wire::input(static_cast<std::uint32_t>(j)));
    return ClassicalCircuit(6 * n, 0, {}, std::move(outputs));
}

ClassicalCircuit constant_circuit(std::size_t n, int bit) {
    const auto b = static_cast<std::uint8_t>(bit & 1);
    std::vector<ClassicalGate> gates{{{Wire::input(0)}, {b, b}}};
    return ClassicalCircuit(6 * n, 0, std::move(gates), std::vector<Wire>(6 * n, Wire::gate(0)));
}

ClassicalCircuit strategy_circuit(std::size_t n, const game::DeterministicStrategy& alice,
                                  const game::DeterministicStrategy& bob) {
    std::vector<ClassicalGate> gates;
    std::vector<Wire> outputs(6 * n);
    auto lookup = [&](std::size_t first_input, const game::DeterministicStrategy& s, std::size_t first_output) {
        for (int r = 1; r <= 3; ++r) {
            ClassicalGate g;
            for (std::uint32_t b = 0; b < 3; ++b) g.in.push_back(Wire::input(static_cast<std::uint32_t>(first_input) + b));
            g.table.resize(8);
            for (std::size_t t = 0; t < 8; ++t) {
                // in[0] is the most significant bit of the block code
                const int code = static_cast<int>(((t & 1) << 2) | (t & 2) | ((t >> 2) & 1));
                if (game::EdgeId::is_edge_code(code))
                    g.table[t] = s(game::EdgeId(code)).at_rank(r) == -1 ? 1 : 0;
            }
            outputs[first_output + static_cast<std::size_t>(r - 1)] = Wire::gate(static_cast<std::uint32_t>(gates.size()));
            gates.push_back(std::move(g));
        }
    };
    for (std::size_t j = 0; j < n; ++j) {
        lookup(3 * j, alice, 3 * j);
        lookup(3 * n + 3 * j, bob, 3 * n + 3 * j);
    }
    return ClassicalCircuit(6 * n, 0, std::move(gates), std::move(outputs));
}

ClassicalCircuit parity_broadcast_circuit(std::size_t n) {
    std::vector<ClassicalGate> gates;
    std::vector<Wire> level;
    for (std::size_t i = 0; i < 6 * n; ++i) level.push_back(Wire::input(static_cast<std::uint32_t>(i)));
    while (level.size() > 1) {
        std::vector<Wire> next;
        for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
            gates.push_back({{level[i], level[i + 1]}, {0, 1, 1, 0}});
            next.push_back(Wire::gate(static_cast<std::uint32_t>(gates.size() - 1)));
        }
        if (level.size() % 2) next.push_back(level.back());
        level = std::move(next);
    }
    return ClassicalCircuit(6 * n, 0, std::move(gates), std::vector<Wire>(6 * n, level.front()));
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
    if (trials == 0) return {0.0, 1.0};
    const double nn = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (p + z2 / (2.0 * nn)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

AdversaryReport eval_adversary(const ClassicalCircuit& c, std::size_t n, std::uint64_t samples, std::uint64_t seed,
                               unsigned threads) {
    const EventAnalyzer events(c, n);
    threads = std::max(1u, threads);
    struct Counts {
        std::uint64_t ok = 0, e = 0, ok_e = 0;
    };
    std::vector<Counts> counts(threads);
    auto worker = [&](unsigned t) {
        Counts cnt;
        std::vector<std::uint8_t> in(c.total_inputs());
        for (std::uint64_t s = t; s < samples; s += threads) {
            Rng rng(seed, s);
            const mpp::MppInput x = mpp::sample_S(n, rng);
            const auto kl = *mpp::subset_of(x);
            const std::string bits = x.bits();
            for (std::size_t i = 0; i < bits.size(); ++i) in[i] = static_cast<std::uint8_t>(bits[i] - '0');
            for (std::size_t i = bits.size(); i < in.size(); ++i) in[i] = rng.bit() ? 1 : 0;
            const auto out = c.evaluate(in);
            mpp::MppOutput z(n);
            for (std::size_t pos = 0; pos < out.size(); ++pos) z.set_bit(pos, out[pos]);
            const bool ok = mpp::verify_support(x, z);
            const bool e = events.event(kl.k, kl.l);
            cnt.ok += ok;
            cnt.e += e;
            cnt.ok_e += ok && e;
        }
        counts[t] = cnt;
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    AdversaryReport r;
    r.samples = samples;
    for (const auto& cnt : counts) {
        r.successes += cnt.ok;
        r.samples_given_E += cnt.e;
        r.successes_given_E += cnt.ok_e;
    }
    r.prob_E = events.prob();
    r.success_rate = samples ? static_cast<double>(r.successes) / static_cast<double>(samples) : 0.0;
    r.success_rate_given_E = r.samples_given_E
                                 ? static_cast<double>(r.successes_given_E) / static_cast<double>(r.samples_given_E)
                                 : 0.0;
    r.ci = wilson_interval(r.successes, r.samples, kZ99);
    r.ci_given_E = wilson_interval(r.successes_given_E, r.samples_given_E, kZ99);
    return r;
}

}  // namespace pentagram::lightcone
