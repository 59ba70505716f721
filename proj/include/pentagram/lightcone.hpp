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
#include <string>
#include <vector>

#include "pentagram/game.hpp"
#include "pentagram/rational.hpp"
#include "pentagram/rng.hpp"

namespace pentagram::lightcone {

// Reference to a circuit input ("i3") or to a gate output ("g7").
struct Wire {
    enum class Kind : std::uint8_t { Input, Gate };
    Kind kind = Kind::Input;
    std::uint32_t index = 0;

    static Wire input(std::uint32_t i) { return {Kind::Input, i}; }
    static Wire gate(std::uint32_t g) { return {Kind::Gate, g}; }
    std::string str() const;
    static Wire parse(const std::string& s);
    friend bool operator==(const Wire&, const Wire&) = default;
};

struct ClassicalGate {
    std::vector<Wire> in;
    std::vector<std::uint8_t> table;  // 2^fanin entries; entry index bit i = in[i]
};

// A bounded fan-in circuit. Inputs [0, 6n) carry X^in in the packed MPP
// layout; inputs [6n, 6n + r) are uniform random bits. Gates only read
// inputs or earlier gates, which makes the gate order topological.
class ClassicalCircuit {
  public:
    ClassicalCircuit(std::size_t data_inputs, std::size_t random_inputs, std::vector<ClassicalGate> gates,
                     std::vector<Wire> outputs);

    static ClassicalCircuit from_json(const std::string& text);
    std::string json() const;

    std::size_t data_inputs() const { return data_inputs_; }
    std::size_t random_inputs() const { return random_inputs_; }
    std::size_t total_inputs() const { return data_inputs_ + random_inputs_; }
    std::size_t num_outputs() const { return outputs_.size(); }
    const std::vector<ClassicalGate>& gates() const { return gates_; }
    const std::vector<Wire>& outputs() const { return outputs_; }

    // Number of gate layers; gate layer = 1 + max layer of its inputs.
    std::size_t depth() const { return depth_; }
    std::size_t layer(std::size_t gate) const { return layers_.at(gate); }
    std::size_t max_fan_in() const;

    // inputs.size() == total_inputs()
    std::vector<std::uint8_t> evaluate(const std::vector<std::uint8_t>& inputs) const;
    // 64 evaluations at once: bit b of every word belongs to evaluation b.
    std::vector<std::uint64_t> evaluate_words(const std::vector<std::uint64_t>& inputs) const;

  private:
    std::size_t data_inputs_;
    std::size_t random_inputs_;
    std::vector<ClassicalGate> gates_;
    std::vector<Wire> outputs_;
    std::vector<std::size_t> layers_;
    std::size_t depth_ = 0;
};

// Output positions reachable from data input `input_bit` (syntactic
// lightcone, a superset of the correlated outputs). Sorted.
std::vector<std::size_t> lightcone(const ClassicalCircuit& c, std::size_t input_bit);

// Lightcones of every data input, computed together from backward cones.
std::vector<std::vector<std::size_t>> all_lightcones(const ClassicalCircuit& c);

// Some input string flips output j when input i flips (exhaustive; the
// circuit may have at most 24 inputs in total).
bool correlated_exact(const ClassicalCircuit& c, std::size_t input_bit, std::size_t output_bit);
// correlated[i][j] for every input i (data and random) and output j.
std::vector<std::vector<bool>> correlation_table(const ClassicalCircuit& c);

inline constexpr std::size_t kMaxExhaustiveInputs = 24;

// Precomputed block lightcones for the MPP layout with n blocks.
class EventAnalyzer {
  public:
    EventAnalyzer(const ClassicalCircuit& c, std::size_t n);

    std::size_t n() const { return n_; }
    // L(x_k) ∩ L(y_l) = ∅, no bit of w_l in L(x_k), no bit of z_k in L(y_l).
    bool event(std::size_t k, std::size_t l) const;
    // Pairs k < l for which the event fails.
    std::uint64_t bad_pairs() const;
    Rational prob() const;

    const std::vector<std::size_t>& x_block_cone(std::size_t k) const { return x_cones_.at(k - 1); }
    const std::vector<std::size_t>& y_block_cone(std::size_t l) const { return y_cones_.at(l - 1); }

  private:
    std::size_t n_;
    std::vector<std::vector<std::size_t>> x_cones_;  // sorted output positions
    std::vector<std::vector<std::size_t>> y_cones_;
};

bool event_E(const ClassicalCircuit& c, std::size_t n, std::size_t k, std::size_t l);
Rational prob_E(const ClassicalCircuit& c, std::size_t n);

// ½ log_B[n/216 (p - 19/20)], defined for p > 19/20.
double bound_eq1(double n, double fan_in, double p);
// ½ log_B[n/80 (p - 8/9)], defined for p > 8/9.
double bound_eq3(double n, double fan_in, double p);
// 1 - 216 B^{2D} / n
double prop5_lower_bound(std::size_t n, std::size_t fan_in, std::size_t depth);
// prob >= 1 - 216 B^{2D} / n, compared exactly.
bool satisfies_prop5(const Rational& prob, std::size_t n, std::size_t fan_in, std::size_t depth);

// Layered random circuit with exact depth D and fan-in in [1, B]. The first
// wire of each gate comes from the previous layer; the others from the
// previous layer or from the inputs (random wires included).
ClassicalCircuit random_nc0_circuit(std::size_t n, std::size_t fan_in, std::size_t depth, Rng& rng,
                                    std::size_t random_inputs = 0);

// Output j wired straight to input j.
ClassicalCircuit identity_circuit(std::size_t n);
// Every output is the constant `bit` (a fan-in-1 gate on input 0).
ClassicalCircuit constant_circuit(std::size_t n, int bit = 0);
// z_j from a lookup on x_j and w_j from a lookup on y_j using the rank 1..3
// answers of the strategies; idle codes answer 0. All other bits are 0.
ClassicalCircuit strategy_circuit(std::size_t n, const game::DeterministicStrategy& alice,
                                  const game::DeterministicStrategy& bob);
// Every output is the parity of all data inputs (fan-in-2 XOR tree with
// unbounded fan-out), so every lightcone is the whole output register.
ClassicalCircuit parity_broadcast_circuit(std::size_t n);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double half_width() const { return 0.5 * (hi - lo); }
};

// Wilson score interval at normal quantile z.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z);
inline constexpr double kZ99 = 2.5758293035489004;

struct AdversaryReport {
    std::uint64_t samples = 0;
    std::uint64_t successes = 0;
    std::uint64_t samples_given_E = 0;
    std::uint64_t successes_given_E = 0;
    Rational prob_E;
    double success_rate = 0.0;
    double success_rate_given_E = 0.0;
    Interval ci;          // 99% Wilson
    Interval ci_given_E;  // 99% Wilson
};

// Draws X uniformly from S, runs the circuit with uniform random wires and
// scores each output by support membership in C^MPP(X)|0^{6n}>.
AdversaryReport eval_adversary(const ClassicalCircuit& c, std::size_t n, std::uint64_t samples,
                               std::uint64_t seed, unsigned threads = 1);

}  // namespace pentagram::lightcone
