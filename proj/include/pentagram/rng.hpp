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

#include <cstdint>

namespace pentagram {

// Counter-based generator: the n-th draw of stream (seed, stream) is a pure
// function of (seed, stream, n), so work can be split across threads by
// handing each sample its own stream without changing any result.
class Rng {
  public:
    Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(seed ^ mix(stream + 0x632BE59BD9B4E019ULL))) {}

    std::uint64_t next() { return mix(key_ + (++counter_) * 0x9E3779B97F4A7C15ULL); }

    bool bit() { return (next() >> 63) != 0; }

    // Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    Rng split(std::uint64_t child) const {
        Rng r(0);
        r.key_ = mix(key_ ^ mix(child + 0xD1B54A32D192ED03ULL));
        return r;
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace pentagram
