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
#include <numeric>
#include <ostream>
#include <string>

#include "pentagram/error.hpp"

namespace pentagram {

// Exact non-negative probability, always kept in lowest terms.
class Rational {
  public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den == 0) throw InvalidArgument("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const auto g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace pentagram
