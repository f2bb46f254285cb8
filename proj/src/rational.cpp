// Copyright 2026 The recip-sums Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "recip/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "recip/error.hpp"

namespace recip {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < -std::numeric_limits<std::int64_t>::max())
        throw Error(ErrorKind::Overflow, "rational component exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        auto t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make(i128 num, i128 den) {
    if (den == 0) throw Error(ErrorKind::ZeroDenominator, "rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const auto g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational(narrow(num), narrow(den));
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw Error(ErrorKind::ConfigError, "not a rational: '" + std::string(whole) + "'");
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorKind::ZeroDenominator, "rational with zero denominator");
    i128 n = num, d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const auto g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n);
    den_ = narrow(d);
}

Rational Rational::parse(std::string_view text) {
    const auto t = trim(text);
    const auto slash = t.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(t, text));
    return Rational(parse_int(trim(t.substr(0, slash)), text),
                    parse_int(trim(t.substr(slash + 1)), text));
}

std::int64_t Rational::floor() const noexcept {
    auto q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::int64_t Rational::ceil() const noexcept {
    auto q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

std::string Rational::str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(ErrorKind::ZeroDenominator, "division by zero rational");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const i128 l = i128(a.num_) * b.den_;
    const i128 r = i128(b.num_) * a.den_;
    return l <=> r;
}

}  // namespace recip
