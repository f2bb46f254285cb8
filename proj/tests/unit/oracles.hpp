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

// Brute-force reference implementations. Nothing here calls into the
// library's field tables or sums; arithmetic is redone from scratch.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

using C = std::complex<double>;

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline std::uint64_t mod(std::int64_t a, std::uint64_t p) {
    const auto m = static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(((a % m) + m) % m);
}

inline std::uint64_t inv(std::uint64_t x, std::uint64_t p) { return powmod(x, p - 2, p); }

inline C ep(std::int64_t z, std::uint64_t p) {
    const long double t = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(mod(z, p)) /
                          static_cast<long double>(p);
    return {static_cast<double>(std::cos(t)), static_cast<double>(std::sin(t))};
}

// Euler's criterion.
inline int legendre(std::int64_t x, std::uint64_t p) {
    const auto r = powmod(mod(x, p), (p - 1) / 2, p);
    return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

inline std::uint64_t rho(std::int64_t a, std::uint64_t p) {
    const auto r = mod(a, p);
    return std::min(r, p - r);
}

inline std::uint64_t poly(const std::vector<std::int64_t>& c, std::uint64_t x, std::uint64_t p) {
    std::uint64_t acc = 0, xp = 1;
    for (auto a : c) {
        acc = (acc + mod(a, p) * xp) % p;
        xp = xp * (x % p) % p;
    }
    return acc;
}

// Number of 2k-tuples in [1,T] with alternating sum of 1/(at+b)^d equal to 0.
inline std::uint64_t J(int d, int k, std::int64_t a, std::int64_t b, std::int64_t T, std::uint64_t p) {
    std::vector<std::uint64_t> vals;
    for (std::int64_t t = 1; t <= T; ++t) {
        const auto base = mod(a * t + b, p);
        if (base) vals.push_back(inv(powmod(base, static_cast<std::uint64_t>(d), p), p));
    }
    const int n = 2 * k;
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    std::uint64_t count = 0;
    if (vals.empty()) return 0;
    while (true) {
        std::int64_t s = 0;
        for (int i = 0; i < n; ++i) s += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(vals[idx[i]]);
        count += mod(s, p) == 0;
        int i = 0;
        while (i < n && ++idx[i] == vals.size()) idx[i++] = 0;
        if (i == n) break;
    }
    return count;
}

// Direct evaluation of the discrepancy definition.
inline double discrepancy(const std::vector<std::uint64_t>& r, std::uint64_t p) {
    double worst = 0;
    const double U = static_cast<double>(r.size());
    for (std::uint64_t b = 0; b < p; ++b)
        for (std::uint64_t Z = 1; Z < p; ++Z) {
            std::uint64_t hits = 0;
            for (auto x : r)
                for (std::uint64_t z = 1; z <= Z; ++z) hits += x % p == (b + z) % p;
            worst = std::max(worst, std::abs(static_cast<double>(hits) - U * static_cast<double>(Z) / p) / U);
        }
    return worst;
}

}  // namespace oracle
