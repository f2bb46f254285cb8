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

#include "recip/field.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>

#include "recip/error.hpp"

namespace recip {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::ZeroInverse: return "ZeroInverse";
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::BadBounds: return "BadBounds";
        case ErrorKind::NotConvex: return "NotConvex";
        case ErrorKind::OutOfBox: return "OutOfBox";
        case ErrorKind::WeightTooShort: return "WeightTooShort";
        case ErrorKind::ZeroLeadingCoeff: return "ZeroLeadingCoeff";
        case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorKind::BadDegree: return "BadDegree";
        case ErrorKind::BadK: return "BadK";
        case ErrorKind::RangeTooLarge: return "RangeTooLarge";
        case ErrorKind::EmptyPrimeSet: return "EmptyPrimeSet";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t q = 3; q * q <= n; q += 2)
        if (n % q == 0) return false;
    return true;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        out.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t powmod(std::uint64_t x, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    x %= m;
    while (e) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return r;
}

std::uint64_t inverse_euclid(std::uint64_t x, std::uint64_t p) {
    std::int64_t a = static_cast<std::int64_t>(x), b = static_cast<std::int64_t>(p);
    std::int64_t s0 = 1, s1 = 0;
    while (b != 0) {
        const auto q = a / b;
        a -= q * b;
        std::swap(a, b);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    const auto m = static_cast<std::int64_t>(p);
    s0 %= m;
    return static_cast<std::uint64_t>(s0 < 0 ? s0 + m : s0);
}

Complex root_of_unity(std::uint64_t num, std::uint64_t den) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num) /
                               static_cast<double>(den));
}

}  // namespace

Elem primitive_root(std::uint64_t p) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
    if (p == 2) return 1;
    const auto qs = prime_factors(p - 1);
    for (Elem g = 2; g < p; ++g) {
        bool ok = true;
        for (auto q : qs) {
            if (powmod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw Error(ErrorKind::NotPrime, "no primitive root for " + std::to_string(p));
}

std::uint64_t discrete_log(Elem g, Elem x, std::uint64_t p) {
    x %= p;
    if (x == 0) throw Error(ErrorKind::ZeroInverse, "discrete log of 0");
    const auto n = p - 1;
    auto m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    if (m == 0) m = 1;
    std::unordered_map<std::uint64_t, std::uint64_t> baby;
    baby.reserve(m);
    std::uint64_t cur = 1;
    for (std::uint64_t j = 0; j < m; ++j) {
        baby.emplace(cur, j);
        cur = cur * g % p;
    }
    // cur == g^m now
    const auto giant = inverse_euclid(cur, p);
    std::uint64_t y = x;
    for (std::uint64_t i = 0; i <= m; ++i) {
        if (auto it = baby.find(y); it != baby.end()) return (i * m + it->second) % n;
        y = y * giant % p;
    }
    throw Error(ErrorKind::PreconditionFailed, "discrete log not found; is g primitive?");
}

FieldContext::FieldContext(std::uint64_t p, std::uint64_t index_table_cap)
    : p_(p), cap_(index_table_cap), g_(0) {
    if (p < 3 || p % 2 == 0 || p >= kMaxModulus || !is_prime(p))
        throw Error(ErrorKind::NotPrime, "modulus must be an odd prime below 2^31, got " +
                                             std::to_string(p));
    g_ = primitive_root(p);
    if (p > cap_) return;

    inv_.assign(p, 0);
    inv_[1] = 1;
    for (std::uint64_t i = 2; i < p; ++i) inv_[i] = (p - (p / i) * inv_[p % i] % p) % p;

    ind_.assign(p, 0);
    Elem x = 1;
    for (std::uint64_t k = 0; k + 1 < p; ++k) {
        ind_[x] = static_cast<std::uint32_t>(k);
        x = x * g_ % p;
    }

    roots_.resize(p);
    for (std::uint64_t r = 0; r < p; ++r) roots_[r] = root_of_unity(r, p);
}

Elem FieldContext::pow(Elem x, std::uint64_t e) const noexcept { return powmod(x, e, p_); }

Elem FieldContext::inv(Elem x) const {
    x %= p_;
    if (x == 0) throw Error(ErrorKind::ZeroInverse, "0 has no inverse mod " + std::to_string(p_));
    return inv_.empty() ? inverse_euclid(x, p_) : inv_[x];
}

std::uint64_t FieldContext::index(Elem x) const {
    x %= p_;
    if (x == 0) throw Error(ErrorKind::ZeroInverse, "index of 0 is undefined");
    return ind_.empty() ? discrete_log(g_, x, p_) : ind_[x];
}

Complex FieldContext::unit_root(Elem r) const noexcept {
    return roots_.empty() ? root_of_unity(r, p_) : roots_[r];
}

Elem mod_inv(Elem x, const FieldContext& ctx) { return ctx.inv(x); }

std::uint64_t rho_int(std::int64_t a, const FieldContext& ctx) {
    const auto r = ctx.reduce(a);
    return std::min(r, ctx.p() - r);
}

std::uint64_t rho_frac(std::int64_t u, std::int64_t v, const FieldContext& ctx) {
    const auto den = ctx.reduce(v);
    if (den == 0) throw Error(ErrorKind::ZeroDenominator, "denominator divisible by p");
    const auto w = ctx.mul(ctx.reduce(u), ctx.inv(den));
    return std::min(w, ctx.p() - w);
}

Complex e_p(std::int64_t z, const FieldContext& ctx) { return ctx.unit_root(ctx.reduce(z)); }

PolySpec::PolySpec(std::span<const std::int64_t> coeffs, const FieldContext& ctx) : p_(ctx.p()) {
    if (coeffs.empty()) throw Error(ErrorKind::ZeroLeadingCoeff, "empty coefficient list");
    coeffs_.reserve(coeffs.size());
    for (auto c : coeffs) coeffs_.push_back(ctx.reduce(c));
    if (coeffs_.back() == 0)
        throw Error(ErrorKind::ZeroLeadingCoeff,
                    "leading coefficient vanishes mod " + std::to_string(p_));
}

PolySpec::PolySpec(std::initializer_list<std::int64_t> coeffs, const FieldContext& ctx)
    : PolySpec(std::span<const std::int64_t>(coeffs.begin(), coeffs.size()), ctx) {}

PolySpec PolySpec::linear(std::int64_t a, std::int64_t b, const FieldContext& ctx) {
    return PolySpec({b, a}, ctx);
}

PolySpec PolySpec::monomial(int d, const FieldContext& ctx) {
    if (d < 0) throw Error(ErrorKind::BadDegree, "negative degree");
    std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1, 0);
    c.back() = 1;
    return PolySpec(c, ctx);
}

Elem poly_eval(const PolySpec& f, Elem x, const FieldContext& ctx) {
    if (f.modulus() != ctx.p())
        throw Error(ErrorKind::PreconditionFailed, "polynomial built for a different modulus");
    x %= ctx.p();
    const auto c = f.coeffs();
    Elem acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = ctx.add(ctx.mul(acc, x), *it);
    return acc;
}

MultChar::MultChar(const FieldContext& ctx, std::uint64_t order, std::uint64_t index)
    : p_(ctx.p()), m_(order), j_(index), g_(ctx.generator()) {
    if (m_ < 2 || (p_ - 1) % m_ != 0)
        throw Error(ErrorKind::PreconditionFailed,
                    "character order " + std::to_string(m_) + " must divide p-1 and be >= 2");
    if (j_ < 1 || j_ >= m_)
        throw Error(ErrorKind::PreconditionFailed, "character index must lie in [1, m-1]");
    if (!ctx.has_tables()) return;
    table_.assign(p_, Complex{});
    Elem x = 1;
    for (std::uint64_t k = 0; k + 1 < p_; ++k) {
        table_[x] = root_of_unity(j_ * k % m_, m_);
        x = x * g_ % p_;
    }
}

Complex MultChar::operator()(Elem x) const {
    x %= p_;
    if (x == 0) return {};
    if (!table_.empty()) return table_[x];
    return root_of_unity(j_ * (discrete_log(g_, x, p_) % m_) % m_, m_);
}

Complex chi_eval(const MultChar& chi, Elem x) { return chi(x); }

void PairwiseSum::add(Complex x) {
    block_ += x;
    ++n_;
    if (++in_block_ < kBlock) return;
    Complex carry = block_;
    block_ = {};
    in_block_ = 0;
    for (std::size_t lvl = 0;; ++lvl) {
        if (lvl == levels_.size()) {
            levels_.push_back(carry);
            occupied_.push_back(true);
            return;
        }
        if (!occupied_[lvl]) {
            levels_[lvl] = carry;
            occupied_[lvl] = true;
            return;
        }
        carry = levels_[lvl] + carry;
        occupied_[lvl] = false;
    }
}

Complex PairwiseSum::result() const {
    Complex r = block_;
    for (std::size_t lvl = 0; lvl < levels_.size(); ++lvl)
        if (occupied_[lvl]) r = levels_[lvl] + r;
    return r;
}

Complex pairwise_sum(std::span<const Complex> terms) {
    PairwiseSum acc;
    for (auto t : terms) acc.add(t);
    return acc.result();
}

}  // namespace recip
