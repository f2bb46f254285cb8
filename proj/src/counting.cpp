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

#include "recip/counting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "recip/error.hpp"

namespace recip {

namespace {

// x^e with saturation at `limit + 1`.
std::uint64_t saturating_pow(std::uint64_t x, int e, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (x != 0 && r > limit / x) return limit + 1;
        r *= x;
    }
    return r;
}

std::vector<Elem> reciprocal_powers(int d, std::int64_t a, std::int64_t b, std::int64_t T,
                                    const FieldContext& ctx) {
    if (d < 1) throw Error(ErrorKind::BadDegree, "J needs d >= 1");
    if (ctx.reduce(a) == 0) throw Error(ErrorKind::ZeroLeadingCoeff, "J needs a != 0");
    if (T < 1 || T >= static_cast<std::int64_t>(ctx.p())) throw Error(ErrorKind::BadBounds, "J needs 1 <= T < p");
    std::vector<Elem> vals;
    vals.reserve(static_cast<std::size_t>(T));
    const auto ra = ctx.reduce(a), rb = ctx.reduce(b);
    for (std::int64_t t = 1; t <= T; ++t) {
        const auto lin = ctx.add(ctx.mul(ra, static_cast<Elem>(t)), rb);
        if (lin == 0) continue;
        vals.push_back(ctx.pow(ctx.inv(lin), static_cast<std::uint64_t>(d)));
    }
    return vals;
}

CountReport report(std::uint64_t count, double rhs) {
    return {count, rhs, rhs > 0 ? static_cast<double>(count) / rhs : std::numeric_limits<double>::infinity()};
}

}  // namespace

std::uint64_t Histogram::total() const noexcept {
    std::uint64_t s = 0;
    for (auto c : counts) s += c;
    return s;
}

std::uint64_t Histogram::energy() const {
    unsigned __int128 s = 0;
    for (auto c : counts) s += static_cast<unsigned __int128>(c) * c;
    if (s > std::numeric_limits<std::uint64_t>::max()) throw Error(ErrorKind::Overflow, "histogram energy");
    return static_cast<std::uint64_t>(s);
}

WorkCaps WorkCaps::from_env() {
    WorkCaps caps;
    if (const char* env = std::getenv("RECIP_SUMS_WORKCAP"); env && *env) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (!end || *end != '\0' || v == 0 || *env == '-')
            throw Error(ErrorKind::ConfigError, std::string("RECIP_SUMS_WORKCAP must be a positive integer, got '") +
                                                    env + "'");
        caps.max_states = v;
    }
    return caps;
}

const WorkCaps& default_caps() {
    static const WorkCaps caps = WorkCaps::from_env();
    return caps;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    if (hi < 2 || hi < lo) return out;
    std::vector<bool> composite(hi + 1, false);
    for (std::uint64_t i = 2; i * i <= hi; ++i)
        if (!composite[i])
            for (auto j = i * i; j <= hi; j += i) composite[j] = true;
    for (auto n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n)
        if (!composite[n]) out.push_back(n);
    return out;
}

double J_bound_rhs(int d, int k, double T, double p) {
    if (d == 1 && k == 2) return std::pow(T, 3.5) / std::sqrt(p) + T * T;
    return std::pow(T, 2.0 * k) / p + std::pow(T, 2.0 * k * k / (k + 1.0));
}

CountReport count_J_naive(int d, int k, std::int64_t a, std::int64_t b, std::int64_t T, const FieldContext& ctx,
                          const WorkCaps& caps) {
    if (k < 1) throw Error(ErrorKind::BadK, "J needs k >= 1");
    const auto vals = reciprocal_powers(d, a, b, T, ctx);
    const auto states = saturating_pow(vals.size(), 2 * k, caps.max_states);
    if (states > caps.max_states)
        throw Error(ErrorKind::RangeTooLarge, "T^{2k} = " + std::to_string(vals.size()) + "^" +
                                                  std::to_string(2 * k) + " exceeds the work cap");
    const int len = 2 * k;
    std::uint64_t count = 0;
    auto walk = [&](auto&& self, int pos, Elem acc) -> void {
        if (pos == len) {
            if (acc == 0) ++count;
            return;
        }
        // position pos carries sign (-1)^{pos+1}
        const bool negative = pos % 2 == 0;
        for (auto x : vals) self(self, pos + 1, negative ? ctx.sub(acc, x) : ctx.add(acc, x));
    };
    walk(walk, 0, 0);
    return report(count, J_bound_rhs(d, k, static_cast<double>(T), static_cast<double>(ctx.p())));
}

CountReport count_J_conv(int d, int k, std::int64_t a, std::int64_t b, std::int64_t T, const FieldContext& ctx,
                         const WorkCaps& caps) {
    if (k < 1) throw Error(ErrorKind::BadK, "J needs k >= 1");
    const auto p = ctx.p();
    if (p > caps.conv_max_p)
        throw Error(ErrorKind::RangeTooLarge, "convolution counting refuses p > " + std::to_string(caps.conv_max_p));
    const auto vals = reciprocal_powers(d, a, b, T, ctx);
    const auto n = static_cast<std::uint64_t>(vals.size());
    constexpr auto kMaxCount = std::numeric_limits<std::uint64_t>::max() / 2;
    if (saturating_pow(n, 2 * k, kMaxCount) > kMaxCount)
        throw Error(ErrorKind::RangeTooLarge, "T^{2k} does not fit in 64 bits");
    std::uint64_t work = 0;
    for (int j = 1; j < k; ++j) work += std::min<std::uint64_t>(p, saturating_pow(n, j, p)) * n;
    if (work > caps.max_states) throw Error(ErrorKind::RangeTooLarge, "convolution work exceeds the cap");

    std::vector<std::uint64_t> base(p, 0);
    for (auto x : vals) ++base[x];
    std::vector<std::pair<Elem, std::uint64_t>> base_support;
    for (Elem x = 0; x < p; ++x)
        if (base[x]) base_support.emplace_back(x, base[x]);

    Histogram layer{base};
    for (int j = 1; j < k; ++j) {
        std::vector<std::uint64_t> next(p, 0);
        for (Elem x = 0; x < p; ++x) {
            const auto c = layer.counts[x];
            if (!c) continue;
            for (const auto& [y, m] : base_support) {
                auto z = x + y;
                if (z >= p) z -= p;
                next[z] += c * m;
            }
        }
        layer.counts = std::move(next);
    }
    return report(layer.energy(), J_bound_rhs(d, k, static_cast<double>(T), static_cast<double>(p)));
}

CountReport count_N(const PolySpec& f, std::int64_t U, std::int64_t Z, const FieldContext& ctx) {
    const auto p = static_cast<std::int64_t>(ctx.p());
    if (U < 1 || U >= p || Z < 1 || Z >= p) throw Error(ErrorKind::BadBounds, "N_f needs 1 <= U, Z < p");
    std::uint64_t count = 0;
    for (std::int64_t u = 1; u <= U; ++u) {
        const auto fu = poly_eval(f, static_cast<Elem>(u), ctx);
        if (fu == 0) continue;
        if (static_cast<std::int64_t>(ctx.inv(fu)) <= Z) ++count;
    }
    const double d = f.degree();
    const double rhs = std::pow(static_cast<double>(U), d / 2.0) * static_cast<double>(Z) *
                           std::pow(static_cast<double>(p), -1.0 / (d + 1.0)) +
                       1.0;
    return report(count, rhs);
}

Histogram count_I_lambda(std::span<const Elem> r, std::int64_t L, std::int64_t V, const FieldContext& ctx) {
    if (L < 1 || V < 1) throw Error(ErrorKind::BadBounds, "I(lambda) needs L, V >= 1");
    const auto primes = primes_in(static_cast<std::uint64_t>(L), static_cast<std::uint64_t>(2 * L));
    if (primes.empty()) throw Error(ErrorKind::EmptyPrimeSet, "no prime in [" + std::to_string(L) + ", " +
                                                                  std::to_string(2 * L) + "]");
    const auto p = ctx.p();
    std::vector<Elem> inv_l;
    for (auto l : primes) {
        if (l % p == 0) throw Error(ErrorKind::PreconditionFailed, "prime " + std::to_string(l) + " equals p");
        inv_l.push_back(ctx.inv(l % p));
    }
    Histogram h{std::vector<std::uint64_t>(p, 0)};
    for (auto il : inv_l)
        for (auto ru : r)
            for (std::int64_t v = 1; v <= V; ++v) ++h.counts[ctx.mul(ctx.add(static_cast<Elem>(v) % p, ru % p), il)];
    return h;
}

CountReport count_N_tuples(std::span<const Elem> r, std::int64_t L, std::int64_t V, const FieldContext& ctx) {
    const auto h = count_I_lambda(r, L, V, ctx);
    const double U = static_cast<double>(r.size());
    return report(h.energy(), static_cast<double>(L) * U * U * static_cast<double>(V));
}

double char_moment(const MultChar& chi, std::int64_t K, int nu, const FieldContext& ctx) {
    const auto p = ctx.p();
    if (K < 1 || K >= static_cast<std::int64_t>(p)) throw Error(ErrorKind::BadBounds, "moment needs 1 <= K < p");
    if (nu < 1) throw Error(ErrorKind::PreconditionFailed, "moment needs nu >= 1");
    long double total = 0;
    for (Elem lambda = 0; lambda < p; ++lambda) {
        PairwiseSum inner;
        Elem x = lambda;
        for (std::int64_t k = 1; k <= K; ++k) {
            if (++x == p) x = 0;
            inner.add(chi(x));
        }
        total += std::pow(static_cast<long double>(std::norm(inner.result())), nu);
    }
    return static_cast<double>(total);
}

std::uint64_t RhoCensus::total() const noexcept {
    std::uint64_t s = R + band_I + excluded;
    for (auto q : Q) s += q;
    return s;
}

RhoCensus rho_census(const PolySpec& f, std::int64_t U, std::int64_t V, const FieldContext& ctx) {
    const auto p = static_cast<double>(ctx.p());
    if (U < 1 || V < 1 || U > static_cast<std::int64_t>(ctx.p()) || V > static_cast<std::int64_t>(ctx.p()))
        throw Error(ErrorKind::BadBounds, "census needs 1 <= U, V <= p");
    RhoCensus c;
    c.I = static_cast<int>(std::floor(std::log(2.0 * p / static_cast<double>(V))));
    c.J = static_cast<int>(std::floor(std::log(2.0 * p)));
    c.Q.assign(static_cast<std::size_t>(std::max(0, c.J - c.I)), 0);
    for (std::int64_t u = 1; u <= U; ++u) {
        const auto fu = poly_eval(f, static_cast<Elem>(u) % ctx.p(), ctx);
        if (fu == 0) {
            ++c.excluded;
            continue;
        }
        const auto rho = static_cast<double>(rho_int(static_cast<std::int64_t>(ctx.inv(fu)), ctx));
        auto j = static_cast<int>(std::floor(std::log(rho)));
        while (j > 0 && std::exp(j) > rho) --j;
        while (std::exp(j + 1) <= rho) ++j;
        if (j < c.I)
            ++c.R;
        else if (j == c.I)
            ++c.band_I;
        else
            ++c.Q.at(static_cast<std::size_t>(j - c.I - 1));
    }
    return c;
}

double discrepancy(std::span<const Elem> r, const FieldContext& ctx) {
    if (r.empty()) throw Error(ErrorKind::PreconditionFailed, "discrepancy of an empty sequence");
    const auto p = ctx.p();
    std::vector<std::uint64_t> hist(p, 0);
    for (auto x : r) ++hist[x % p];
    // D(i) = #{u : r_u < i} - U i / p is p-periodic after extension, and every
    // shifted interval count minus its expectation is a difference D(j) - D(i)
    // with i != j (mod p).
    const double U = static_cast<double>(r.size());
    double lo = 0, hi = 0;
    std::uint64_t prefix = 0;
    for (Elem i = 0; i < p; ++i) {
        const double D = static_cast<double>(prefix) - U * static_cast<double>(i) / static_cast<double>(p);
        lo = std::min(lo, D);
        hi = std::max(hi, D);
        prefix += hist[i];
    }
    return (hi - lo) / U;
}

}  // namespace recip
