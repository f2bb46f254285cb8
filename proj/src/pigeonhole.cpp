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

#include "recip/pigeonhole.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "recip/error.hpp"

namespace recip {

ReductionResult find_t(std::span<const std::int64_t> a, std::span<const double> T, const FieldContext& ctx) {
    if (a.empty() || a.size() != T.size())
        throw Error(ErrorKind::PreconditionFailed, "need one target per coefficient");
    if (a.size() > 8) throw Error(ErrorKind::PreconditionFailed, "at most 8 coefficients (d <= 7)");
    const auto p = ctx.p();
    for (auto x : T)
        if (!(x >= 1.0) || !(x < static_cast<double>(p)))
            throw Error(ErrorKind::PreconditionFailed, "targets must satisfy 1 <= T_i < p");

    std::vector<Elem> ar;
    for (auto x : a) ar.push_back(ctx.reduce(x));

    ReductionResult best;
    best.c = std::numeric_limits<double>::infinity();
    for (Elem t = 1; t < p; ++t) {
        double c = 0;
        for (std::size_t i = 0; i < ar.size() && c < best.c; ++i) {
            const auto r = ctx.mul(ar[i], t);
            c = std::max(c, static_cast<double>(std::min(r, p - r)) / T[i]);
        }
        if (c < best.c) {
            best.c = c;
            best.t = t;
        }
    }
    for (auto x : ar) {
        const auto r = ctx.mul(x, best.t);
        best.per_i.push_back(std::min(r, p - r));
    }

    const int d = static_cast<int>(a.size()) - 1;
    double log_prod = 0;
    for (auto x : T) log_prod += std::log(x);
    best.guarantee_applies = log_prod > d * std::log(static_cast<double>(p));
    return best;
}

CanonicalTargets canonical_targets(int d, std::int64_t U, const FieldContext& ctx) {
    if (d < 1) throw Error(ErrorKind::BadDegree, "targets need d >= 1");
    const auto p = static_cast<double>(ctx.p());
    const auto u = static_cast<double>(U);
    if (U < 1 || U >= static_cast<std::int64_t>(ctx.p())) throw Error(ErrorKind::BadBounds, "need 1 <= U < p");
    if (!(std::pow(u, d / 2.0) < std::pow(p, 1.0 / (d + 1))))
        throw Error(ErrorKind::PreconditionFailed, "U^{d/2} < p^{1/(d+1)} fails for U = " + std::to_string(U));
    CanonicalTargets out;
    out.W = std::pow(p, static_cast<double>(d) / (d + 1)) * std::pow(u, d / 2.0);
    for (int i = 0; i <= d; ++i) out.T.push_back(out.W / std::pow(u, i));

    double log_prod = 0;
    for (auto x : out.T) log_prod += std::log(x);
    const double want = d * std::log(p);
    if (std::abs(std::expm1(log_prod - want)) > 1e-9)
        throw Error(ErrorKind::PreconditionFailed, "target product drifted from p^d");
    if (!(out.T.back() >= 1.0 - 1e-12) || !(out.W < p))
        throw Error(ErrorKind::PreconditionFailed, "targets leave [1, p)");
    return out;
}

__int128 ShrunkenPoly::eval(std::int64_t x) const {
    __int128 acc = 0;
    for (auto it = b.rbegin(); it != b.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ShrunkenPoly shrink_poly(const PolySpec& f, std::int64_t U, const FieldContext& ctx) {
    const int d = f.degree();
    const auto targets = canonical_targets(d, U, ctx);
    std::vector<std::int64_t> a;
    for (auto c : f.coeffs()) a.push_back(static_cast<std::int64_t>(c));
    // rounding can leave T_d a hair under 1
    std::vector<double> T = targets.T;
    for (auto& x : T) x = std::max(x, 1.0);
    const auto red = find_t(a, T, ctx);

    ShrunkenPoly g;
    g.t = red.t;
    g.W = targets.W;
    g.T = targets.T;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto bi = ctx.signed_residue(static_cast<std::int64_t>(ctx.mul(ctx.reduce(a[i]), red.t)));
        g.b.push_back(bi);
        g.c = std::max(g.c, std::abs(static_cast<double>(bi)) / T[i]);
    }
    return g;
}

}  // namespace recip
