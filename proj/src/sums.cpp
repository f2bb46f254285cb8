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

#include "recip/sums.hpp"

#include <cmath>
#include <string>

#include "recip/error.hpp"

namespace recip {

namespace {

void check_weights(const WeightSeq& A, const WeightSeq& B, const ConvexRegion& region) {
    if (A.size() < static_cast<std::size_t>(region.U()))
        throw Error(ErrorKind::WeightTooShort,
                    "need " + std::to_string(region.U()) + " u-weights, got " + std::to_string(A.size()));
    if (B.size() < static_cast<std::size_t>(region.V()))
        throw Error(ErrorKind::WeightTooShort,
                    "need " + std::to_string(region.V()) + " v-weights, got " + std::to_string(B.size()));
}

SumResult make_result(const ConvexRegion& region, const FieldContext& ctx) {
    SumResult r;
    const double uv = static_cast<double>(region.U()) * static_cast<double>(region.V());
    r.trivial_bound = uv;
    r.benchmark = std::sqrt(uv * static_cast<double>(ctx.p()));
    return r;
}

}  // namespace

SumResult eval_S(const PolySpec& f, const WeightSeq& A, const WeightSeq& B, const ConvexRegion& region,
                 const FieldContext& ctx) {
    if (f.degree() < 1) throw Error(ErrorKind::BadDegree, "S_f needs deg f >= 1");
    check_weights(A, B, region);
    auto result = make_result(region, ctx);
    const auto p = ctx.p();
    PairwiseSum acc;
    for (std::int64_t u = 1; u <= region.U(); ++u) {
        const auto col = region.column(u);
        if (col.empty()) continue;
        const auto fu = poly_eval(f, static_cast<Elem>(u), ctx);
        if (fu == 0) {
            ++result.excluded;
            continue;
        }
        const auto c = ctx.inv(fu);
        const auto alpha = A[static_cast<std::size_t>(u - 1)];
        // phase index c * v mod p, stepped incrementally
        Elem idx = ctx.mul(c, static_cast<Elem>(col.lo + 1) % p);
        for (auto v = col.lo + 1; v <= col.hi; ++v) {
            acc.add(alpha * B[static_cast<std::size_t>(v - 1)] * ctx.unit_root(idx));
            idx += c;
            if (idx >= p) idx -= p;
        }
    }
    result.value = acc.result();
    result.terms = acc.count();
    return result;
}

SumResult eval_T(const MultChar& chi, const PolySpec& f, const WeightSeq& A, const WeightSeq& B,
                 const ConvexRegion& region, const FieldContext& ctx) {
    if (chi.modulus() != ctx.p())
        throw Error(ErrorKind::PreconditionFailed, "character built for a different modulus");
    check_weights(A, B, region);
    auto result = make_result(region, ctx);
    const auto p = ctx.p();
    PairwiseSum acc;
    for (std::int64_t u = 1; u <= region.U(); ++u) {
        const auto col = region.column(u);
        if (col.empty()) continue;
        const auto fu = poly_eval(f, static_cast<Elem>(u), ctx);
        const auto alpha = A[static_cast<std::size_t>(u - 1)];
        Elem arg = (static_cast<Elem>(col.lo + 1) % p + fu) % p;
        for (auto v = col.lo + 1; v <= col.hi; ++v) {
            acc.add(alpha * B[static_cast<std::size_t>(v - 1)] * chi(arg));
            if (++arg == p) arg = 0;
        }
    }
    result.value = acc.result();
    result.terms = acc.count();
    return result;
}

SumResult eval_K(std::int64_t a, std::int64_t b, const WeightSeq& A, const WeightSeq& B,
                 const ConvexRegion& region, const FieldContext& ctx) {
    if (ctx.reduce(a) == 0) throw Error(ErrorKind::ZeroLeadingCoeff, "Kloosterman sum needs a != 0");
    return eval_S(PolySpec::linear(a, b, ctx), A, B, region, ctx);
}

SumResult eval_S_single(const PolySpec& f, const WeightSeq& A, const ConvexRegion& region,
                        const FieldContext& ctx) {
    return eval_S(f, A, weights_unit(static_cast<std::size_t>(region.V())), region, ctx);
}

SumResult eval_T_single(const MultChar& chi, const PolySpec& f, const WeightSeq& A,
                        const ConvexRegion& region, const FieldContext& ctx) {
    return eval_T(chi, f, A, weights_unit(static_cast<std::size_t>(region.V())), region, ctx);
}

SumResult eval_K_single(std::int64_t a, std::int64_t b, const WeightSeq& A, const ConvexRegion& region,
                        const FieldContext& ctx) {
    return eval_K(a, b, A, weights_unit(static_cast<std::size_t>(region.V())), region, ctx);
}

Complex incomplete_linear_sum(std::int64_t num, std::int64_t den, std::int64_t X, std::int64_t Y,
                              const FieldContext& ctx) {
    const auto d = ctx.reduce(den);
    if (d == 0) throw Error(ErrorKind::ZeroDenominator, "alpha denominator divisible by p");
    if (X < 0 || Y < X || Y > static_cast<std::int64_t>(ctx.p()))
        throw Error(ErrorKind::BadBounds, "need 0 <= X <= Y <= p");
    const auto alpha = ctx.mul(ctx.reduce(num), ctx.inv(d));
    PairwiseSum acc;
    for (auto v = X + 1; v <= Y; ++v) acc.add(ctx.unit_root(ctx.mul(alpha, static_cast<Elem>(v) % ctx.p())));
    return acc.result();
}

Complex weyl_sum(const PolySpec& f, std::int64_t U, const FieldContext& ctx) {
    if (U < 0) throw Error(ErrorKind::BadBounds, "negative range");
    PairwiseSum acc;
    for (std::int64_t u = 1; u <= U; ++u) acc.add(ctx.unit_root(poly_eval(f, static_cast<Elem>(u), ctx)));
    return acc.result();
}

double wooley_bound(int d, double U, double p) {
    if (d < 3) throw Error(ErrorKind::DegreeTooSmall, "Weyl-sum bound needs d >= 3");
    if (U < 1 || U > p) throw Error(ErrorKind::BadBounds, "need 1 <= U <= p");
    const double sigma = 1.0 / (2.0 * (d - 1) * (d - 2));
    return U * std::pow(1.0 / U + p * std::pow(U, -d), sigma);
}

}  // namespace recip
