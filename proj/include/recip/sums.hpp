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

#pragma once

#include <cstdint>

#include "recip/field.hpp"
#include "recip/regions.hpp"

namespace recip {

struct SumResult {
    Complex value;
    std::uint64_t terms = 0;     // (u, v) pairs summed
    std::uint64_t excluded = 0;  // nonempty columns skipped because f(u) == 0
    double trivial_bound = 0;    // U * V
    double benchmark = 0;        // sqrt(U * V * p)
};

/// S_f(A, B; C) = sum over (u, v) in C of A[u] B[v] e_p(v / f(u)).
///
/// Columns where f(u) == 0 are skipped and counted in `excluded`. Terms are
/// accumulated in lexicographic (u, v) order with pairwise summation; weights
/// are indexed from u = 1 (A[0] is alpha_1).
SumResult eval_S(const PolySpec& f, const WeightSeq& A, const WeightSeq& B, const ConvexRegion& region,
                 const FieldContext& ctx);

/// T_f(A, B; C) = sum of A[u] B[v] chi(v + f(u)), with chi(0) = 0.
SumResult eval_T(const MultChar& chi, const PolySpec& f, const WeightSeq& A, const WeightSeq& B,
                 const ConvexRegion& region, const FieldContext& ctx);

/// Bilinear Kloosterman sum: eval_S with f = aX + b. Throws ZeroLeadingCoeff when a == 0.
SumResult eval_K(std::int64_t a, std::int64_t b, const WeightSeq& A, const WeightSeq& B,
                 const ConvexRegion& region, const FieldContext& ctx);

SumResult eval_S_single(const PolySpec& f, const WeightSeq& A, const ConvexRegion& region,
                        const FieldContext& ctx);
SumResult eval_T_single(const MultChar& chi, const PolySpec& f, const WeightSeq& A,
                        const ConvexRegion& region, const FieldContext& ctx);
SumResult eval_K_single(std::int64_t a, std::int64_t b, const WeightSeq& A, const ConvexRegion& region,
                        const FieldContext& ctx);

/// sum_{v = X+1}^{Y} e_p(alpha v) with alpha = num / den (mod p), evaluated term by term.
Complex incomplete_linear_sum(std::int64_t num, std::int64_t den, std::int64_t X, std::int64_t Y,
                              const FieldContext& ctx);

/// sum_{u = 1}^{U} e_p(f(u)).
Complex weyl_sum(const PolySpec& f, std::int64_t U, const FieldContext& ctx);

/// U (1/U + p U^{-d})^sigma with sigma = 1 / (2 (d-1)(d-2)); d >= 3.
/// p is taken as a plain number so the shape can be tabulated at any scale.
double wooley_bound(int d, double U, double p);

}  // namespace recip
