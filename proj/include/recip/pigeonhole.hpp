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
#include <span>
#include <vector>

#include "recip/field.hpp"

namespace recip {

struct ReductionResult {
    Elem t = 1;
    double c = 0;                     // max_i rho(a_i t) / T_i
    std::vector<std::uint64_t> per_i;  // rho(a_i t)
    bool guarantee_applies = false;   // prod T_i > p^d
};

/// Exhaustive search over t in [1, p-1] for the multiplier making every
/// rho(a_i t) small relative to T_i. Returns the minimizer of c, smallest t on
/// ties. Requires 1 <= T_i < p and at most 8 coefficients.
ReductionResult find_t(std::span<const std::int64_t> a, std::span<const double> T, const FieldContext& ctx);

struct CanonicalTargets {
    double W = 0;           // p^{d/(d+1)} U^{d/2}
    std::vector<double> T;  // T_i = W / U^i, i = 0..d
};

/// Targets with T_0 = T_1 U = ... = T_d U^d and prod T_i = p^d. Throws
/// PreconditionFailed unless U^{d/2} < p^{1/(d+1)}.
CanonicalTargets canonical_targets(int d, std::int64_t U, const FieldContext& ctx);

/// Integer polynomial g with g == t f (mod p) coefficientwise and |b_i| < p/2.
struct ShrunkenPoly {
    std::vector<std::int64_t> b;  // b_0 .. b_d
    Elem t = 1;
    double W = 0;
    std::vector<double> T;
    double c = 0;  // max_i |b_i| / T_i

    /// g(x) over the integers.
    __int128 eval(std::int64_t x) const;
};

ShrunkenPoly shrink_poly(const PolySpec& f, std::int64_t U, const FieldContext& ctx);

}  // namespace recip
