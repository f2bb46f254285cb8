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

#include <string>
#include <string_view>
#include <vector>

#include "recip/rational.hpp"

namespace recip {

// Exponent calculus: with U = p^alpha and V = p^beta, every bound below is
// p^{exponent + o(1)}; the functions return the exact exponent. A bound is
// nontrivial when its exponent is strictly below alpha + beta.

/// sqrt(UVp) benchmark for bilinear S_f and T_f: (alpha + beta + 1) / 2.
Rational exp_trivial_bilinear(const Rational& alpha, const Rational& beta);
/// p log p bound for single-weight S_f: 1.
Rational exp_trivial_single();
/// Single-weight S_f, degree d: max(d/(d+1) + d alpha / 2, beta).
Rational exp_S_pure(int d, const Rational& alpha, const Rational& beta);
/// Sliced form of exp_S_pure: beta when alpha <= 2 beta / d - 2/(d+1),
/// else alpha + (1 - 2/d) beta + 2/(d+1).
Rational exp_S_pure_slice(int d, const Rational& alpha, const Rational& beta);
/// Bilinear sums with f = (aX+b)^d and Hoelder parameter k:
/// beta (1 - 1/(2k)) + max(alpha, alpha k/(k+1) + 1/(2k)).
Rational exp_S_abd(int k, const Rational& alpha, const Rational& beta);
/// Bilinear Kloosterman, first form: 3 beta/4 + max(7 alpha/8 + 1/8, alpha/2 + 1/4).
Rational exp_K_mix1(const Rational& alpha, const Rational& beta);
/// Bilinear Kloosterman, second form: max(alpha + beta/2 + 1/3, alpha/2 + beta).
Rational exp_K_mix2(const Rational& alpha, const Rational& beta);
/// Single-weight Kloosterman reference: max((1 + alpha)/2, beta).
Rational exp_K_pure(const Rational& alpha, const Rational& beta);
/// Single-weight Kloosterman with b = 0: max(alpha, beta).
Rational exp_K_zero(const Rational& alpha, const Rational& beta);

bool is_nontrivial(const Rational& exponent, const Rational& alpha, const Rational& beta);

struct OptimalK {
    std::vector<int> k_set;  // every minimizing k, ascending
    Rational exponent;
};

/// Minimizes exp_S_abd over k in [1, k_max].
OptimalK optimal_k(const Rational& alpha, const Rational& beta, int k_max = 64);

enum class BoundLabel {
    SPure,            // single-weight S_f, d = 1
    SPureSlice,       // sliced single-weight S_f, d = 1
    SAbd,             // (aX+b)^d bilinear, optimal k
    KMix1,
    KMix2,
    TrivialBilinear,  // sqrt(UVp)
    TrivialSingle,    // p log p
    KPure,
    KZero,
};

std::string_view to_string(BoundLabel label);

struct BoundRow {
    BoundLabel label;
    Rational exponent;
    bool nontrivial = false;
    bool winner = false;
    std::vector<int> k_set;  // SAbd only
};

struct ComparisonRow {
    Rational alpha;
    Rational beta;
    std::vector<BoundRow> bounds;

    const BoundRow& at(BoundLabel label) const;
};

/// For each (alpha, beta): the three competing bilinear Kloosterman bounds
/// (SAbd at its optimal k, KMix1, KMix2) plus reference rows. The winner is
/// the unique smallest nontrivial exponent among the three competitors; ties
/// or no nontrivial competitor leave no winner.
std::vector<ComparisonRow> compare_table(const std::vector<std::pair<Rational, Rational>>& points, int k_max = 64);

/// (2/5, 3/10), (2/5, 2/5), (1/5, 4/5).
std::vector<std::pair<Rational, Rational>> reference_points();

/// Differences between `rows` (computed at reference_points()) and the
/// published comparison; empty when everything matches exactly.
std::vector<std::string> reference_table_mismatches(const std::vector<ComparisonRow>& rows);

/// alpha >= 1/d + eps and beta >= 1/4 - delta; d >= 3 (BadDegree otherwise).
bool T_pure_hypotheses(int d, const Rational& alpha, const Rational& beta, const Rational& eps,
                       const Rational& delta);

}  // namespace recip
