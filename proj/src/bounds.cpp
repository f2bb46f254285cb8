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

#include "recip/bounds.hpp"

#include <algorithm>

#include "recip/error.hpp"

namespace recip {

namespace {

void check_degree(int d) {
    if (d < 1) throw Error(ErrorKind::BadDegree, "degree must be >= 1");
}

}  // namespace

Rational exp_trivial_bilinear(const Rational& alpha, const Rational& beta) {
    return (alpha + beta + Rational(1)) / Rational(2);
}

Rational exp_trivial_single() { return Rational(1); }

Rational exp_S_pure(int d, const Rational& alpha, const Rational& beta) {
    check_degree(d);
    return max(Rational(d, d + 1) + Rational(d, 2) * alpha, beta);
}

Rational exp_S_pure_slice(int d, const Rational& alpha, const Rational& beta) {
    check_degree(d);
    const auto threshold = Rational(2, d) * beta - Rational(2, d + 1);
    if (alpha <= threshold) return beta;
    return alpha + (Rational(1) - Rational(2, d)) * beta + Rational(2, d + 1);
}

Rational exp_S_abd(int k, const Rational& alpha, const Rational& beta) {
    if (k < 1) throw Error(ErrorKind::BadK, "Hoelder parameter must be >= 1");
    const Rational half_inv(1, 2 * k);
    return beta * (Rational(1) - half_inv) + max(alpha, alpha * Rational(k, k + 1) + half_inv);
}

Rational exp_K_mix1(const Rational& alpha, const Rational& beta) {
    return Rational(3, 4) * beta +
           max(Rational(7, 8) * alpha + Rational(1, 8), Rational(1, 2) * alpha + Rational(1, 4));
}

Rational exp_K_mix2(const Rational& alpha, const Rational& beta) {
    return max(alpha + beta / Rational(2) + Rational(1, 3), alpha / Rational(2) + beta);
}

Rational exp_K_pure(const Rational& alpha, const Rational& beta) {
    return max((Rational(1) + alpha) / Rational(2), beta);
}

Rational exp_K_zero(const Rational& alpha, const Rational& beta) { return max(alpha, beta); }

bool is_nontrivial(const Rational& exponent, const Rational& alpha, const Rational& beta) {
    return exponent < alpha + beta;
}

OptimalK optimal_k(const Rational& alpha, const Rational& beta, int k_max) {
    if (k_max < 1) throw Error(ErrorKind::BadK, "k_max must be >= 1");
    OptimalK best{{1}, exp_S_abd(1, alpha, beta)};
    for (int k = 2; k <= k_max; ++k) {
        const auto e = exp_S_abd(k, alpha, beta);
        if (e < best.exponent) {
            best = {{k}, e};
        } else if (e == best.exponent) {
            best.k_set.push_back(k);
        }
    }
    return best;
}

std::string_view to_string(BoundLabel label) {
    switch (label) {
        case BoundLabel::SPure: return "SPure";
        case BoundLabel::SPureSlice: return "SPureSlice";
        case BoundLabel::SAbd: return "SAbd";
        case BoundLabel::KMix1: return "KMix1";
        case BoundLabel::KMix2: return "KMix2";
        case BoundLabel::TrivialBilinear: return "TrivialBilinear";
        case BoundLabel::TrivialSingle: return "TrivialSingle";
        case BoundLabel::KPure: return "KPure";
        case BoundLabel::KZero: return "KZero";
    }
    return "?";
}

const BoundRow& ComparisonRow::at(BoundLabel label) const {
    for (const auto& b : bounds)
        if (b.label == label) return b;
    throw Error(ErrorKind::PreconditionFailed, "no bound " + std::string(to_string(label)) + " in row");
}

std::vector<ComparisonRow> compare_table(const std::vector<std::pair<Rational, Rational>>& points, int k_max) {
    std::vector<ComparisonRow> out;
    out.reserve(points.size());
    for (const auto& [alpha, beta] : points) {
        ComparisonRow row{alpha, beta, {}};
        auto push = [&](BoundLabel label, Rational e, std::vector<int> ks = {}) {
            row.bounds.push_back({label, e, is_nontrivial(e, alpha, beta), false, std::move(ks)});
        };
        const auto opt = optimal_k(alpha, beta, k_max);
        push(BoundLabel::SAbd, opt.exponent, opt.k_set);
        push(BoundLabel::KMix1, exp_K_mix1(alpha, beta));
        push(BoundLabel::KMix2, exp_K_mix2(alpha, beta));
        push(BoundLabel::TrivialBilinear, exp_trivial_bilinear(alpha, beta));
        push(BoundLabel::TrivialSingle, exp_trivial_single());
        push(BoundLabel::KPure, exp_K_pure(alpha, beta));
        push(BoundLabel::KZero, exp_K_zero(alpha, beta));
        push(BoundLabel::SPure, exp_S_pure(1, alpha, beta));
        push(BoundLabel::SPureSlice, exp_S_pure_slice(1, alpha, beta));

        // competitors are the first three rows
        BoundRow* best = nullptr;
        bool tie = false;
        for (int i = 0; i < 3; ++i) {
            auto& b = row.bounds[static_cast<std::size_t>(i)];
            if (!b.nontrivial) continue;
            if (!best || b.exponent < best->exponent) {
                best = &b;
                tie = false;
            } else if (b.exponent == best->exponent) {
                tie = true;
            }
        }
        if (best && !tie) best->winner = true;
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<std::pair<Rational, Rational>> reference_points() {
    return {{Rational(2, 5), Rational(3, 10)}, {Rational(2, 5), Rational(2, 5)}, {Rational(1, 5), Rational(4, 5)}};
}

std::vector<std::string> reference_table_mismatches(const std::vector<ComparisonRow>& rows) {
    struct Expected {
        Rational sabd;
        std::vector<int> k_set;
        bool sabd_nontrivial;
        Rational kmix1;
        bool kmix1_nontrivial;
        Rational kmix2;
        bool kmix2_nontrivial;
        BoundLabel winner;
    };
    // Only the displayed cells are pinned; "---" cells are pinned as trivial.
    const std::vector<Expected> expected = {
        {Rational(419, 600), {14, 15}, true, Rational(7, 10), false, Rational(0), false, BoundLabel::SAbd},
        {Rational(111, 140), {6, 7}, true, Rational(31, 40), true, Rational(0), false, BoundLabel::KMix1},
        {Rational(59, 60), {2, 3}, true, Rational(19, 20), true, Rational(14, 15), true, BoundLabel::KMix2},
    };
    std::vector<std::string> bad;
    const auto points = reference_points();
    if (rows.size() != expected.size()) {
        bad.push_back("expected 3 rows, got " + std::to_string(rows.size()));
        return bad;
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const auto& r = rows[i];
        const auto& e = expected[i];
        const auto tag = "row (" + r.alpha.str() + ", " + r.beta.str() + "): ";
        if (r.alpha != points[i].first || r.beta != points[i].second) bad.push_back(tag + "unexpected point");
        const auto& sabd = r.at(BoundLabel::SAbd);
        if (sabd.exponent != e.sabd) bad.push_back(tag + "SAbd exponent " + sabd.exponent.str());
        if (sabd.k_set != e.k_set) bad.push_back(tag + "SAbd optimal k set differs");
        if (sabd.nontrivial != e.sabd_nontrivial) bad.push_back(tag + "SAbd triviality differs");
        const auto& k1 = r.at(BoundLabel::KMix1);
        if (k1.nontrivial != e.kmix1_nontrivial) bad.push_back(tag + "KMix1 triviality differs");
        if (e.kmix1_nontrivial && k1.exponent != e.kmix1) bad.push_back(tag + "KMix1 exponent " + k1.exponent.str());
        const auto& k2 = r.at(BoundLabel::KMix2);
        if (k2.nontrivial != e.kmix2_nontrivial) bad.push_back(tag + "KMix2 triviality differs");
        if (e.kmix2_nontrivial && k2.exponent != e.kmix2) bad.push_back(tag + "KMix2 exponent " + k2.exponent.str());
        int winners = 0;
        for (const auto& b : r.bounds) {
            if (!b.winner) continue;
            ++winners;
            if (b.label != e.winner) bad.push_back(tag + "winner is " + std::string(to_string(b.label)));
        }
        if (winners != 1) bad.push_back(tag + std::to_string(winners) + " winners");
    }
    return bad;
}

bool T_pure_hypotheses(int d, const Rational& alpha, const Rational& beta, const Rational& eps,
                       const Rational& delta) {
    if (d < 3) throw Error(ErrorKind::BadDegree, "character-sum hypotheses need d >= 3");
    return alpha >= Rational(1, d) + eps && beta >= Rational(1, 4) - delta;
}

}  // namespace recip
