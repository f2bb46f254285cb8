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

#include <doctest.h>

#include "recip/bounds.hpp"
#include "recip/error.hpp"

using namespace recip;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

std::vector<Rational> grid(std::int64_t steps) {
    std::vector<Rational> g;
    for (std::int64_t i = 0; i <= steps; ++i) g.push_back(q(i, steps));
    return g;
}

}  // namespace

TEST_CASE("trivial and pure exponents") {
    CHECK(exp_trivial_bilinear(q(1), q(1)) == q(3, 2));
    CHECK(exp_trivial_bilinear(q(2, 5), q(3, 10)) == q(17, 20));
    CHECK(exp_trivial_bilinear(q(0), q(0)) == q(1, 2));
    CHECK(exp_trivial_single() == q(1));
    CHECK(exp_S_pure(1, q(0), q(0)) == q(1, 2));
    CHECK(exp_S_pure(2, q(1, 5), q(4, 5)) == q(13, 15));
    CHECK_THROWS_AS(exp_S_pure(0, q(0), q(0)), Error);
    CHECK(exp_K_zero(q(1), q(1)) == q(1));
    CHECK(exp_K_pure(q(0), q(0)) == q(1, 2));
    CHECK(exp_K_pure(q(1, 2), q(3, 4)) == q(3, 4));
}

TEST_CASE("sliced exponent") {
    for (int d = 1; d <= 5; ++d)
        for (auto beta : grid(12)) {
            // both branches agree on the threshold
            const auto alpha = q(2, d) * beta - q(2, d + 1);
            const auto other = alpha + (q(1) - q(2, d)) * beta + q(2, d + 1);
            if (alpha >= q(0)) CHECK(exp_S_pure_slice(d, alpha, beta) == other);
        }
    CHECK(exp_S_pure_slice(3, q(1, 1000), q(3, 4) + q(1, 100)) == q(3, 4) + q(1, 100));
    CHECK_THROWS_AS(exp_S_pure_slice(0, q(0), q(0)), Error);
    // d = 1 above the threshold: alpha - beta + 1, which falls as beta grows
    CHECK(exp_S_pure_slice(1, q(1, 2), q(1, 2)) == q(1));
    CHECK(exp_S_pure_slice(1, q(1, 2), q(3, 5)) == q(9, 10));
}

TEST_CASE("exponents for powers of linear forms") {
    CHECK(exp_S_abd(14, q(2, 5), q(3, 10)) == q(419, 600));
    CHECK(exp_S_abd(15, q(2, 5), q(3, 10)) == q(419, 600));
    CHECK(exp_S_abd(6, q(2, 5), q(2, 5)) == q(111, 140));
    CHECK_THROWS_AS(exp_S_abd(0, q(1, 2), q(1, 2)), Error);
    // large k drifts to the trivial exponent
    const auto a = q(2, 5), b = q(2, 5);
    CHECK(exp_S_abd(1000, a, b) > exp_S_abd(64, a, b));
    CHECK(a + b - exp_S_abd(1000, a, b) < q(1, 1000));

    const auto o1 = optimal_k(q(2, 5), q(3, 10));
    CHECK(o1.k_set == std::vector<int>{14, 15});
    CHECK(o1.exponent == q(419, 600));
    const auto o2 = optimal_k(q(2, 5), q(2, 5));
    CHECK(o2.k_set == std::vector<int>{6, 7});
    CHECK(o2.exponent == q(111, 140));
    const auto o3 = optimal_k(q(1, 5), q(4, 5));
    CHECK(o3.k_set == std::vector<int>{2, 3});
    CHECK(o3.exponent == q(59, 60));
    CHECK(optimal_k(q(2, 5), q(3, 10), 1).k_set == std::vector<int>{1});
    CHECK_THROWS_AS(optimal_k(q(1), q(1), 0), Error);
}

TEST_CASE("Kloosterman exponents") {
    CHECK(exp_K_mix1(q(2, 5), q(2, 5)) == q(31, 40));
    CHECK(exp_K_mix1(q(1, 5), q(4, 5)) == q(19, 20));
    CHECK(exp_K_mix2(q(1, 5), q(4, 5)) == q(14, 15));
    CHECK(exp_K_mix2(q(2, 5), q(2, 5)) == q(14, 15));
    CHECK_FALSE(is_nontrivial(exp_K_mix2(q(2, 5), q(2, 5)), q(2, 5), q(2, 5)));
    CHECK(exp_K_mix2(q(0), q(1)) == q(1));
    CHECK_FALSE(is_nontrivial(exp_K_mix2(q(0), q(1)), q(0), q(1)));
}

TEST_CASE("nontriviality regions") {
    for (auto a : grid(30))
        for (auto b : grid(30)) {
            CHECK(is_nontrivial(exp_S_pure(1, a, b), a, b) == (a > q(0) && a + q(2) * b > q(1)));
            CHECK(is_nontrivial(exp_K_mix1(a, b), a, b) == (a + q(2) * b > q(1) && q(2) * a + b > q(1)));
            CHECK(is_nontrivial(exp_K_mix2(a, b), a, b) == (b > q(2, 3) && a > q(0)));
            if (b > q(1, 2) && a > q(0)) CHECK(is_nontrivial(exp_S_pure_slice(1, a, b), a, b));
            const auto opt = optimal_k(a, b, 64);
            if (is_nontrivial(opt.exponent, a, b)) CHECK((q(2) * a + b > q(1) && b > q(0)));
        }
}

TEST_CASE("comparison table") {
    const auto rows = compare_table(reference_points());
    CHECK(reference_table_mismatches(rows).empty());
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].at(BoundLabel::SAbd).winner);
    CHECK_FALSE(rows[0].at(BoundLabel::KMix1).nontrivial);
    CHECK_FALSE(rows[0].at(BoundLabel::KMix2).nontrivial);
    CHECK(rows[1].at(BoundLabel::KMix1).winner);
    CHECK(rows[1].at(BoundLabel::KMix1).exponent == q(31, 40));
    CHECK_FALSE(rows[1].at(BoundLabel::SAbd).winner);
    CHECK(rows[2].at(BoundLabel::KMix2).winner);
    CHECK(rows[2].at(BoundLabel::KMix1).exponent == q(19, 20));
    for (const auto& r : rows) {
        int stars = 0;
        for (const auto& b : r.bounds) stars += b.winner;
        CHECK(stars == 1);
    }
    // k_max = 1 changes the first column and the gate notices
    CHECK_FALSE(reference_table_mismatches(compare_table(reference_points(), 1)).empty());

    // order is preserved; a reference exponent flips once alpha + beta > 1
    const auto custom = compare_table({{q(1, 2), q(1, 2)}, {q(1, 10), q(1, 10)}, {q(3, 5), q(3, 5)}});
    CHECK(custom[0].alpha == q(1, 2));
    CHECK(custom[1].alpha == q(1, 10));
    CHECK_FALSE(custom[1].at(BoundLabel::TrivialSingle).nontrivial);
    CHECK(custom[2].at(BoundLabel::TrivialSingle).nontrivial);
    CHECK(to_string(BoundLabel::KMix2) == "KMix2");
}

TEST_CASE("hypotheses for the pure character-sum bound") {
    CHECK(T_pure_hypotheses(3, q(1, 2), q(1, 4), q(1, 10), q(0)));
    CHECK_FALSE(T_pure_hypotheses(3, q(1, 3), q(1, 4), q(1, 10), q(0)));
    CHECK_THROWS_AS(T_pure_hypotheses(2, q(1, 2), q(1, 2), q(1, 10), q(0)), Error);
}
