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

#include <cstdlib>
#include <map>

#include "oracles.hpp"
#include "recip/counting.hpp"
#include "recip/error.hpp"
#include "recip/rng.hpp"

using namespace recip;

TEST_CASE("J counts: anchors") {
    const FieldContext p11(11);
    CHECK(count_J_naive(1, 2, 1, 0, 3, p11).count == 15);
    CHECK(count_J_conv(1, 2, 1, 0, 3, p11).count == 15);
    // 1/t1^2 = 1/t2^2 iff t2 = t1 or t2 = p - t1, both in range: 2(p - 1) pairs
    CHECK(count_J_naive(2, 1, 1, 0, 10, p11).count == 20);
    CHECK(count_J_conv(2, 1, 1, 0, 10, p11).count == 20);
    CHECK(oracle::J(2, 1, 1, 0, 10, 11) == 20);
    for (int d = 1; d <= 3; ++d)
        for (int k = 1; k <= 3; ++k) CHECK(count_J_conv(d, k, 2, 5, 1, p11).count == 1);
    // x -> 1/(ax+b) is injective, so d = 1, k = 1 only has the diagonal
    for (std::int64_t T = 1; T <= 6; ++T) CHECK(count_J_conv(1, 1, 3, 1, T, p11).count == static_cast<std::uint64_t>(T));
    const auto r = count_J_conv(1, 2, 1, 0, 3, p11);
    CHECK(r.bound_rhs == doctest::Approx(J_bound_rhs(1, 2, 3, 11)));
    CHECK(J_bound_rhs(1, 2, 3, 11) == doctest::Approx(std::pow(3.0, 3.5) / std::sqrt(11.0) + 9));
    CHECK(J_bound_rhs(2, 2, 3, 11) == doctest::Approx(std::pow(3.0, 4) / 11 + std::pow(3.0, 8.0 / 3)));
}

TEST_CASE("J counts agree with tuple enumeration") {
    for (std::uint64_t p : {5, 7, 11, 13})
        for (int d = 1; d <= 3; ++d)
            for (int k = 1; k <= 2; ++k)
                for (auto [a, b] : {std::pair{1, 0}, {1, 1}, {2, 3}, {3, p - 3}})
                    for (std::int64_t T = 1; T <= 6 && T < static_cast<std::int64_t>(p); ++T) {
                        const FieldContext ctx(p);
                        const auto want = oracle::J(d, k, a, b, T, p);
                        CHECK(count_J_naive(d, k, a, b, T, ctx).count == want);
                        CHECK(count_J_conv(d, k, a, b, T, ctx).count == want);
                    }
    const FieldContext p31(31);
    CHECK(count_J_conv(2, 3, 1, 2, 7, p31).count == oracle::J(2, 3, 1, 2, 7, 31));
}

TEST_CASE("J work caps and arguments") {
    const FieldContext p11(11);
    WorkCaps tiny;
    tiny.max_states = 100;
    CHECK_THROWS_AS(count_J_naive(1, 2, 1, 0, 10, p11, tiny), Error);
    WorkCaps small_p;
    small_p.conv_max_p = 7;
    CHECK_THROWS_AS(count_J_conv(1, 2, 1, 0, 3, p11, small_p), Error);
    CHECK_THROWS_AS(count_J_conv(0, 2, 1, 0, 3, p11), Error);
    CHECK_THROWS_AS(count_J_conv(1, 0, 1, 0, 3, p11), Error);
    CHECK_THROWS_AS(count_J_conv(1, 2, 11, 0, 3, p11), Error);
    CHECK_THROWS_AS(count_J_conv(1, 2, 1, 0, 11, p11), Error);
}

TEST_CASE("work cap from the environment") {
    ::setenv("RECIP_SUMS_WORKCAP", "12345", 1);
    CHECK(WorkCaps::from_env().max_states == 12345);
    ::setenv("RECIP_SUMS_WORKCAP", "junk", 1);
    CHECK_THROWS_AS(WorkCaps::from_env(), Error);
    ::unsetenv("RECIP_SUMS_WORKCAP");
    CHECK(WorkCaps::from_env().max_states == WorkCaps{}.max_states);
}

TEST_CASE("histograms") {
    Histogram h{{1, 2, 0, 3}};
    CHECK(h.total() == 6);
    CHECK(h.energy() == 14);
    CHECK(primes_in(2, 4) == std::vector<std::uint64_t>{2, 3});
    CHECK(primes_in(3, 6) == std::vector<std::uint64_t>{3, 5});
    CHECK(primes_in(24, 28).empty());
}

TEST_CASE("N_f box counts") {
    const FieldContext p11(11);
    const auto X = PolySpec::monomial(1, p11);
    CHECK(count_N(X, 10, 10, p11).count == 10);
    CHECK(count_N(X, 3, 3, p11).count == 1);
    // f(u) = u - 2 vanishes at u = 2
    const std::vector<std::int64_t> c = {-2, 1};
    const PolySpec g(c, p11);
    for (std::int64_t U = 1; U <= 10; ++U)
        for (std::int64_t Z = 1; Z <= 10; ++Z) {
            std::uint64_t want = 0;
            for (std::int64_t u = 1; u <= U; ++u)
                for (std::int64_t z = 1; z <= Z; ++z)
                    want += oracle::poly(c, static_cast<std::uint64_t>(u), 11) * static_cast<std::uint64_t>(z) % 11 == 1;
            CHECK(count_N(g, U, Z, p11).count == want);
        }
    CHECK(count_N(X, 4, 4, p11).bound_rhs == doctest::Approx(std::sqrt(4.0) * 4 * std::pow(11.0, -0.5) + 1));
    CHECK_THROWS_AS(count_N(X, 11, 3, p11), Error);
}

TEST_CASE("I(lambda) and the 6-tuple count") {
    const FieldContext p11(11);
    const std::vector<Elem> r = {1, 2};
    const auto h = count_I_lambda(r, 2, 2, p11);
    CHECK(h.total() == 2 * 2 * 2);
    std::uint64_t direct = 0;
    for (std::uint64_t l1 : {2, 3})
        for (std::uint64_t l2 : {2, 3})
            for (int u1 = 0; u1 < 2; ++u1)
                for (int u2 = 0; u2 < 2; ++u2)
                    for (std::uint64_t v1 = 1; v1 <= 2; ++v1)
                        for (std::uint64_t v2 = 1; v2 <= 2; ++v2)
                            direct += (v1 + r[u1]) * l2 % 11 == (v2 + r[u2]) * l1 % 11;
    const auto n = count_N_tuples(r, 2, 2, p11);
    CHECK(n.count == direct);
    CHECK(n.count == h.energy());
    CHECK(n.count >= 2 * 2 * 2);
    CHECK(n.bound_rhs == doctest::Approx(2.0 * 4 * 2));

    // U = V = 1, r = (0): weight one at each inverse prime
    const std::vector<Elem> zero = {0};
    const auto h1 = count_I_lambda(zero, 2, 1, p11);
    CHECK(h1.counts[6] == 1);  // 1/2
    CHECK(h1.counts[4] == 1);  // 1/3
    CHECK(count_N_tuples(zero, 2, 1, p11).count == 2);

    // the prime 3 coincides with p
    CHECK_THROWS_AS(count_I_lambda(r, 2, 1, FieldContext(3)), Error);
}

TEST_CASE("character moments") {
    const FieldContext p5(5), p7(7);
    CHECK(char_moment(MultChar::quadratic(p5), 2, 1, p5) == doctest::Approx(6));
    CHECK(char_moment(MultChar::quadratic(p7), 6, 1, p7) == doctest::Approx(6));
    double brute = 0;
    for (std::int64_t l = 0; l < 7; ++l) {
        const double s = oracle::legendre(l + 1, 7) + oracle::legendre(l + 2, 7);
        brute += s * s * s * s;
    }
    CHECK(char_moment(MultChar::quadratic(p7), 2, 2, p7) == doctest::Approx(brute));
    const FieldContext p13(13);
    for (std::uint64_t j = 1; j < 12; ++j)
        for (std::int64_t K = 1; K < 13; ++K)
            CHECK(char_moment(MultChar(p13, 12, j), K, 1, p13) == doctest::Approx(static_cast<double>(K * (13 - K))));
    CHECK_THROWS_AS(char_moment(MultChar::quadratic(p7), 7, 1, p7), Error);
}

TEST_CASE("rho census") {
    const FieldContext p101(101);
    const auto X = PolySpec::monomial(1, p101);
    const auto all = rho_census(X, 100, 10, p101);
    CHECK(all.total() == 100);
    CHECK(all.I == static_cast<int>(std::floor(std::log(20.2))));
    CHECK(all.J == static_cast<int>(std::floor(std::log(202.0))));
    CHECK(all.Q.size() == static_cast<std::size_t>(all.J - all.I));

    const auto wide = rho_census(X, 100, 101, p101);
    CHECK(wide.I == 0);
    CHECK(wide.R == 0);

    // direct classification
    std::map<std::string, std::uint64_t> want;
    for (std::uint64_t u = 1; u <= 100; ++u) {
        const double r = static_cast<double>(oracle::rho(static_cast<std::int64_t>(oracle::inv(u, 101)), 101));
        const int j = static_cast<int>(std::floor(std::log(r)));
        if (j < all.I) ++want["R"];
        else if (j == all.I) ++want["band"];
        else ++want["Q" + std::to_string(j)];
    }
    CHECK(all.R == want["R"]);
    CHECK(all.band_I == want["band"]);
    for (std::size_t i = 0; i < all.Q.size(); ++i)
        CHECK(all.Q[i] == want["Q" + std::to_string(all.I + 1 + static_cast<int>(i))]);

    const std::vector<std::int64_t> c = {-3, 1};  // vanishes at u = 3
    const auto ex = rho_census(PolySpec(c, p101), 10, 10, p101);
    CHECK(ex.excluded == 1);
    CHECK(ex.total() == 10);
}

TEST_CASE("discrepancy") {
    const FieldContext p11(11);
    std::vector<Elem> perm;
    for (Elem x = 0; x < 11; ++x) perm.push_back(x);
    CHECK(discrepancy(perm, p11) == doctest::Approx(oracle::discrepancy(perm, 11)));
    CHECK(discrepancy(perm, p11) <= 1.0 / 11 + 1e-12);
    const std::vector<Elem> constant(40, 3);
    CHECK(discrepancy(constant, p11) == doctest::Approx(1 - 1.0 / 11));
    SplitMix64 rng(2);
    for (int it = 0; it < 30; ++it) {
        std::vector<Elem> r(rng.next_in(1, 25));
        for (auto& x : r) x = rng.next_in(0, 10);
        CHECK(discrepancy(r, p11) == doctest::Approx(oracle::discrepancy(r, 11)).epsilon(1e-12));
    }
    // cubes at a large prime stay below the constant-sequence value
    const FieldContext big(10007);
    std::vector<Elem> cubes;
    for (Elem u = 1; u <= 40; ++u) cubes.push_back(u * u * u % 10007);
    CHECK(discrepancy(cubes, big) < 1 - 1.0 / 10007);
    CHECK_THROWS_AS(discrepancy(std::vector<Elem>{}, p11), Error);
}
