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

#include "oracles.hpp"
#include "recip/error.hpp"
#include "recip/sums.hpp"
#include "recip/verify.hpp"

using namespace recip;

namespace {

constexpr double kTol = 1e-9;

// Term-by-term evaluation over the polygon's lattice points, using only
// Fermat inverses and long-double phases.
oracle::C brute_S(const std::vector<std::int64_t>& f, const WeightSeq& A, const WeightSeq& B,
                  const ConvexRegion& reg, std::uint64_t p) {
    oracle::C s = 0;
    for (std::int64_t u = 1; u <= reg.U(); ++u) {
        const auto fu = oracle::poly(f, static_cast<std::uint64_t>(u), p);
        if (fu == 0) continue;
        const auto inv = oracle::inv(fu, p);
        for (std::int64_t v = 1; v <= reg.V(); ++v)
            if (reg.contains(u, v))
                s += A[u - 1] * B[v - 1] * oracle::ep(static_cast<std::int64_t>(oracle::mod(v, p) * inv % p), p);
    }
    return s;
}

oracle::C brute_T_quadratic(const std::vector<std::int64_t>& f, const WeightSeq& A, const WeightSeq& B,
                            const ConvexRegion& reg, std::uint64_t p) {
    oracle::C s = 0;
    for (std::int64_t u = 1; u <= reg.U(); ++u) {
        const auto fu = oracle::poly(f, static_cast<std::uint64_t>(u), p);
        for (std::int64_t v = 1; v <= reg.V(); ++v)
            if (reg.contains(u, v))
                s += A[u - 1] * B[v - 1] * static_cast<double>(oracle::legendre(v + static_cast<std::int64_t>(fu), p));
    }
    return s;
}

ConvexRegion empty_region() {
    return region_from_polygon(
        {{Rational(1, 2), Rational(1, 4)}, {Rational(5, 2), Rational(1, 4)}, {Rational(5, 2), Rational(1, 2)}}, 3, 3);
}

}  // namespace

TEST_CASE("bilinear reciprocal sums: anchors") {
    const FieldContext p11(11), p7(7);
    const auto X11 = PolySpec::monomial(1, p11);
    const auto r = eval_S(X11, weights_unit(10), weights_unit(10), region_rectangle(10, 10), p11);
    CHECK(std::abs(r.value - Complex(-10, 0)) < 1e-6);
    CHECK(r.terms == 100);
    CHECK(r.trivial_bound == 100);
    CHECK(r.benchmark == doctest::Approx(std::sqrt(1100.0)));

    const auto e = eval_S(PolySpec::monomial(1, p7), weights_unit(3), weights_unit(3), empty_region(), p7);
    CHECK(e.value == Complex(0, 0));
    CHECK(e.terms == 0);

    const auto one = eval_S(PolySpec::monomial(1, p7), weights_unit(1), weights_unit(1), region_rectangle(1, 1), p7);
    CHECK(std::abs(one.value - oracle::ep(1, 7)) < kTol);

    CHECK_THROWS_AS(eval_S(X11, weights_unit(9), weights_unit(10), region_rectangle(10, 10), p11), Error);
    CHECK_THROWS_AS(eval_S(X11, weights_unit(10), weights_unit(10), region_rectangle(10, 10), p7), Error);
}

TEST_CASE("character sums: anchors") {
    const FieldContext p7(7);
    const auto chi = MultChar::quadratic(p7);
    const auto X = PolySpec::monomial(1, p7);
    // u and v both run over a complete residue system
    const auto full = eval_T(chi, X, weights_unit(7), weights_unit(7), region_rectangle(7, 7), p7);
    CHECK(std::abs(full.value) < 1e-6);
    const auto one = eval_T(chi, X, weights_unit(1), weights_unit(1), region_rectangle(1, 1), p7);
    CHECK(std::abs(one.value - Complex(1, 0)) < kTol);
    CHECK(eval_T(chi, X, weights_unit(3), weights_unit(3), empty_region(), p7).value == Complex(0, 0));
    // constant f is allowed for character sums
    CHECK_NOTHROW(eval_T(chi, PolySpec({3}, p7), weights_unit(2), weights_unit(2), region_rectangle(2, 2), p7));
}

TEST_CASE("Kloosterman-type sums") {
    const FieldContext p11(11), p5(5);
    const auto r = eval_K(1, 0, weights_unit(10), weights_unit(10), region_rectangle(10, 10), p11);
    CHECK(std::abs(r.value - Complex(-10, 0)) < 1e-6);
    const auto one = eval_K(1, 0, weights_unit(1), weights_unit(1), region_rectangle(1, 1), p5);
    CHECK(std::abs(one.value - oracle::ep(1, 5)) < kTol);
    const auto ex = eval_K(3, -3, weights_unit(1), weights_unit(4), region_rectangle(1, 4), p5);
    CHECK(ex.value == Complex(0, 0));
    CHECK(ex.excluded == 1);
    CHECK_THROWS_AS(eval_K(0, 1, weights_unit(1), weights_unit(1), region_rectangle(1, 1), p5), Error);
    const auto single = eval_K_single(2, 1, weights_unit(4), region_rectangle(4, 4), p5);
    const auto both = eval_K(2, 1, weights_unit(4), weights_unit(4), region_rectangle(4, 4), p5);
    CHECK(single.value == both.value);
}

TEST_CASE("sums agree with term-by-term evaluation") {
    SplitMix64 rng(21);
    for (int it = 0; it < 60; ++it) {
        const std::uint64_t p = std::vector<std::uint64_t>{5, 7, 11, 13, 29, 53, 97}[rng.next_in(0, 6)];
        const FieldContext ctx(p);
        const auto U = static_cast<std::int64_t>(rng.next_in(1, 2 * p));
        const auto V = static_cast<std::int64_t>(rng.next_in(1, 2 * p));
        std::vector<std::int64_t> c(rng.next_in(2, 4));
        for (auto& x : c) x = static_cast<std::int64_t>(rng.next_in(0, p - 1));
        c.back() = static_cast<std::int64_t>(rng.next_in(1, p - 1));
        const PolySpec f(c, ctx);
        const auto A = weights_random(static_cast<std::size_t>(U), rng.next());
        const auto B = weights_random(static_cast<std::size_t>(V), rng.next());
        const auto reg = rng.next() & 1 ? region_rectangle(U, V)
                                        : region_from_polygon(random_convex_polygon(rng, U, V), U, V);
        const auto s = eval_S(f, A, B, reg, ctx);
        CHECK(std::abs(s.value - brute_S(c, A, B, reg, p)) < kTol * (1 + static_cast<double>(s.terms)));
        const auto t = eval_T(MultChar::quadratic(ctx), f, A, B, reg, ctx);
        CHECK(std::abs(t.value - brute_T_quadratic(c, A, B, reg, p)) < kTol * (1 + static_cast<double>(t.terms)));
        const auto s1 = eval_S_single(f, A, reg, ctx);
        CHECK(std::abs(s1.value - brute_S(c, A, weights_unit(static_cast<std::size_t>(V)), reg, p)) <
              kTol * (1 + static_cast<double>(s1.terms)));
    }
}

TEST_CASE("hard bounds on full rectangles") {
    SplitMix64 rng(5);
    for (int it = 0; it < 40; ++it) {
        const std::uint64_t p = std::vector<std::uint64_t>{101, 211, 307, 499}[rng.next_in(0, 3)];
        const FieldContext ctx(p);
        const int d = static_cast<int>(rng.next_in(1, 3));
        const auto U = static_cast<std::int64_t>(rng.next_in(1, p - 1));
        const auto V = static_cast<std::int64_t>(rng.next_in(1, p - 1));
        const auto f = PolySpec::monomial(d, ctx);
        const auto A = weights_random(static_cast<std::size_t>(U), rng.next());
        const auto B = weights_random(static_cast<std::size_t>(V), rng.next());
        const double uvp = static_cast<double>(U * V) * static_cast<double>(p);
        CHECK(std::abs(eval_S(f, A, B, region_rectangle(U, V), ctx).value) <= std::sqrt(d * uvp) + 1e-6);
        CHECK(std::abs(eval_T(MultChar::quadratic(ctx), f, A, B, region_rectangle(U, V), ctx).value) <=
              std::sqrt(2 * d * uvp) + 1e-6);
    }
}

TEST_CASE("incomplete linear sums") {
    const FieldContext p7(7), p13(13);
    CHECK(std::abs(incomplete_linear_sum(0, 1, 0, 5, p7) - Complex(5, 0)) < kTol);
    CHECK(std::abs(incomplete_linear_sum(14, 3, 0, 5, p7) - Complex(5, 0)) < kTol);
    for (std::int64_t a = 1; a < 13; ++a) CHECK(std::abs(incomplete_linear_sum(a, 1, 0, 13, p13)) < 1e-9 * 13);
    const auto want = oracle::ep(1, 7) + oracle::ep(2, 7) + oracle::ep(3, 7);
    CHECK(std::abs(incomplete_linear_sum(1, 1, 0, 3, p7) - want) < kTol);
    // alpha = 3/5 mod 13 = 3 * 8 = 24 = 11
    CHECK(std::abs(incomplete_linear_sum(3, 5, 2, 6, p13) - incomplete_linear_sum(11, 1, 2, 6, p13)) < kTol);
    CHECK_THROWS_AS(incomplete_linear_sum(1, 13, 0, 3, p13), Error);
    CHECK_THROWS_AS(incomplete_linear_sum(1, 1, 4, 3, p13), Error);
}

TEST_CASE("Weyl sums and the Weyl-sum bound") {
    const FieldContext p101(101), p11(11);
    const auto cube = weyl_sum(PolySpec::monomial(3, p101), 10, p101);
    oracle::C direct = 0;
    for (std::int64_t u = 1; u <= 10; ++u) direct += oracle::ep(u * u * u, 101);
    CHECK(std::abs(cube - direct) < kTol);
    CHECK(std::abs(weyl_sum(PolySpec({4}, p11), 6, p11) - 6.0 * oracle::ep(4, 11)) < kTol);
    CHECK(std::abs(weyl_sum(PolySpec::monomial(1, p11), 10, p11) - Complex(-1, 0)) < 1e-9 * 11);

    const double p = 101;
    CHECK(wooley_bound(3, p, p) == doctest::Approx(p * std::pow((p + 1) / (p * p), 0.25)));
    CHECK(wooley_bound(3, 50, p) == doctest::Approx(50 * std::pow(1.0 / 50 + p / 125000.0, 0.25)));
    CHECK(wooley_bound(3, 1, p) == doctest::Approx(std::pow(1 + p, 0.25)));
    CHECK(wooley_bound(4, 100, 1e4) == doctest::Approx(100 * std::pow(1e-2 + 1e-4, 1.0 / 12)));
    CHECK_THROWS_AS(wooley_bound(2, 10, p), Error);
}
