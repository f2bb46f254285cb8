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
#include "recip/field.hpp"
#include "recip/rng.hpp"

using namespace recip;

TEST_CASE("field construction rejects bad moduli") {
    for (std::uint64_t p : {0, 1, 2, 4, 9, 15, 1001}) {
        try {
            FieldContext ctx(p);
            FAIL("accepted " << p);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotPrime);
        }
    }
    CHECK_NOTHROW(FieldContext(3));
    CHECK_NOTHROW(FieldContext(2147483647ULL, 0));
}

TEST_CASE("modular inverse") {
    const FieldContext p11(11), p7(7);
    CHECK(mod_inv(2, p11) == 6);
    CHECK(mod_inv(1, p7) == 1);
    CHECK(mod_inv(3, p11) == 4);
    try {
        mod_inv(0, p11);
        FAIL("inverse of zero");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroInverse);
    }
    const FieldContext big(1000003);  // above the table cap
    CHECK_FALSE(big.has_tables());
    for (Elem x : std::vector<Elem>{1, 2, 12345, 999999}) CHECK(big.inv(x) == oracle::inv(x, 1000003));
}

TEST_CASE("rho") {
    const FieldContext p17(17), p7(7), p11(11);
    CHECK(rho_int(9, p17) == 8);
    CHECK(rho_int(0, p17) == 0);
    CHECK(rho_int(18, p17) == 1);
    CHECK(rho_int(-3, p17) == 3);
    CHECK(rho_frac(1, 1, p7) == 1);
    CHECK(rho_frac(1, 2, p11) == 5);
    CHECK(rho_frac(0, 5, p11) == 0);
    CHECK_THROWS_AS(rho_frac(1, 22, p11), Error);
    for (std::int64_t u = -30; u <= 30; ++u)
        for (std::int64_t v = 1; v < 11; ++v)
            CHECK(rho_frac(u, v, p11) == oracle::rho(static_cast<std::int64_t>(oracle::mod(u, 11) * oracle::inv(v, 11)), 11));
}

TEST_CASE("additive character") {
    const FieldContext p7(7);
    CHECK(std::abs(e_p(0, p7) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(e_p(7, p7) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(e_p(-1, p7) - oracle::ep(6, 7)) < 1e-14);
    for (std::uint64_t p : {3, 101, 1009, 100003, 1000003}) {
        const FieldContext ctx(p);
        Complex s = 0;
        for (std::uint64_t z = 0; z < p; ++z) s += e_p(static_cast<std::int64_t>(z), ctx);
        CHECK(std::abs(s) <= 1e-9 * static_cast<double>(p));
        for (std::int64_t z : {1LL, 2LL, static_cast<long long>(p / 3), static_cast<long long>(p - 1)})
            CHECK(std::abs(e_p(z, ctx) - oracle::ep(z, p)) < 1e-12);
    }
}

TEST_CASE("primitive roots and indices") {
    CHECK(primitive_root(7) == 3);
    CHECK(primitive_root(5) == 2);
    CHECK(primitive_root(3) == 2);
    for (std::uint64_t p : std::vector<std::uint64_t>{11, 101, 1000003}) {
        const auto g = primitive_root(p);
        for (std::uint64_t e = 1; e * e <= p - 1; ++e) {
            if ((p - 1) % e) continue;
            CHECK(oracle::powmod(g, e, p) != 1);
            if ((p - 1) / e < p - 1) CHECK(oracle::powmod(g, (p - 1) / e, p) != 1);
        }
        const FieldContext ctx(p);
        for (Elem x : std::vector<Elem>{1, 2, p - 1, p / 2})
            CHECK(oracle::powmod(ctx.generator(), ctx.index(x), p) == x);
    }
    const std::uint64_t p = 1000003;
    CHECK(oracle::powmod(5, discrete_log(5, 777, p), p) == 777);
}

TEST_CASE("multiplicative characters") {
    const FieldContext p7(7);
    const auto chi = MultChar::quadratic(p7);
    CHECK(std::abs(chi(2) - Complex(1, 0)) < 1e-12);
    for (Elem x = 0; x < 7; ++x) CHECK(std::abs(chi(x) - Complex(oracle::legendre(x, 7), 0)) < 1e-12);
    CHECK_THROWS_AS(MultChar(p7, 4, 1), Error);
    CHECK_THROWS_AS(MultChar(p7, 6, 0), Error);
    CHECK_THROWS_AS(MultChar(p7, 6, 6), Error);

    for (std::uint64_t p : std::vector<std::uint64_t>{13, 1000003}) {
        const FieldContext ctx(p);
        const MultChar q = MultChar::quadratic(ctx);
        for (Elem x : std::vector<Elem>{0, 1, 2, 3, 10, p - 1})
            CHECK(std::abs(q(x) - Complex(oracle::legendre(static_cast<std::int64_t>(x), p), 0)) < 1e-12);
        const MultChar c(ctx, p == 13 ? 12 : 6, 1);
        CHECK(std::abs(chi_eval(c, 0)) == 0.0);
        CHECK(std::abs(chi_eval(c, 1) - Complex(1, 0)) < 1e-12);
    }
}

TEST_CASE("polynomials") {
    const FieldContext p11(11), p7(7);
    CHECK(poly_eval(PolySpec::monomial(1, p11), 5, p11) == 5);
    CHECK(poly_eval(PolySpec({1, 0, 1}, p7), 3, p7) == 3);
    CHECK(poly_eval(PolySpec::linear(2, 3, p11), 4, p11) == 0);
    CHECK(PolySpec({-1, 13}, p11).coeff(0) == 10);
    CHECK_THROWS_AS(PolySpec({1, 11}, p11), Error);
    CHECK_THROWS_AS(poly_eval(PolySpec::monomial(2, p7), 1, p11), Error);
    const std::vector<std::int64_t> c = {3, -4, 0, 7};
    const PolySpec f(c, p11);
    CHECK(f.degree() == 3);
    for (Elem x = 0; x < 11; ++x) CHECK(poly_eval(f, x, p11) == oracle::poly(c, x, 11));
}

TEST_CASE("pairwise summation") {
    SplitMix64 rng(3);
    for (std::size_t n : {0, 1, 15, 16, 17, 1000, 4099}) {
        std::vector<Complex> xs(n);
        for (auto& x : xs) x = {rng.next_double() - 0.5, rng.next_double() - 0.5};
        Complex naive = 0;
        for (auto x : xs) naive += x;
        PairwiseSum acc;
        for (auto x : xs) acc.add(x);
        CHECK(acc.count() == n);
        CHECK(std::abs(acc.result() - naive) < 1e-10);
        CHECK(acc.result() == pairwise_sum(xs));
    }
}

TEST_CASE("rng stream") {
    SplitMix64 r(0);
    CHECK(r.next() == 0xe220a8397b1dcdafULL);
    CHECK(r.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(r.next() == 0x06c45d188009454fULL);
    CHECK(r.next() == 0xf88bb8a8724c81ecULL);
    SplitMix64 a(1), b(2);
    CHECK(a.next() != b.next());
    SplitMix64 c(5);
    for (int i = 0; i < 1000; ++i) {
        const double x = c.next_double();
        CHECK((x >= 0 && x < 1));
        const auto k = c.next_in(3, 9);
        CHECK((k >= 3 && k <= 9));
    }
}
