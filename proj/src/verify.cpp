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

#include "recip/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "recip/bounds.hpp"
#include "recip/config.hpp"
#include "recip/counting.hpp"
#include "recip/error.hpp"
#include "recip/harness.hpp"
#include "recip/pigeonhole.hpp"
#include "recip/sums.hpp"

namespace recip {

namespace {

class Suite {
  public:
    explicit Suite(std::string name) { r_.name = std::move(name); }

    void check(bool ok, const std::string& what) {
        ++r_.checks;
        if (!ok) {
            if (r_.failures == 0) r_.first_failure = what;
            ++r_.failures;
        }
    }
    template <class F>
    void check_lazy(bool ok, F describe) {
        if (ok) {
            ++r_.checks;
        } else {
            check(false, describe());
        }
    }
    void note(std::string s) { r_.note = std::move(s); }
    SuiteResult& result() { return r_; }

  private:
    SuiteResult r_;
};

std::vector<std::uint64_t> primes_upto(std::uint64_t hi, std::uint64_t lo = 3) { return primes_in(lo, hi); }

std::string at_p(std::uint64_t p) { return " at p=" + std::to_string(p); }

Rational cross(const Vertex& o, const Vertex& a, const Vertex& b) {
    return (a.u - o.u) * (b.v - o.v) - (a.v - o.v) * (b.u - o.u);
}

// Closed-polygon membership straight from the vertex list.
bool inside_polygon(const std::vector<Vertex>& poly, std::int64_t u, std::int64_t v) {
    const Vertex q{Rational(u), Rational(v)};
    for (std::size_t i = 0; i < poly.size(); ++i)
        if (cross(poly[i], poly[(i + 1) % poly.size()], q) < Rational(0)) return false;
    return true;
}

PolySpec random_poly(SplitMix64& rng, int d, const FieldContext& ctx) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = static_cast<std::int64_t>(rng.next_in(0, ctx.p() - 1));
    c.back() = static_cast<std::int64_t>(rng.next_in(1, ctx.p() - 1));
    return PolySpec(c, ctx);
}

void field_orthogonality(Suite& s, VerifyLevel level, const VerifyHooks& hooks) {
    const auto limit = level == VerifyLevel::Full ? 1009u : 101u;
    for (auto p : primes_upto(limit)) {
        const FieldContext ctx(p);
        const double tol = 1e-9 * static_cast<double>(p);
        for (std::uint64_t c = 1; c < p; ++c) {
            PairwiseSum acc;
            for (std::uint64_t v = 0; v < p; ++v)
                acc.add(hooks.additive(static_cast<std::int64_t>(c * v), ctx));
            s.check_lazy(std::abs(acc.result()) <= tol, [&] {
                return "additive sum for c=" + std::to_string(c) + at_p(p) + " is " +
                       std::to_string(std::abs(acc.result()));
            });
        }
        if (p > 211) continue;
        for (std::uint64_t j = 1; j + 1 < p; ++j) {
            const MultChar chi(ctx, p - 1, j);
            PairwiseSum acc;
            for (std::uint64_t x = 0; x < p; ++x) acc.add(chi(x));
            s.check_lazy(std::abs(acc.result()) <= tol,
                         [&] { return "character sum for j=" + std::to_string(j) + at_p(p); });
        }
    }
}

void field_arithmetic(Suite& s, VerifyLevel level) {
    const auto limit = level == VerifyLevel::Full ? 101u : 31u;
    for (auto p : primes_upto(limit)) {
        const FieldContext ctx(p);
        const FieldContext bare(p, 0);  // no tables: exercises the slow paths
        const auto pi = static_cast<std::int64_t>(p);
        for (std::uint64_t x = 1; x < p; ++x) {
            s.check(mod_inv(mod_inv(x, ctx), ctx) == x, "inverse involution" + at_p(p));
            s.check(ctx.mul(x, ctx.inv(x)) == 1 && bare.inv(x) == ctx.inv(x), "inverse" + at_p(p));
            s.check(std::abs(ctx.unit_root(x) - bare.unit_root(x)) < 1e-12, "root table" + at_p(p));
        }
        for (std::int64_t a = -2 * pi; a <= 2 * pi; ++a) {
            const auto r = rho_int(a, ctx);
            s.check(r == rho_int(-a, ctx) && r == rho_int(a + pi, ctx) && 2 * r <= p, "rho symmetry" + at_p(p));
        }
        for (std::uint64_t m = 2; m < p; ++m) {
            if ((p - 1) % m) continue;
            for (std::uint64_t j = 1; j < m; ++j) {
                const MultChar chi(ctx, m, j);
                const MultChar slow(bare, m, j);
                for (std::uint64_t x = 0; x < p; ++x) {
                    s.check(std::abs(chi(x) - slow(x)) < 1e-12, "table vs discrete log" + at_p(p));
                    for (std::uint64_t y = x; y < p; ++y)
                        s.check_lazy(std::abs(chi(ctx.mul(x, y)) - chi(x) * chi(y)) < 1e-9, [&] {
                            return "multiplicativity m=" + std::to_string(m) + " j=" + std::to_string(j) + at_p(p);
                        });
                }
            }
        }
    }
}

void regions_views(Suite& s, VerifyLevel level) {
    SplitMix64 rng(0x7265676eULL);
    const int instances = level == VerifyLevel::Full ? 400 : 60;
    const auto max_side = level == VerifyLevel::Full ? 64u : 24u;
    for (int it = 0; it < instances; ++it) {
        const auto U = static_cast<std::int64_t>(rng.next_in(1, max_side));
        const auto V = static_cast<std::int64_t>(rng.next_in(1, max_side));
        const auto poly = random_convex_polygon(rng, U, V);
        const auto region = ConvexRegion::from_polygon(poly, U, V);
        const auto& ccw = region.vertices();
        std::uint64_t count = 0;
        for (std::int64_t u = 1; u <= U; ++u)
            for (std::int64_t v = 1; v <= V; ++v) {
                const bool by_col = region.column(u).contains(v);
                const bool by_row = region.row(v).contains(u);
                const bool truth = inside_polygon(ccw, u, v);
                count += truth;
                s.check_lazy(by_col == by_row && by_col == truth, [&] {
                    return "membership mismatch at (" + std::to_string(u) + "," + std::to_string(v) + ") U=" +
                           std::to_string(U) + " V=" + std::to_string(V);
                });
            }
        s.check(region.lattice_count() == count, "lattice_count");
        // no contiguity check on the lattice supports: thin polygons such as
        // (0,0),(5,2),(5,3) leave empty columns between occupied ones

        const auto rect = ConvexRegion::rectangle(U, V);
        const auto as_poly = ConvexRegion::from_polygon(
            {{Rational(0), Rational(0)}, {Rational(U), Rational(0)}, {Rational(U), Rational(V)},
             {Rational(0), Rational(V)}},
            U, V);
        bool same = rect.lattice_count() == as_poly.lattice_count();
        for (std::int64_t u = 1; u <= U; ++u) same = same && rect.column(u) == as_poly.column(u);
        for (std::int64_t v = 1; v <= V; ++v) same = same && rect.row(v) == as_poly.row(v);
        s.check(same, "rectangle marker vs polygon");
    }
}

void sums_hard_bounds(Suite& s, VerifyLevel level) {
    SplitMix64 rng(0x68617264ULL);
    const auto primes = primes_upto(499, 5);
    const int instances = level == VerifyLevel::Full ? 200 : 40;
    double worst_S = 0, worst_T = 0;
    for (int it = 0; it < instances; ++it) {
        const auto p = primes[rng.next_in(0, primes.size() - 1)];
        const FieldContext ctx(p);
        const int d = static_cast<int>(rng.next_in(1, 3));
        const auto f = random_poly(rng, d, ctx);
        const auto U = static_cast<std::int64_t>(rng.next_in(1, p - 1));
        const auto V = static_cast<std::int64_t>(rng.next_in(1, p - 1));
        const auto seed = rng.next();
        const auto A = rng.next() & 1 ? weights_random(U, seed) : weights_unit(U);
        const auto B = weights_random(V, seed + 1);
        const auto region = ConvexRegion::rectangle(U, V);
        const double uvp = static_cast<double>(U) * static_cast<double>(V) * static_cast<double>(p);

        const double s_abs = std::abs(eval_S(f, A, B, region, ctx).value);
        const double s_bound = std::sqrt(d * uvp);
        worst_S = std::max(worst_S, s_abs / s_bound);
        s.check_lazy(s_abs <= s_bound + 1e-6, [&] { return "|S| above sqrt(dUVp)" + at_p(p); });

        std::uint64_t m = 0;
        do m = rng.next_in(2, p - 1);
        while ((p - 1) % m);
        const MultChar chi(ctx, m, rng.next_in(1, m - 1));
        const double t_abs = std::abs(eval_T(chi, f, A, B, region, ctx).value);
        const double t_bound = std::sqrt(2.0 * d * uvp);
        worst_T = std::max(worst_T, t_abs / t_bound);
        s.check_lazy(t_abs <= t_bound + 1e-6, [&] { return "|T| above sqrt(2dUVp)" + at_p(p); });
    }
    std::ostringstream note;
    note << "max |S|/sqrt(dUVp) = " << std::setprecision(4) << worst_S << ", max |T|/sqrt(2dUVp) = " << worst_T;
    s.note(note.str());
}

void sums_incomplete(Suite& s, VerifyLevel level) {
    const auto limit = level == VerifyLevel::Full ? 101u : 23u;
    for (auto p : primes_upto(limit)) {
        const FieldContext ctx(p);
        const auto pi = static_cast<std::int64_t>(p);
        for (std::int64_t num = 1; num < pi; ++num) {
            const double cap = static_cast<double>(p) / (2.0 * static_cast<double>(rho_frac(num, 1, ctx)));
            for (std::int64_t X = 0; X <= pi; ++X)
                for (std::int64_t Y = X; Y <= pi; ++Y) {
                    const double v = std::abs(incomplete_linear_sum(num, 1, X, Y, ctx));
                    s.check_lazy(v <= std::min(static_cast<double>(Y - X), cap) + 1e-9, [&] {
                        return "incomplete sum alpha=" + std::to_string(num) + " (" + std::to_string(X) + "," +
                               std::to_string(Y) + "]" + at_p(p);
                    });
                }
        }
    }
    if (level != VerifyLevel::Full) return;
    SplitMix64 rng(0x696e63ULL);
    for (auto p : primes_in(103, 2003)) {
        const FieldContext ctx(p);
        for (int it = 0; it < 20; ++it) {
            const auto num = static_cast<std::int64_t>(rng.next_in(1, p - 1));
            const auto den = static_cast<std::int64_t>(rng.next_in(1, p - 1));
            auto X = static_cast<std::int64_t>(rng.next_in(0, p));
            auto Y = static_cast<std::int64_t>(rng.next_in(0, p));
            if (X > Y) std::swap(X, Y);
            const double cap = static_cast<double>(p) / (2.0 * static_cast<double>(rho_frac(num, den, ctx)));
            const double v = std::abs(incomplete_linear_sum(num, den, X, Y, ctx));
            s.check(v <= std::min(static_cast<double>(Y - X), cap) + 1e-9, "random incomplete sum" + at_p(p));
        }
    }
}

void sums_structure(Suite& s, VerifyLevel level) {
    SplitMix64 rng(0x737472ULL);
    const int instances = level == VerifyLevel::Full ? 150 : 30;
    const auto primes = primes_upto(211, 5);
    for (int it = 0; it < instances; ++it) {
        const auto p = primes[rng.next_in(0, primes.size() - 1)];
        const FieldContext ctx(p);
        const auto U = static_cast<std::int64_t>(rng.next_in(2, std::min<std::uint64_t>(p - 1, 60)));
        const auto V = static_cast<std::int64_t>(rng.next_in(1, std::min<std::uint64_t>(p - 1, 60)));
        const auto region = ConvexRegion::from_polygon(random_convex_polygon(rng, U, V), U, V);
        const auto A = weights_random(U, rng.next());
        const auto B = weights_random(V, rng.next());
        const auto f = random_poly(rng, static_cast<int>(rng.next_in(1, 3)), ctx);

        const auto whole = eval_S(f, A, B, region, ctx);
        const auto cut = static_cast<std::int64_t>(rng.next_in(1, U - 1));
        const auto left = eval_S(f, A, B, region.column_slice(1, cut), ctx);
        const auto right = eval_S(f, A, B, region.column_slice(cut + 1, U), ctx);
        const double tol = 1e-9 * static_cast<double>(std::max<std::uint64_t>(whole.terms, 1));
        s.check(std::abs(whole.value - left.value - right.value) <= tol && whole.terms == left.terms + right.terms,
                "slicing additivity" + at_p(p));

        const auto a = static_cast<std::int64_t>(rng.next_in(1, p - 1));
        const auto b = static_cast<std::int64_t>(rng.next_in(0, p - 1));
        const auto k = eval_K(a, b, A, B, region, ctx);
        const auto viaS = eval_S(PolySpec::linear(a, b, ctx), A, B, region, ctx);
        s.check(k.value == viaS.value && k.terms == viaS.terms, "Kloosterman form vs linear S" + at_p(p));
    }
}

void counting_J(Suite& s, VerifyLevel level) {
    const std::vector<std::uint64_t> primes = level == VerifyLevel::Full ? std::vector<std::uint64_t>{7, 11, 13}
                                                                         : std::vector<std::uint64_t>{7, 11};
    const std::int64_t Tmax = level == VerifyLevel::Full ? 6 : 4;
    const std::pair<std::int64_t, std::int64_t> ab[] = {{1, 0}, {1, 1}, {2, 3}};
    for (auto p : primes) {
        const FieldContext ctx(p);
        for (int d = 1; d <= 3; ++d)
            for (int k = 1; k <= 2; ++k)
                for (auto [a, b] : ab)
                    for (std::int64_t T = 1; T <= Tmax; ++T) {
                        const auto naive = count_J_naive(d, k, a, b, T, ctx).count;
                        const auto conv = count_J_conv(d, k, a, b, T, ctx).count;
                        s.check_lazy(naive == conv, [&] {
                            return "J naive " + std::to_string(naive) + " vs conv " + std::to_string(conv) +
                                   at_p(p);
                        });
                        double live = 0;
                        for (std::int64_t t = 1; t <= T; ++t) live += ctx.reduce(a * t + b) != 0;
                        const double diag = std::pow(live, k), all = std::pow(live, 2 * k);
                        const auto J = static_cast<double>(conv);
                        s.check(J >= diag && J <= all && J >= all / static_cast<double>(p) - 1e-9,
                                "J outside [T^k, T^2k] or below T^2k/p" + at_p(p));
                    }
    }
    const FieldContext ctx(11);
    s.check(count_J_conv(1, 2, 1, 0, 3, ctx).count == 15, "J_{1,2}(1,0;3) at p=11");
}

void counting_boxes(Suite& s, VerifyLevel level) {
    SplitMix64 rng(0x626f78ULL);
    const auto limit = level == VerifyLevel::Full ? 101u : 31u;
    for (auto p : primes_upto(limit)) {
        const FieldContext ctx(p);
        const auto f = random_poly(rng, static_cast<int>(rng.next_in(1, 3)), ctx);
        std::vector<std::vector<std::uint64_t>> hits(p, std::vector<std::uint64_t>(p, 0));
        for (std::uint64_t u = 1; u < p; ++u)
            for (std::uint64_t z = 1; z < p; ++z)
                hits[u][z] = hits[u - 1][z] + hits[u][z - 1] - hits[u - 1][z - 1] +
                             (ctx.mul(poly_eval(f, u, ctx), z) == 1);
        for (int it = 0; it < 40; ++it) {
            const auto U = static_cast<std::int64_t>(rng.next_in(1, p - 1));
            const auto Z = static_cast<std::int64_t>(rng.next_in(1, p - 1));
            const auto n = count_N(f, U, Z, ctx).count;
            s.check(n == hits[U][Z], "N_f vs box enumeration" + at_p(p));
            if (U + 1 < static_cast<std::int64_t>(p)) s.check(count_N(f, U + 1, Z, ctx).count >= n, "N_f monotone in U");
            if (Z + 1 < static_cast<std::int64_t>(p)) s.check(count_N(f, U, Z + 1, ctx).count >= n, "N_f monotone in Z");
        }
        const auto U = static_cast<std::int64_t>(rng.next_in(2, p - 1));
        const auto V = static_cast<std::int64_t>(rng.next_in(1, p - 1));
        const auto c = rho_census(f, U, V, ctx);
        s.check(c.total() == static_cast<std::uint64_t>(U), "census partition" + at_p(p));
    }
}

void counting_tuples(Suite& s, VerifyLevel level) {
    SplitMix64 rng(0x74757073ULL);
    const auto limit = level == VerifyLevel::Full ? 31u : 13u;
    for (auto p : primes_upto(limit)) {
        const FieldContext ctx(p);
        for (std::int64_t L : {2, 3}) {
            const auto primes = primes_in(static_cast<std::uint64_t>(L), static_cast<std::uint64_t>(2 * L));
            if (std::find(primes.begin(), primes.end(), p) != primes.end()) continue;
            for (std::int64_t U = 1; U <= 4; ++U)
                for (std::int64_t V = 1; V <= 4; ++V) {
                    std::vector<Elem> r(static_cast<std::size_t>(U));
                    for (auto& x : r) x = rng.next_in(0, p - 1);
                    const auto hist = count_I_lambda(r, L, V, ctx);
                    s.check(hist.total() == primes.size() * U * V, "I(lambda) mass" + at_p(p));
                    std::uint64_t direct = 0;
                    for (auto l1 : primes)
                        for (auto l2 : primes)
                            for (std::int64_t u1 = 1; u1 <= U; ++u1)
                                for (std::int64_t u2 = 1; u2 <= U; ++u2)
                                    for (std::int64_t v1 = 1; v1 <= V; ++v1)
                                        for (std::int64_t v2 = 1; v2 <= V; ++v2) {
                                            const auto lhs = ctx.mul(ctx.add(v1 % p, r[u1 - 1]), l2 % p);
                                            const auto rhs = ctx.mul(ctx.add(v2 % p, r[u2 - 1]), l1 % p);
                                            direct += lhs == rhs;
                                        }
                    const auto n = count_N_tuples(r, L, V, ctx).count;
                    s.check_lazy(n == direct, [&] {
                        return "tuples " + std::to_string(n) + " vs direct " + std::to_string(direct) + at_p(p);
                    });
                }
        }
    }
}

void counting_moments(Suite& s, VerifyLevel level) {
    std::vector<std::uint64_t> primes = {5, 7, 11, 13};
    if (level == VerifyLevel::Full) primes = primes_upto(101, 5);
    for (auto p : primes) {
        const FieldContext ctx(p);
        for (std::uint64_t j = 1; j + 1 < p; ++j) {
            const MultChar chi(ctx, p - 1, j);
            for (std::uint64_t K = 1; K < p; ++K) {
                const double want = static_cast<double>(K * (p - K));
                const double got = char_moment(chi, static_cast<std::int64_t>(K), 1, ctx);
                s.check_lazy(std::abs(got - want) <= 1e-6 * want, [&] {
                    return "moment K=" + std::to_string(K) + " j=" + std::to_string(j) + at_p(p);
                });
            }
        }
    }
}

void pigeonhole_suite(Suite& s, VerifyLevel level) {
    SplitMix64 rng(0x70696765ULL);
    const int tuples = level == VerifyLevel::Full ? 50 : 8;
    double worst = 0;
    for (auto p : primes_in(11, 97)) {
        const FieldContext ctx(p);
        const double pd = static_cast<double>(p);
        for (int d = 1; d <= 3; ++d) {
            const auto n = static_cast<std::size_t>(d) + 1;
            for (int it = 0; it < tuples; ++it) {
                std::vector<std::int64_t> a(n);
                for (auto& x : a) x = static_cast<std::int64_t>(rng.next_in(0, p - 1));
                // random split of the exponent d over the n targets, each below 1
                std::vector<double> e(n);
                do {
                    double sum = 0;
                    for (auto& x : e) sum += (x = rng.next_double() + 1e-3);
                    for (auto& x : e) x *= d / sum;
                } while (*std::max_element(e.begin(), e.end()) >= 0.999);
                std::vector<double> T(n);
                double log_ceil = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    T[i] = std::max(1.0, std::pow(pd, e[i]) * (1 + 1e-12));
                    log_ceil += std::log(std::ceil(T[i]));
                }
                if (log_ceil < d * std::log(pd) - 1e-12) continue;
                const auto red = find_t(a, T, ctx);
                worst = std::max(worst, red.c);
                s.check_lazy(red.c <= 2.0, [&] { return "pigeonhole quality " + std::to_string(red.c) + at_p(p); });
                bool consistent = red.t >= 1 && red.t < p && red.per_i.size() == n;
                for (std::size_t i = 0; consistent && i < n; ++i)
                    consistent = red.per_i[i] == rho_int(a[i] * static_cast<std::int64_t>(red.t), ctx);
                s.check(consistent, "find_t residues disagree with rho_int" + at_p(p));
            }
            for (std::int64_t U = 1; std::pow(U, d / 2.0) < std::pow(pd, 1.0 / (d + 1)); ++U) {
                const auto tg = canonical_targets(d, U, ctx);
                double prod = 1;
                for (auto t : tg.T) prod *= t;
                s.check(std::abs(prod / std::pow(pd, d) - 1) <= 1e-9, "canonical target product" + at_p(p));
                const auto f = random_poly(rng, d, ctx);
                const auto g = shrink_poly(f, U, ctx);
                bool congruent = g.b.size() == n;
                for (std::size_t i = 0; congruent && i < n; ++i)
                    congruent = ctx.reduce(g.b[i]) == ctx.mul(g.t, f.coeff(static_cast<int>(i)));
                s.check(congruent, "shrunken coefficients not t*f" + at_p(p));
            }
        }
    }
    std::ostringstream note;
    note << "max quality c = " << std::setprecision(4) << worst;
    s.note(note.str());
}

void bounds_suite(Suite& s, VerifyLevel level) {
    s.check(reference_table_mismatches(compare_table(reference_points())).empty(), "published table rows");
    for (const auto& row : compare_table(reference_points())) {
        int stars = 0;
        for (const auto& b : row.bounds) stars += b.winner;
        s.check(stars == 1, "exactly one winner per published row");
        const auto opt64 = optimal_k(row.alpha, row.beta, 64);
        const auto opt256 = optimal_k(row.alpha, row.beta, 256);
        s.check(opt64.exponent == opt256.exponent && opt64.k_set == opt256.k_set, "optimal k stable to 256");
        for (int k = 1; k <= 256; ++k)
            s.check(exp_S_abd(k, row.alpha, row.beta) >= opt64.exponent, "optimum is a minimum");
    }

    using Fn = std::function<Rational(const Rational&, const Rational&)>;
    std::vector<std::pair<std::string, Fn>> fns = {
        {"trivial_bilinear", exp_trivial_bilinear},
        {"K_mix1", exp_K_mix1},
        {"K_mix2", exp_K_mix2},
        {"K_pure", exp_K_pure},
        {"K_zero", exp_K_zero},
    };
    for (int d = 1; d <= 4; ++d) {
        fns.push_back({"S_pure d=" + std::to_string(d),
                       [d](const Rational& a, const Rational& b) { return exp_S_pure(d, a, b); }});
        // for d = 1 the sliced bound decreases in beta above its threshold
        if (d >= 2)
            fns.push_back({"S_pure_slice d=" + std::to_string(d),
                           [d](const Rational& a, const Rational& b) { return exp_S_pure_slice(d, a, b); }});
    }
    for (int k : {1, 2, 3, 6, 14, 64})
        fns.push_back({"S_abd k=" + std::to_string(k),
                       [k](const Rational& a, const Rational& b) { return exp_S_abd(k, a, b); }});
    const std::int64_t steps = level == VerifyLevel::Full ? 40 : 10;
    for (const auto& [name, fn] : fns)
        for (std::int64_t i = 0; i <= steps; ++i)
            for (std::int64_t j = 0; j <= steps; ++j) {
                const Rational a(i, steps), b(j, steps);
                const auto here = fn(a, b);
                if (i < steps) s.check(fn(Rational(i + 1, steps), b) >= here, name + " decreasing in alpha");
                if (j < steps) s.check(fn(a, Rational(j + 1, steps)) >= here, name + " decreasing in beta");
            }
}

void harness_suite(Suite& s, VerifyLevel) {
    const auto cfg = parse_config_text(
        "p = 101, 211\nd = 2\nalpha = 7/10\nbeta = 7/10\nsums = S1, S, K\nweights = random\nseed = 7\n");
    s.check(parse_config_text(emit_config(cfg)) == cfg, "config round trip");
    RunOptions one, many;
    one.parallel = 1;
    many.parallel = 4;
    s.check(cmd_sweep(cfg, one) == cmd_sweep(cfg, many), "sweep bytes depend on worker count");
    s.check(cmd_sweep(cfg, one) == cmd_sweep(cfg, one), "sweep not reproducible");
    s.check(cmd_table_compare(reference_points(), 64).exit_code == 0, "table-compare gate");
    s.check(cmd_table_compare(reference_points(), 1).exit_code != 0, "table-compare gate accepts k_max=1");
}

}  // namespace

VerifyLevel parse_level(const std::string& s) {
    if (s == "quick") return VerifyLevel::Quick;
    if (s == "full") return VerifyLevel::Full;
    throw Error(ErrorKind::ConfigError, "level must be quick or full, got '" + s + "'");
}

bool VerifyReport::ok() const noexcept {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& r) { return r.failures == 0; });
}

std::string VerifyReport::render(bool with_counts) const {
    std::ostringstream out;
    for (const auto& r : suites) {
        out << (r.failures ? "FAIL " : "pass ") << std::left << std::setw(22) << r.name;
        if (with_counts) out << " checks=" << r.checks << " failures=" << r.failures;
        out << " (" << std::fixed << std::setprecision(2) << r.seconds << " s)";
        if (!r.note.empty()) out << "  " << r.note;
        out << "\n";
        if (r.failures) out << "     first failure: " << r.first_failure << "\n";
    }
    out << (ok() ? "all suites passed" : "verification FAILED") << "\n";
    return out.str();
}

std::vector<Vertex> random_convex_polygon(SplitMix64& rng, std::int64_t U, std::int64_t V) {
    const auto n = 3 + rng.next_in(0, 6);
    std::vector<Vertex> pts;
    for (std::uint64_t i = 0; i < n; ++i)
        pts.push_back({Rational(static_cast<std::int64_t>(rng.next_in(0, 2 * static_cast<std::uint64_t>(U))), 2),
                       Rational(static_cast<std::int64_t>(rng.next_in(0, 2 * static_cast<std::uint64_t>(V))), 2)});
    std::sort(pts.begin(), pts.end(), [](const Vertex& a, const Vertex& b) {
        return a.u < b.u || (a.u == b.u && a.v < b.v);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    // Andrew's monotone chain, counter-clockwise, collinear points dropped
    std::vector<Vertex> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= Rational(0)) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= Rational(0)) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k > 0 ? k - 1 : 0);
    if (hull.size() < 3)
        return {{Rational(0), Rational(0)}, {Rational(U), Rational(0)}, {Rational(0), Rational(V)}};
    return hull;
}

VerifyReport run_verify(VerifyLevel level, const VerifyHooks& hooks) {
    using Body = std::function<void(Suite&)>;
    const std::vector<std::pair<std::string, Body>> plan = {
        {"field.orthogonality", [&](Suite& s) { field_orthogonality(s, level, hooks); }},
        {"field.arithmetic", [&](Suite& s) { field_arithmetic(s, level); }},
        {"regions.views", [&](Suite& s) { regions_views(s, level); }},
        {"sums.hard_bounds", [&](Suite& s) { sums_hard_bounds(s, level); }},
        {"sums.incomplete", [&](Suite& s) { sums_incomplete(s, level); }},
        {"sums.structure", [&](Suite& s) { sums_structure(s, level); }},
        {"counting.J", [&](Suite& s) { counting_J(s, level); }},
        {"counting.boxes", [&](Suite& s) { counting_boxes(s, level); }},
        {"counting.tuples", [&](Suite& s) { counting_tuples(s, level); }},
        {"counting.moments", [&](Suite& s) { counting_moments(s, level); }},
        {"pigeonhole", [&](Suite& s) { pigeonhole_suite(s, level); }},
        {"bounds", [&](Suite& s) { bounds_suite(s, level); }},
        {"harness", [&](Suite& s) { harness_suite(s, level); }},
    };
    VerifyReport report;
    for (const auto& [name, body] : plan) {
        Suite suite(name);
        const auto start = std::chrono::steady_clock::now();
        try {
            body(suite);
        } catch (const std::exception& e) {
            suite.check(false, std::string("exception: ") + e.what());
        }
        suite.result().seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.suites.push_back(std::move(suite.result()));
    }
    return report;
}

}  // namespace recip
