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

#include "recip/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <thread>

#include "recip/counting.hpp"
#include "recip/csv.hpp"
#include "recip/error.hpp"
#include "recip/field.hpp"
#include "recip/pigeonhole.hpp"
#include "recip/regions.hpp"
#include "recip/sums.hpp"

namespace recip {

namespace {

using Clock = std::chrono::steady_clock;

std::string str(std::int64_t x) { return std::to_string(x); }
std::string str(std::uint64_t x) { return std::to_string(x); }

std::uint64_t seed_of(const ExperimentConfig& cfg, const RunOptions& opts) {
    return opts.seed ? *opts.seed : cfg.seed.value_or(0);
}

WorkCaps caps_of(const ExperimentConfig& cfg) {
    auto caps = default_caps();
    if (cfg.workcap) caps.max_states = *cfg.workcap;
    return caps;
}

std::int64_t parallel_of(const ExperimentConfig& cfg, const RunOptions& opts) {
    const auto n = opts.parallel > 0 ? opts.parallel : cfg.parallel;
    return std::max<std::int64_t>(1, n);
}

FieldContext field_for(std::int64_t p) {
    if (p < 3) throw Error(ErrorKind::NotPrime, "p = " + str(p));
    return FieldContext(static_cast<std::uint64_t>(p));
}

std::vector<std::int64_t> degrees_of(const ExperimentConfig& cfg) {
    if (!cfg.f.empty()) return {static_cast<std::int64_t>(cfg.f.size()) - 1};
    if (cfg.d.empty()) return {1};
    return cfg.d;
}

PolySpec poly_for(const ExperimentConfig& cfg, std::int64_t d, const FieldContext& ctx) {
    if (!cfg.f.empty()) return PolySpec(cfg.f, ctx);
    return PolySpec::monomial(static_cast<int>(d), ctx);
}

ConvexRegion region_for(const ExperimentConfig& cfg, std::int64_t U, std::int64_t V) {
    if (!cfg.polygon.empty()) return ConvexRegion::from_polygon(load_polygon(cfg.polygon), U, V);
    return ConvexRegion::rectangle(U, V);
}

std::pair<WeightSeq, WeightSeq> weights_for(const ExperimentConfig& cfg, std::uint64_t seed, std::int64_t U,
                                            std::int64_t V) {
    const auto nu = static_cast<std::size_t>(U), nv = static_cast<std::size_t>(V);
    if (cfg.weights == "random") return {weights_random(nu, seed), weights_random(nv, seed + 1)};
    return {weights_unit(nu), weights_unit(nv)};
}

std::vector<std::int64_t> or_default(const std::vector<std::int64_t>& xs, std::int64_t dflt) {
    return xs.empty() ? std::vector<std::int64_t>{dflt} : xs;
}

void require_key(const ExperimentConfig& cfg, const std::string& key) {
    if (!cfg.has(key)) throw Error(ErrorKind::ConfigError, "missing required key '" + key + "'");
}

std::string elapsed_ms(Clock::time_point start, bool timing) {
    if (!timing) return {};
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
    return fmt_double(static_cast<double>(us) / 1000.0);
}

bool is_char_sum(const std::string& s) { return s == "T" || s == "T1"; }

SumResult evaluate_sum(const std::string& kind, const ExperimentConfig& cfg, const PolySpec& f,
                       const WeightSeq& A, const WeightSeq& B, const ConvexRegion& region,
                       const FieldContext& ctx) {
    const auto a = cfg.a.empty() ? 1 : cfg.a.front();
    const auto b = cfg.b.empty() ? 0 : cfg.b.front();
    if (kind == "S") return eval_S(f, A, B, region, ctx);
    if (kind == "S1") return eval_S_single(f, A, region, ctx);
    if (kind == "K") return eval_K(a, b, A, B, region, ctx);
    if (kind == "K1") return eval_K_single(a, b, A, region, ctx);
    const MultChar chi(ctx, static_cast<std::uint64_t>(cfg.chi_order), static_cast<std::uint64_t>(cfg.chi_index));
    if (kind == "T") return eval_T(chi, f, A, B, region, ctx);
    if (kind == "T1") return eval_T_single(chi, f, A, region, ctx);
    throw Error(ErrorKind::ConfigError, "unknown sum '" + kind + "' (expected S, S1, T, T1, K, K1)");
}

void check_sum_names(const std::vector<std::string>& sums) {
    for (const auto& s : sums)
        if (s != "S" && s != "S1" && s != "T" && s != "T1" && s != "K" && s != "K1")
            throw Error(ErrorKind::ConfigError, "unknown sum '" + s + "' (expected S, S1, T, T1, K, K1)");
}

// Runs fn(i) for i in [0, n) on up to `workers` threads; results land in
// caller-owned slots so the output order never depends on scheduling.
template <class Fn>
void run_cells(std::size_t n, std::int64_t workers, Fn fn) {
    const auto w = static_cast<std::size_t>(std::min<std::int64_t>(workers, static_cast<std::int64_t>(n)));
    if (w <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < w; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace

std::int64_t scale_from_exponent(std::int64_t p, const Rational& alpha) {
    const double x = std::pow(static_cast<double>(p), alpha.to_double());
    auto v = static_cast<std::int64_t>(std::floor(x + 1e-9));
    return std::clamp<std::int64_t>(v, 1, p - 1);
}

std::vector<std::pair<Rational, Rational>> parse_points(const std::string& text) {
    std::vector<std::pair<Rational, Rational>> out;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw Error(ErrorKind::ConfigError, "row '" + item + "' must look like alpha:beta");
        out.emplace_back(Rational::parse(item.substr(0, colon)), Rational::parse(item.substr(colon + 1)));
    }
    return out;
}

TableCompareResult cmd_table_compare(const std::vector<std::pair<Rational, Rational>>& points, int k_max) {
    TableCompareResult res;
    const auto rows = compare_table(points, k_max);

    auto cell = [](const BoundRow& b) {
        if (!b.nontrivial) return std::string("---");
        std::string s = (b.winner ? "* " : "") + std::string("p^") + b.exponent.str();
        if (!b.k_set.empty()) {
            s += " (k=";
            for (std::size_t i = 0; i < b.k_set.size(); ++i) s += (i ? " or " : "") + std::to_string(b.k_set[i]);
            s += ")";
        }
        return s;
    };
    std::ostringstream out;
    out << std::left << std::setw(22) << "(U, V)" << " | " << std::setw(28) << "SAbd (optimal k)" << " | "
        << std::setw(12) << "KMix1" << " | " << "KMix2" << "\n";
    out << std::string(22, '-') << "-+-" << std::string(28, '-') << "-+-" << std::string(12, '-') << "-+-"
        << std::string(12, '-') << "\n";
    for (const auto& r : rows) {
        const auto uv = "(p^" + r.alpha.str() + ", p^" + r.beta.str() + ")";
        out << std::setw(22) << uv << " | " << std::setw(28) << cell(r.at(BoundLabel::SAbd)) << " | " << std::setw(12)
            << cell(r.at(BoundLabel::KMix1)) << " | " << cell(r.at(BoundLabel::KMix2)) << "\n";
    }
    out << "('*' marks the winning bound, '---' a trivial one; k_max = " << k_max << ")\n";

    CsvTable csv({"alpha", "beta", "bound", "exponent", "nontrivial", "winner", "k_set"});
    for (const auto& r : rows) {
        for (const auto& b : r.bounds) {
            std::string ks;
            for (std::size_t i = 0; i < b.k_set.size(); ++i) ks += (i ? ";" : "") + std::to_string(b.k_set[i]);
            csv.add_row({r.alpha.str(), r.beta.str(), std::string(to_string(b.label)), b.exponent.str(),
                         b.nontrivial ? "1" : "0", b.winner ? "1" : "0", ks});
        }
    }

    res.mismatches = reference_table_mismatches(compare_table(reference_points(), k_max));
    res.exit_code = res.mismatches.empty() ? 0 : 1;
    if (!res.mismatches.empty()) {
        out << "published rows NOT reproduced:\n";
        for (const auto& m : res.mismatches) out << "  " << m << "\n";
    } else {
        out << "published rows reproduced exactly\n";
    }
    res.rendered = out.str();
    res.csv = csv.str();
    return res;
}

std::string cmd_eval(const ExperimentConfig& cfg, const RunOptions& opts) {
    const auto p = require_single(cfg.p, "p");
    const auto U = require_single(cfg.U, "U");
    const auto V = require_single(cfg.V, "V");
    const auto sums = cfg.sums.empty() ? std::vector<std::string>{"S"} : cfg.sums;
    check_sum_names(sums);
    const auto seed = seed_of(cfg, opts);
    const auto ctx = field_for(p);
    const auto d = degrees_of(cfg).front();
    const auto f = poly_for(cfg, d, ctx);
    const auto region = region_for(cfg, U, V);
    const auto [A, B] = weights_for(cfg, seed, U, V);

    CsvTable csv({"sum", "p", "d", "U", "V", "weights", "seed", "re", "im", "abs", "terms", "excluded", "trivial_UV",
                  "sqrt_dUVp", "sqrt_2dUVp", "ratio_trivial", "ratio_sqrt", "wall_ms"});
    for (const auto& kind : sums) {
        const auto start = Clock::now();
        const auto r = evaluate_sum(kind, cfg, f, A, B, region, ctx);
        const auto deg = (kind == "K" || kind == "K1") ? 1 : f.degree();
        const double uvp = r.trivial_bound * static_cast<double>(p);
        const double hard = std::sqrt(deg * uvp), hard2 = std::sqrt(2.0 * deg * uvp);
        const double absval = std::abs(r.value);
        csv.add_row({kind, str(p), str(static_cast<std::int64_t>(deg)), str(U), str(V), cfg.weights, str(seed),
                     fmt_double(r.value.real()), fmt_double(r.value.imag()), fmt_double(absval), str(r.terms),
                     str(r.excluded), fmt_double(r.trivial_bound), fmt_double(hard), fmt_double(hard2),
                     fmt_double(absval / r.trivial_bound), fmt_double(absval / (is_char_sum(kind) ? hard2 : hard)),
                     elapsed_ms(start, opts.timing)});
    }
    return csv.str();
}

std::string cmd_count(const ExperimentConfig& cfg, const RunOptions& opts) {
    require_key(cfg, "p");
    require_key(cfg, "quantities");
    const auto caps = caps_of(cfg);
    CsvTable csv({"quantity", "p", "d", "k", "a", "b", "T", "U", "V", "Z", "L", "K", "nu", "value", "oracle",
                  "bound_rhs", "ratio", "deviation", "weil_ref", "weil_const", "wall_ms"});
    // quantity, p, d, k, a, b, T, U, V, Z, L, K, nu
    struct Key {
        std::string q;
        std::int64_t p;
        std::string d, k, a, b, T, U, V, Z, L, K, nu;
    };
    auto emit = [&](const Key& key, const std::string& value, const std::string& oracle, double rhs, double ratio,
                    const std::string& dev, const std::string& wref, const std::string& wconst,
                    Clock::time_point start) {
        csv.add_row({key.q, str(key.p), key.d, key.k, key.a, key.b, key.T, key.U, key.V, key.Z, key.L, key.K, key.nu,
                     value, oracle, std::isnan(rhs) ? "" : fmt_double(rhs), std::isnan(ratio) ? "" : fmt_double(ratio),
                     dev, wref, wconst, elapsed_ms(start, opts.timing)});
    };
    const double nan = std::nan("");

    for (const auto& q : cfg.quantities) {
        if (q != "J" && q != "N" && q != "weil" && q != "tuples" && q != "moment" && q != "census")
            throw Error(ErrorKind::ConfigError,
                        "unknown quantity '" + q + "' (expected J, N, weil, tuples, moment, census)");
    }

    for (const auto& q : cfg.quantities) {
        for (const auto p : cfg.p) {
            const auto ctx = field_for(p);
            if (q == "J") {
                for (auto d : or_default(cfg.d, 1))
                    for (auto k : or_default(cfg.k, 2))
                        for (auto a : or_default(cfg.a, 1))
                            for (auto b : or_default(cfg.b, 0))
                                for (auto T : cfg.T) {
                                    const auto start = Clock::now();
                                    const auto di = static_cast<int>(d), ki = static_cast<int>(k);
                                    const auto conv = count_J_conv(di, ki, a, b, T, ctx, caps);
                                    std::string oracle;
                                    try {
                                        oracle = str(count_J_naive(di, ki, a, b, T, ctx, caps).count);
                                    } catch (const Error& e) {
                                        if (e.kind() != ErrorKind::RangeTooLarge) throw;
                                    }
                                    emit({q, p, str(d), str(k), str(a), str(b), str(T), "", "", "", "", "", ""},
                                         str(conv.count), oracle, conv.bound_rhs, conv.ratio, "", "", "", start);
                                }
            } else if (q == "N" || q == "weil") {
                for (auto d : q == "weil" && cfg.f.empty() ? std::vector<std::int64_t>{1} : degrees_of(cfg)) {
                    const auto f = poly_for(cfg, d, ctx);
                    for (auto U : cfg.U)
                        for (auto Z : cfg.Z) {
                            const auto start = Clock::now();
                            const auto r = count_N(f, U, Z, ctx);
                            std::string oracle;
                            if (static_cast<std::uint64_t>(U) * static_cast<std::uint64_t>(Z) <= caps.max_states) {
                                std::uint64_t n = 0;
                                for (std::int64_t u = 1; u <= U; ++u) {
                                    const auto fu = poly_eval(f, static_cast<Elem>(u), ctx);
                                    for (std::int64_t z = 1; z <= Z; ++z)
                                        if (ctx.mul(fu, static_cast<Elem>(z)) == 1) ++n;
                                }
                                oracle = str(n);
                            }
                            const Key key{q, p, str(static_cast<std::int64_t>(f.degree())), "", "", "", "",
                                          str(U), "", str(Z), "", "", ""};
                            if (q == "N") {
                                emit(key, str(r.count), oracle, r.bound_rhs, r.ratio, "", "", "", start);
                            } else {
                                const double pd = static_cast<double>(p);
                                const double dev = static_cast<double>(r.count) -
                                                   static_cast<double>(U) * static_cast<double>(Z) / pd;
                                const double ref = std::sqrt(pd) * std::log(pd) * std::log(pd);
                                emit(key, str(r.count), oracle, nan, nan, fmt_double(dev), fmt_double(ref),
                                     fmt_double(std::abs(dev) / ref), start);
                            }
                        }
                }
            } else if (q == "tuples") {
                for (auto d : degrees_of(cfg)) {
                    const auto f = poly_for(cfg, d, ctx);
                    for (auto U : cfg.U) {
                        std::vector<Elem> r;
                        for (std::int64_t u = 1; u <= U; ++u) r.push_back(poly_eval(f, static_cast<Elem>(u), ctx));
                        for (auto L : cfg.L)
                            for (auto V : cfg.V) {
                                const auto start = Clock::now();
                                const auto rep = count_N_tuples(r, L, V, ctx);
                                const auto primes = primes_in(static_cast<std::uint64_t>(L),
                                                              static_cast<std::uint64_t>(2 * L));
                                const auto n = static_cast<std::uint64_t>(primes.size()) * U * V;
                                std::string oracle;
                                if (n <= caps.max_states / std::max<std::uint64_t>(n, 1)) {
                                    std::uint64_t count = 0;
                                    std::vector<Elem> lhs;
                                    for (auto l : primes)
                                        for (std::int64_t u = 1; u <= U; ++u)
                                            for (std::int64_t v = 1; v <= V; ++v)
                                                lhs.push_back(ctx.mul(ctx.add(static_cast<Elem>(v) % ctx.p(), r[u - 1]),
                                                                      ctx.inv(l % ctx.p())));
                                    for (auto x : lhs)
                                        for (auto y : lhs) count += x == y;
                                    oracle = str(count);
                                }
                                emit({q, p, str(static_cast<std::int64_t>(f.degree())), "", "", "", "", str(U), str(V),
                                      "", str(L), "", ""},
                                     str(rep.count), oracle, rep.bound_rhs, rep.ratio, "", "", "", start);
                            }
                    }
                }
            } else if (q == "moment") {
                const MultChar chi(ctx, static_cast<std::uint64_t>(cfg.chi_order),
                                   static_cast<std::uint64_t>(cfg.chi_index));
                for (auto K : cfg.K)
                    for (auto nu : or_default(cfg.nu, 1)) {
                        const auto start = Clock::now();
                        const auto m = char_moment(chi, K, static_cast<int>(nu), ctx);
                        const double Kd = static_cast<double>(K), pd = static_cast<double>(p);
                        const double rhs = std::pow(Kd, 2.0 * nu) * std::sqrt(pd) + std::pow(Kd, nu) * pd;
                        emit({q, p, "", "", "", "", "", "", "", "", "", str(K), str(nu)}, fmt_double(m),
                             nu == 1 ? str(K * (p - K)) : "", rhs, m / rhs, "", "", "", start);
                    }
            } else if (q == "census") {
                for (auto d : degrees_of(cfg)) {
                    const auto f = poly_for(cfg, d, ctx);
                    for (auto U : cfg.U)
                        for (auto V : cfg.V) {
                            const auto start = Clock::now();
                            const auto c = rho_census(f, U, V, ctx);
                            const Key key{"", p, str(static_cast<std::int64_t>(f.degree())), "", "", "", "",
                                          str(U), str(V), "", "", "", ""};
                            auto row = [&](const std::string& name, std::uint64_t v) {
                                Key k2 = key;
                                k2.q = name;
                                emit(k2, str(v), "", nan, nan, "", "", "", start);
                            };
                            row("census:R", c.R);
                            row("census:band_I", c.band_I);
                            for (std::size_t j = 0; j < c.Q.size(); ++j)
                                row("census:Q" + std::to_string(c.I + 1 + static_cast<int>(j)), c.Q[j]);
                            row("census:excluded", c.excluded);
                            row("census:total", c.total());
                        }
                }
            }
        }
    }
    return csv.str();
}

std::string cmd_sweep(const ExperimentConfig& cfg, const RunOptions& opts) {
    require_key(cfg, "p");
    if (!cfg.has("U") && !cfg.has("alpha")) throw Error(ErrorKind::ConfigError, "missing required key 'U' or 'alpha'");
    if (!cfg.has("V") && !cfg.has("beta")) throw Error(ErrorKind::ConfigError, "missing required key 'V' or 'beta'");
    const auto sums = cfg.sums.empty() ? std::vector<std::string>{"S1"} : cfg.sums;
    check_sum_names(sums);
    const auto caps = caps_of(cfg);
    const auto seed = seed_of(cfg, opts);

    CsvTable csv({"sum", "p", "d", "alpha", "beta", "U", "V", "seed", "re", "im", "abs", "terms", "excluded",
                  "trivial_UV", "ref", "ref_rhs", "ratio_ref", "status", "wall_ms"});

    // U and V axes are either explicit or exponents of p.
    struct Scale {
        std::optional<Rational> exponent;
        std::int64_t value = 0;
    };
    auto scales = [](const std::vector<std::int64_t>& direct, const std::vector<Rational>& exps, bool use_exps) {
        std::vector<Scale> out;
        if (use_exps)
            for (const auto& e : exps) out.push_back({e, 0});
        else
            for (auto v : direct) out.push_back({std::nullopt, v});
        return out;
    };
    const auto us = scales(cfg.U, cfg.alpha, !cfg.has("U"));
    const auto vs = scales(cfg.V, cfg.beta, !cfg.has("V"));

    struct Cell {
        std::int64_t p, d;
        Scale u, v;
    };
    std::vector<Cell> cells;
    for (auto p : cfg.p)
        for (auto d : degrees_of(cfg))
            for (const auto& u : us)
                for (const auto& v : vs) cells.push_back({p, d, u, v});

    std::vector<std::vector<std::vector<std::string>>> results(cells.size());
    run_cells(cells.size(), parallel_of(cfg, opts), [&](std::size_t i) {
        const auto& c = cells[i];
        const auto U = c.u.exponent ? scale_from_exponent(c.p, *c.u.exponent) : c.u.value;
        const auto V = c.v.exponent ? scale_from_exponent(c.p, *c.v.exponent) : c.v.value;
        const auto alpha = c.u.exponent ? c.u.exponent->str() : "";
        const auto beta = c.v.exponent ? c.v.exponent->str() : "";
        for (const auto& kind : sums) {
            const auto start = Clock::now();
            const bool kloosterman = kind == "K" || kind == "K1";
            std::vector<std::string> row = {kind, str(c.p), str(kloosterman ? 1 : c.d), alpha, beta, str(U), str(V),
                                            str(seed)};
            auto finish = [&](std::vector<std::string> tail) {
                row.insert(row.end(), tail.begin(), tail.end());
                row.push_back(elapsed_ms(start, opts.timing));
                results[i].push_back(std::move(row));
            };
            if (static_cast<double>(U) * static_cast<double>(V) > static_cast<double>(caps.max_states)) {
                finish({"", "", "", "", "", "", "", "", "", "skipped"});
                continue;
            }
            try {
                const auto ctx = field_for(c.p);
                const auto f = poly_for(cfg, c.d, ctx);
                const auto region = region_for(cfg, U, V);
                const auto [A, B] = weights_for(cfg, seed, U, V);
                const auto r = evaluate_sum(kind, cfg, f, A, B, region, ctx);
                const double pd = static_cast<double>(c.p), Ud = static_cast<double>(U), Vd = static_cast<double>(V);
                const double dd = kloosterman ? 1.0 : static_cast<double>(f.degree());
                std::string ref;
                double rhs = 0;
                if (kind == "S1") {
                    ref = "spure";
                    rhs = std::pow(pd, dd / (dd + 1)) * std::pow(Ud, dd / 2) + Vd;
                } else if (kind == "S") {
                    ref = "sqrt_dUVp";
                    rhs = std::sqrt(dd * Ud * Vd * pd);
                } else if (kind == "K") {
                    ref = "kmix1";
                    rhs = std::pow(Vd, 0.75) * (std::pow(Ud, 0.875) * std::pow(pd, 0.125) +
                                                std::sqrt(Ud) * std::pow(pd, 0.25));
                } else if (kind == "K1") {
                    ref = "kpure";
                    rhs = std::sqrt(Ud * pd) + Vd;
                } else {
                    ref = "UV";
                    rhs = Ud * Vd;
                }
                const double absval = std::abs(r.value);
                finish({fmt_double(r.value.real()), fmt_double(r.value.imag()), fmt_double(absval), str(r.terms),
                        str(r.excluded), fmt_double(r.trivial_bound), ref, fmt_double(rhs), fmt_double(absval / rhs),
                        "ok"});
            } catch (const Error& e) {
                finish({"", "", "", "", "", "", "", "", "", std::string("error: ") + std::string(to_string(e.kind()))});
            }
        }
    });
    for (auto& cell_rows : results)
        for (auto& row : cell_rows) csv.add_row(std::move(row));
    return csv.str();
}

std::string cmd_pigeonhole(const ExperimentConfig& cfg, const RunOptions& opts) {
    require_key(cfg, "p");
    require_key(cfg, "U");
    CsvTable csv({"p", "d", "U", "t", "W", "c", "b", "T", "guarantee", "wall_ms"});
    for (auto p : cfg.p) {
        const auto ctx = field_for(p);
        for (auto d : degrees_of(cfg)) {
            const auto f = poly_for(cfg, d, ctx);
            for (auto U : cfg.U) {
                const auto start = Clock::now();
                const auto g = shrink_poly(f, U, ctx);
                std::string bs, ts;
                double log_prod = 0;
                for (std::size_t i = 0; i < g.b.size(); ++i) {
                    bs += (i ? ";" : "") + std::to_string(g.b[i]);
                    ts += (i ? ";" : "") + fmt_double(g.T[i]);
                    log_prod += std::log(std::max(g.T[i], 1.0));
                }
                const bool guarantee = log_prod > f.degree() * std::log(static_cast<double>(p)) - 1e-9;
                csv.add_row({str(p), str(static_cast<std::int64_t>(f.degree())), str(U), str(g.t), fmt_double(g.W),
                             fmt_double(g.c), bs, ts, guarantee ? "1" : "0", elapsed_ms(start, opts.timing)});
            }
        }
    }
    return csv.str();
}

std::string cmd_discrepancy(const ExperimentConfig& cfg, const RunOptions& opts) {
    require_key(cfg, "p");
    require_key(cfg, "U");
    CsvTable csv({"p", "d", "U", "discrepancy", "constant_reference", "wall_ms"});
    for (auto p : cfg.p) {
        const auto ctx = field_for(p);
        for (auto d : degrees_of(cfg)) {
            const auto f = poly_for(cfg, d, ctx);
            for (auto U : cfg.U) {
                const auto start = Clock::now();
                std::vector<Elem> r;
                for (std::int64_t u = 1; u <= U; ++u) r.push_back(poly_eval(f, static_cast<Elem>(u) % ctx.p(), ctx));
                const auto disc = discrepancy(r, ctx);
                csv.add_row({str(p), str(static_cast<std::int64_t>(f.degree())), str(U), fmt_double(disc),
                             fmt_double(1.0 - 1.0 / static_cast<double>(p)), elapsed_ms(start, opts.timing)});
            }
        }
    }
    return csv.str();
}

}  // namespace recip
