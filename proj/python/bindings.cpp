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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "recip/bounds.hpp"
#include "recip/counting.hpp"
#include "recip/error.hpp"
#include "recip/harness.hpp"
#include "recip/pigeonhole.hpp"
#include "recip/sums.hpp"
#include "recip/verify.hpp"

namespace py = pybind11;
using namespace recip;

namespace {

// Accepts Fraction, int or "n/d".
Rational to_rational(const py::handle& h) { return Rational::parse(py::str(h).cast<std::string>()); }

py::object to_fraction(const Rational& r) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(r.num(), r.den());
}

WeightSeq weights(const py::object& w, std::size_t n, std::uint64_t seed) {
    if (w.is_none() || (py::isinstance<py::str>(w) && w.cast<std::string>() == "unit")) return weights_unit(n);
    if (py::isinstance<py::str>(w)) {
        if (w.cast<std::string>() != "random") throw Error(ErrorKind::PreconditionFailed, "weights must be unit, random or a list");
        return weights_random(n, seed);
    }
    return WeightSeq(w.cast<std::vector<Complex>>(), WeightSource::File);
}

ConvexRegion region(std::int64_t U, std::int64_t V, const py::object& polygon) {
    if (polygon.is_none()) return region_rectangle(U, V);
    std::vector<Vertex> vs;
    for (auto v : polygon) {
        auto t = v.cast<std::pair<double, double>>();
        vs.push_back({t.first, t.second});
    }
    return region_from_polygon(std::move(vs), U, V);
}

py::dict sum_dict(const SumResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["terms"] = r.terms;
    d["excluded"] = r.excluded;
    d["trivial_bound"] = r.trivial_bound;
    d["benchmark"] = r.benchmark;
    return d;
}

py::dict count_dict(const CountReport& r) {
    py::dict d;
    d["count"] = r.count;
    d["bound_rhs"] = r.bound_rhs;
    d["ratio"] = r.ratio;
    return d;
}

BoundLabel parse_label(const std::string& s) {
    for (auto l : {BoundLabel::SAbd, BoundLabel::KMix1, BoundLabel::KMix2, BoundLabel::SPure, BoundLabel::SPureSlice,
                   BoundLabel::TrivialSingle, BoundLabel::TrivialBilinear, BoundLabel::KPure, BoundLabel::KZero})
        if (to_string(l) == s) return l;
    throw Error(ErrorKind::PreconditionFailed, "unknown bound label " + s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bilinear sums with reciprocals over prime fields";

    static py::exception<Error> exc(m, "RecipError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(exc, e.what());
        }
    });

    m.def("is_prime", &is_prime, py::arg("n"));

    m.def(
        "eval_S",
        [](std::uint64_t p, std::vector<std::int64_t> f, std::int64_t U, std::int64_t V, py::object w,
           std::uint64_t seed, py::object polygon) {
            const FieldContext ctx(p);
            const PolySpec poly(f, ctx);
            return sum_dict(eval_S(poly, weights(w, U, seed), weights(w, V, seed + 1), region(U, V, polygon), ctx));
        },
        py::arg("p"), py::arg("f") = std::vector<std::int64_t>{0, 1}, py::arg("U"), py::arg("V"),
        py::arg("weights") = "unit", py::arg("seed") = 0, py::arg("polygon") = py::none(),
        "S_f(A, B; C). f lists coefficients from the constant term up.");

    m.def(
        "eval_T",
        [](std::uint64_t p, std::vector<std::int64_t> f, std::int64_t U, std::int64_t V, std::uint64_t order,
           std::uint64_t index, py::object w, std::uint64_t seed, py::object polygon) {
            const FieldContext ctx(p);
            const PolySpec poly(f, ctx);
            const MultChar chi(ctx, order, index);
            return sum_dict(
                eval_T(chi, poly, weights(w, U, seed), weights(w, V, seed + 1), region(U, V, polygon), ctx));
        },
        py::arg("p"), py::arg("f") = std::vector<std::int64_t>{0, 1}, py::arg("U"), py::arg("V"),
        py::arg("order") = 2, py::arg("index") = 1, py::arg("weights") = "unit", py::arg("seed") = 0,
        py::arg("polygon") = py::none());

    m.def(
        "eval_K",
        [](std::uint64_t p, std::int64_t a, std::int64_t b, std::int64_t U, std::int64_t V, py::object w,
           std::uint64_t seed, py::object polygon) {
            const FieldContext ctx(p);
            return sum_dict(eval_K(a, b, weights(w, U, seed), weights(w, V, seed + 1), region(U, V, polygon), ctx));
        },
        py::arg("p"), py::arg("a") = 1, py::arg("b") = 0, py::arg("U"), py::arg("V"), py::arg("weights") = "unit",
        py::arg("seed") = 0, py::arg("polygon") = py::none());

    m.def(
        "count_J",
        [](std::uint64_t p, int d, int k, std::int64_t a, std::int64_t b, std::int64_t T, const std::string& method) {
            const FieldContext ctx(p);
            if (method == "naive") return count_dict(count_J_naive(d, k, a, b, T, ctx));
            if (method != "conv") throw Error(ErrorKind::PreconditionFailed, "method must be conv or naive");
            return count_dict(count_J_conv(d, k, a, b, T, ctx));
        },
        py::arg("p"), py::arg("d"), py::arg("k"), py::arg("a") = 1, py::arg("b") = 0, py::arg("T"),
        py::arg("method") = "conv");

    m.def(
        "count_N",
        [](std::uint64_t p, std::vector<std::int64_t> f, std::int64_t U, std::int64_t Z) {
            const FieldContext ctx(p);
            return count_dict(count_N(PolySpec(f, ctx), U, Z, ctx));
        },
        py::arg("p"), py::arg("f"), py::arg("U"), py::arg("Z"));

    m.def(
        "count_N_tuples",
        [](std::uint64_t p, std::vector<Elem> r, std::int64_t L, std::int64_t V) {
            const FieldContext ctx(p);
            return count_dict(count_N_tuples(r, L, V, ctx));
        },
        py::arg("p"), py::arg("r"), py::arg("L"), py::arg("V"));

    m.def(
        "char_moment",
        [](std::uint64_t p, std::uint64_t order, std::uint64_t index, std::int64_t K, int nu) {
            const FieldContext ctx(p);
            return char_moment(MultChar(ctx, order, index), K, nu, ctx);
        },
        py::arg("p"), py::arg("order"), py::arg("index"), py::arg("K"), py::arg("nu") = 1);

    m.def(
        "discrepancy",
        [](std::uint64_t p, std::vector<Elem> r) {
            const FieldContext ctx(p);
            return discrepancy(r, ctx);
        },
        py::arg("p"), py::arg("r"));

    m.def(
        "find_t",
        [](std::uint64_t p, std::vector<std::int64_t> a, std::vector<double> T) {
            const FieldContext ctx(p);
            const auto r = find_t(a, T, ctx);
            py::dict d;
            d["t"] = r.t;
            d["c"] = r.c;
            d["rho"] = r.per_i;
            d["guarantee"] = r.guarantee_applies;
            return d;
        },
        py::arg("p"), py::arg("a"), py::arg("T"));

    m.def(
        "exponent",
        [](const std::string& label, py::object alpha, py::object beta, int d, int k) {
            const auto a = to_rational(alpha), b = to_rational(beta);
            switch (parse_label(label)) {
            case BoundLabel::SAbd: return to_fraction(exp_S_abd(k, a, b));
            case BoundLabel::KMix1: return to_fraction(exp_K_mix1(a, b));
            case BoundLabel::KMix2: return to_fraction(exp_K_mix2(a, b));
            case BoundLabel::SPure: return to_fraction(exp_S_pure(d, a, b));
            case BoundLabel::SPureSlice: return to_fraction(exp_S_pure_slice(d, a, b));
            case BoundLabel::TrivialSingle: return to_fraction(exp_trivial_single());
            case BoundLabel::TrivialBilinear: return to_fraction(exp_trivial_bilinear(a, b));
            case BoundLabel::KPure: return to_fraction(exp_K_pure(a, b));
            case BoundLabel::KZero: return to_fraction(exp_K_zero(a, b));
            }
            return py::object(py::none());
        },
        py::arg("label"), py::arg("alpha"), py::arg("beta"), py::arg("d") = 1, py::arg("k") = 1,
        "Exponent of p in the named bound, as a Fraction.");

    m.def(
        "compare_table",
        [](py::object points, int k_max) {
            std::vector<std::pair<Rational, Rational>> pts;
            if (points.is_none())
                pts = reference_points();
            else
                for (auto pt : points) {
                    auto t = pt.cast<py::tuple>();
                    pts.emplace_back(to_rational(t[0]), to_rational(t[1]));
                }
            py::list out;
            for (const auto& row : compare_table(pts, k_max)) {
                py::dict r;
                r["alpha"] = to_fraction(row.alpha);
                r["beta"] = to_fraction(row.beta);
                py::dict bounds;
                for (const auto& b : row.bounds) {
                    py::dict e;
                    e["exponent"] = to_fraction(b.exponent);
                    e["nontrivial"] = b.nontrivial;
                    e["winner"] = b.winner;
                    e["k_set"] = b.k_set;
                    bounds[py::str(std::string(to_string(b.label)))] = e;
                }
                r["bounds"] = bounds;
                out.append(r);
            }
            return out;
        },
        py::arg("points") = py::none(), py::arg("k_max") = 64);

    m.def(
        "table_compare",
        [](int k_max) {
            const auto r = cmd_table_compare(reference_points(), k_max);
            py::dict d;
            d["rendered"] = r.rendered;
            d["csv"] = r.csv;
            d["mismatches"] = r.mismatches;
            d["exit_code"] = r.exit_code;
            return d;
        },
        py::arg("k_max") = 64, "Published comparison rows, as printed by the CLI.");

    m.def(
        "run_config",
        [](const std::string& command, const std::string& text, std::optional<std::uint64_t> seed, std::int64_t parallel) {
            const auto cfg = parse_config_text(text);
            RunOptions opts;
            opts.seed = seed;
            opts.parallel = parallel;
            if (command == "eval") return cmd_eval(cfg, opts);
            if (command == "count") return cmd_count(cfg, opts);
            if (command == "sweep") return cmd_sweep(cfg, opts);
            if (command == "pigeonhole") return cmd_pigeonhole(cfg, opts);
            if (command == "discrepancy") return cmd_discrepancy(cfg, opts);
            throw Error(ErrorKind::PreconditionFailed, "unknown command " + command);
        },
        py::arg("command"), py::arg("config"), py::arg("seed") = py::none(), py::arg("parallel") = 0,
        "Runs a CLI subcommand on config text and returns its CSV.");

    m.def(
        "verify",
        [](const std::string& level) {
            VerifyReport r;
            {
                py::gil_scoped_release release;
                r = run_verify(parse_level(level));
            }
            return py::make_tuple(r.ok(), r.render(true));
        },
        py::arg("level") = "quick");
}
