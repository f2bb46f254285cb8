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

#include "recip/regions.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "recip/error.hpp"
#include "recip/rng.hpp"

namespace recip {

namespace {

Rational cross(const Vertex& o, const Vertex& a, const Vertex& b) {
    return (a.u - o.u) * (b.v - o.v) - (a.v - o.v) * (b.u - o.u);
}

struct Extent {
    Rational lo;
    Rational hi;
};

// Extent of the polygon along the line {along == value}; `along_u` picks
// whether the line is vertical (u fixed) or horizontal (v fixed).
std::optional<Extent> extent_at(const std::vector<Vertex>& poly, bool along_u, const Rational& value) {
    std::optional<Extent> out;
    auto include = [&](const Rational& x) {
        if (!out) {
            out = Extent{x, x};
        } else {
            if (x < out->lo) out->lo = x;
            if (out->hi < x) out->hi = x;
        }
    };
    const auto n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& P = poly[i];
        const auto& Q = poly[(i + 1) % n];
        const auto& pa = along_u ? P.u : P.v;
        const auto& qa = along_u ? Q.u : Q.v;
        const auto& pb = along_u ? P.v : P.u;
        const auto& qb = along_u ? Q.v : Q.u;
        if (pa == qa) {
            if (pa == value) {
                include(pb);
                include(qb);
            }
            continue;
        }
        if (value < min(pa, qa) || max(pa, qa) < value) continue;
        include(pb + (qb - pb) * (value - pa) / (qa - pa));
    }
    return out;
}

Interval lattice_interval(const std::optional<Extent>& e, std::int64_t limit) {
    if (!e) return {};
    const auto lo = std::max<std::int64_t>(0, e->lo.ceil() - 1);
    const auto hi = std::min<std::int64_t>(limit, e->hi.floor());
    if (hi <= lo) return {};
    return {lo, hi};
}

}  // namespace

ConvexRegion ConvexRegion::rectangle(std::int64_t U, std::int64_t V) {
    if (U < 1 || V < 1) throw Error(ErrorKind::BadBounds, "rectangle needs U, V >= 1");
    ConvexRegion r;
    r.U_ = U;
    r.V_ = V;
    r.rectangle_ = true;
    r.vertices_ = {{0, 0}, {U, 0}, {U, V}, {0, V}};
    r.u_min_ = 1;
    r.u_max_ = U;
    r.build_views();
    return r;
}

ConvexRegion ConvexRegion::from_polygon(std::vector<Vertex> vertices, std::int64_t U, std::int64_t V) {
    if (U < 1 || V < 1) throw Error(ErrorKind::BadBounds, "polygon region needs U, V >= 1");

    std::vector<Vertex> poly;
    for (auto& x : vertices)
        if (poly.empty() || !(poly.back() == x)) poly.push_back(x);
    while (poly.size() > 1 && poly.front() == poly.back()) poly.pop_back();
    if (poly.size() < 3) throw Error(ErrorKind::NotConvex, "polygon needs at least 3 distinct vertices");

    const Rational zero(0), ru(U), rv(V);
    for (const auto& x : poly) {
        if (x.u < zero || ru < x.u || x.v < zero || rv < x.v)
            throw Error(ErrorKind::OutOfBox,
                        "vertex (" + x.u.str() + ", " + x.v.str() + ") outside [0,U]x[0,V]");
    }

    const auto n = poly.size();
    Rational area2;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& P = poly[i];
        const auto& Q = poly[(i + 1) % n];
        area2 += P.u * Q.v - P.v * Q.u;
    }
    if (area2 < zero) std::reverse(poly.begin(), poly.end());

    if (area2 == zero) {
        for (std::size_t k = 2; k < n; ++k)
            if (cross(poly[0], poly[1], poly[k]) != zero)
                throw Error(ErrorKind::NotConvex, "self-overlapping polygon");
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            const auto& P = poly[i];
            const auto& Q = poly[(i + 1) % n];
            for (const auto& X : poly)
                if (cross(P, Q, X) < zero)
                    throw Error(ErrorKind::NotConvex, "vertex on the wrong side of edge " + std::to_string(i));
        }
    }

    ConvexRegion r;
    r.U_ = U;
    r.V_ = V;
    r.vertices_ = std::move(poly);
    r.u_min_ = 1;
    r.u_max_ = U;
    r.build_views();
    return r;
}

void ConvexRegion::build_views() {
    columns_.assign(static_cast<std::size_t>(U_), Interval{});
    rows_.assign(static_cast<std::size_t>(V_), Interval{});
    if (rectangle_) {
        for (auto u = u_min_; u <= u_max_; ++u) columns_[u - 1] = {0, V_};
        if (u_min_ <= u_max_)
            for (auto& r : rows_) r = {u_min_ - 1, u_max_};
        return;
    }
    for (auto u = u_min_; u <= u_max_; ++u)
        columns_[u - 1] = lattice_interval(extent_at(vertices_, true, Rational(u)), V_);
    for (std::int64_t v = 1; v <= V_; ++v) {
        auto iv = lattice_interval(extent_at(vertices_, false, Rational(v)), U_);
        iv.lo = std::max(iv.lo, u_min_ - 1);
        iv.hi = std::min(iv.hi, u_max_);
        rows_[v - 1] = iv.empty() ? Interval{} : iv;
    }
}

Interval ConvexRegion::column(std::int64_t u) const noexcept {
    if (u < 1 || u > U_) return {};
    return columns_[u - 1];
}

Interval ConvexRegion::row(std::int64_t v) const noexcept {
    if (v < 1 || v > V_) return {};
    return rows_[v - 1];
}

std::uint64_t ConvexRegion::lattice_count() const noexcept {
    std::uint64_t n = 0;
    for (const auto& c : columns_) n += static_cast<std::uint64_t>(c.length());
    return n;
}

ConvexRegion ConvexRegion::column_slice(std::int64_t u_first, std::int64_t u_last) const {
    ConvexRegion r = *this;
    r.u_min_ = std::max(u_min_, u_first);
    r.u_max_ = std::min(u_max_, u_last);
    r.build_views();
    return r;
}

ConvexRegion region_rectangle(std::int64_t U, std::int64_t V) { return ConvexRegion::rectangle(U, V); }

ConvexRegion region_from_polygon(std::vector<Vertex> vertices, std::int64_t U, std::int64_t V) {
    return ConvexRegion::from_polygon(std::move(vertices), U, V);
}

Interval column_interval(const ConvexRegion& region, std::int64_t u) { return region.column(u); }
Interval row_interval(const ConvexRegion& region, std::int64_t v) { return region.row(v); }

std::vector<Vertex> parse_polygon(std::istream& in) {
    std::vector<Vertex> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string a, b, extra;
        if (!(ss >> a)) continue;
        if (!(ss >> b) || (ss >> extra))
            throw Error(ErrorKind::ConfigError, "polygon line " + std::to_string(lineno) + ": expected 'u v'");
        try {
            out.push_back({Rational::parse(a), Rational::parse(b)});
        } catch (const Error& e) {
            throw Error(ErrorKind::ConfigError, "polygon line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::vector<Vertex> load_polygon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ConfigError, "cannot open polygon file " + path);
    return parse_polygon(in);
}

WeightSeq::WeightSeq(std::vector<Complex> values, WeightSource source)
    : values_(std::move(values)), source_(source) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const auto z = values_[i];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) > 1.0 + 1e-12)
            throw Error(ErrorKind::PreconditionFailed, "weight " + std::to_string(i) + " has modulus above 1");
    }
}

WeightSeq weights_unit(std::size_t n) { return WeightSeq(std::vector<Complex>(n, Complex(1.0, 0.0)), WeightSource::Unit); }

WeightSeq weights_random(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Complex> w;
    w.reserve(n);
    while (w.size() < n) {
        const double x = 2.0 * rng.next_double() - 1.0;
        const double y = 2.0 * rng.next_double() - 1.0;
        if (x * x + y * y <= 1.0) w.emplace_back(x, y);
    }
    return WeightSeq(std::move(w), WeightSource::SeededRandom);
}

WeightSeq weights_from_stream(std::istream& in) {
    std::vector<Complex> w;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        double re = 0, im = 0;
        if (!(ss >> re)) continue;
        if (!(ss >> im))
            throw Error(ErrorKind::ConfigError, "weights line " + std::to_string(lineno) + ": expected 're im'");
        w.emplace_back(re, im);
    }
    return WeightSeq(std::move(w), WeightSource::File);
}

}  // namespace recip
