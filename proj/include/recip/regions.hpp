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

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "recip/field.hpp"
#include "recip/rational.hpp"

namespace recip {

/// Half-open lattice interval (lo, hi]; empty iff hi <= lo, stored as (0, 0).
struct Interval {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    bool empty() const noexcept { return hi <= lo; }
    std::int64_t length() const noexcept { return empty() ? 0 : hi - lo; }
    bool contains(std::int64_t x) const noexcept { return lo < x && x <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

struct Vertex {
    Rational u;
    Rational v;
    friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Lattice points of a closed convex polygon, restricted to [1,U] x [1,V].
///
/// Column u holds the v's in column(u) and row v holds the u's in row(v); both
/// views are precomputed exactly from the rational vertices, so they agree
/// point for point.
class ConvexRegion {
  public:
    static ConvexRegion rectangle(std::int64_t U, std::int64_t V);

    /// Vertices in either orientation. Throws NotConvex, OutOfBox, BadBounds.
    static ConvexRegion from_polygon(std::vector<Vertex> vertices, std::int64_t U, std::int64_t V);

    std::int64_t U() const noexcept { return U_; }
    std::int64_t V() const noexcept { return V_; }
    bool is_rectangle() const noexcept { return rectangle_; }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

    /// Member v's of column u; empty outside [1, U].
    Interval column(std::int64_t u) const noexcept;
    /// Member u's of row v; empty outside [1, V].
    Interval row(std::int64_t v) const noexcept;

    bool contains(std::int64_t u, std::int64_t v) const noexcept { return column(u).contains(v); }
    std::uint64_t lattice_count() const noexcept;

    /// The part of the region with u_first <= u <= u_last (still convex).
    ConvexRegion column_slice(std::int64_t u_first, std::int64_t u_last) const;

  private:
    ConvexRegion() = default;
    void build_views();

    std::int64_t U_ = 0;
    std::int64_t V_ = 0;
    bool rectangle_ = false;
    std::vector<Vertex> vertices_;  // counter-clockwise
    std::int64_t u_min_ = 1;
    std::int64_t u_max_ = 0;
    std::vector<Interval> columns_;  // index u - 1
    std::vector<Interval> rows_;     // index v - 1
};

ConvexRegion region_rectangle(std::int64_t U, std::int64_t V);
ConvexRegion region_from_polygon(std::vector<Vertex> vertices, std::int64_t U, std::int64_t V);
Interval column_interval(const ConvexRegion& region, std::int64_t u);
Interval row_interval(const ConvexRegion& region, std::int64_t v);

/// One "u v" vertex per line, each coordinate "n" or "n/d"; '#' starts a comment.
std::vector<Vertex> parse_polygon(std::istream& in);
std::vector<Vertex> load_polygon(const std::string& path);

enum class WeightSource { Unit, SeededRandom, File };

/// Complex weights with modulus at most 1 (checked to 1e-12).
class WeightSeq {
  public:
    WeightSeq(std::vector<Complex> values, WeightSource source);

    std::size_t size() const noexcept { return values_.size(); }
    Complex operator[](std::size_t i) const noexcept { return values_[i]; }
    const std::vector<Complex>& values() const noexcept { return values_; }
    WeightSource source() const noexcept { return source_; }

  private:
    std::vector<Complex> values_;
    WeightSource source_;
};

WeightSeq weights_unit(std::size_t n);
/// Independent uniform points of the closed unit disc, by rejection from the
/// square [-1,1)^2 using SplitMix64(seed).
WeightSeq weights_random(std::size_t n, std::uint64_t seed);
/// One "re im" pair per line.
WeightSeq weights_from_stream(std::istream& in);

}  // namespace recip
