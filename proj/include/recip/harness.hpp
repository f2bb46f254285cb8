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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "recip/bounds.hpp"
#include "recip/config.hpp"

namespace recip {

struct RunOptions {
    std::optional<std::uint64_t> seed;  // overrides the config's seed
    std::int64_t parallel = 0;          // 0: take the config's value
    bool timing = false;                // fill the wall_ms column
};

struct TableCompareResult {
    std::string rendered;  // human-readable table
    std::string csv;
    std::vector<std::string> mismatches;  // against the published rows, computed with the same k_max
    int exit_code = 0;
};

/// Renders the comparison table for `points` (default: the three published
/// rows). The exit code is 0 iff the published rows reproduce at `k_max`.
TableCompareResult cmd_table_compare(const std::vector<std::pair<Rational, Rational>>& points, int k_max);

/// "a:b;c:d" -> {(a, b), (c, d)} with rational entries.
std::vector<std::pair<Rational, Rational>> parse_points(const std::string& text);

/// One CSV row per requested sum (S, S1, T, T1, K, K1) at a single (p, U, V).
std::string cmd_eval(const ExperimentConfig& cfg, const RunOptions& opts = {});

/// Counting quantities (J, N, weil, tuples, moment, census) over the cartesian
/// product of the relevant axes.
std::string cmd_count(const ExperimentConfig& cfg, const RunOptions& opts = {});

/// Sum evaluations over the (p, d, U|alpha, V|beta) grid; rows in
/// lexicographic axis order independent of the worker count.
std::string cmd_sweep(const ExperimentConfig& cfg, const RunOptions& opts = {});

/// Coefficient shrinking for f over the (p, U) grid.
std::string cmd_pigeonhole(const ExperimentConfig& cfg, const RunOptions& opts = {});

/// Discrepancy of r_u = f(u), u = 1..U, over the (p, U) grid.
std::string cmd_discrepancy(const ExperimentConfig& cfg, const RunOptions& opts = {});

/// floor(p^alpha) clamped to [1, p - 1].
std::int64_t scale_from_exponent(std::int64_t p, const Rational& alpha);

}  // namespace recip
