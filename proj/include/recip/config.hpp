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
#include <optional>
#include <string>
#include <vector>

#include "recip/rational.hpp"

namespace recip {

/// Flat `key = value` experiment description. Lists are comma separated,
/// rationals are written n/d, `#` starts a comment. Every list key is a sweep
/// axis; commands that take a single value reject lists of length > 1.
struct ExperimentConfig {
    std::vector<std::int64_t> p;
    std::vector<std::int64_t> f;  // a_0, ..., a_d; empty means X^d
    std::vector<std::int64_t> d;
    std::vector<std::int64_t> k;
    std::vector<std::int64_t> a;
    std::vector<std::int64_t> b;
    std::vector<std::int64_t> T;
    std::vector<std::int64_t> U;
    std::vector<std::int64_t> V;
    std::vector<std::int64_t> Z;
    std::vector<std::int64_t> L;
    std::vector<std::int64_t> K;
    std::vector<std::int64_t> nu;
    std::vector<Rational> alpha;
    std::vector<Rational> beta;
    std::vector<std::string> sums;        // S, S1, T, T1, K, K1
    std::vector<std::string> quantities;  // J, N, weil, tuples, moment, census
    std::int64_t chi_order = 2;
    std::int64_t chi_index = 1;
    std::string weights = "unit";  // unit | random
    std::optional<std::uint64_t> seed;
    std::string polygon;  // path, relative to the working directory
    std::string out;
    std::optional<std::uint64_t> workcap;
    std::int64_t parallel = 1;
    std::int64_t kmax = 64;

    /// Keys explicitly present in the parsed text, in order of appearance.
    std::vector<std::string> present;

    bool has(const std::string& key) const;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Throws Error(ConfigError) naming the source and line on any problem.
ExperimentConfig parse_config(std::istream& in, const std::string& source = "<config>");
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config(const std::string& path);

/// Canonical text form; parse_config_text(emit_config(c)) == c for any
/// config that came out of the parser.
std::string emit_config(const ExperimentConfig& cfg);

/// The config's `key` must hold exactly one value; throws ConfigError naming it otherwise.
std::int64_t require_single(const std::vector<std::int64_t>& values, const std::string& key);

}  // namespace recip
