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
#include <functional>
#include <string>
#include <vector>

#include "recip/field.hpp"
#include "recip/regions.hpp"
#include "recip/rng.hpp"

namespace recip {

enum class VerifyLevel { Quick, Full };

VerifyLevel parse_level(const std::string& s);

struct SuiteResult {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string first_failure;
    std::string note;  // empirical extremes worth printing
    double seconds = 0;
};

struct VerifyReport {
    std::vector<SuiteResult> suites;
    bool ok() const noexcept;
    std::string render(bool with_counts) const;
};

// Substitution points for mutation testing.
struct VerifyHooks {
    std::function<Complex(std::int64_t, const FieldContext&)> additive = e_p;
};

/// Convex hull of a few random half-integer points in [0,U]x[0,V]; always
/// at least a triangle.
std::vector<Vertex> random_convex_polygon(SplitMix64& rng, std::int64_t U, std::int64_t V);

VerifyReport run_verify(VerifyLevel level, const VerifyHooks& hooks = {});

}  // namespace recip
