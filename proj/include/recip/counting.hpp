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
#include <span>
#include <vector>

#include "recip/field.hpp"

namespace recip {

struct CountReport {
    std::uint64_t count = 0;
    double bound_rhs = 0;  // bound right-hand side without the p^{o(1)} factor
    double ratio = 0;      // count / bound_rhs
};

/// Dense histogram over F_p.
struct Histogram {
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const noexcept;
    /// sum of squared counts
    std::uint64_t energy() const;
};

/// Work limits for the exhaustive counters. RECIP_SUMS_WORKCAP, when set,
/// replaces max_states.
struct WorkCaps {
    std::uint64_t max_states = 1'000'000'000;  // enumeration states / inner-loop steps
    std::uint64_t conv_max_p = 100'000;        // dense histograms without transforms

    static WorkCaps from_env();
};

const WorkCaps& default_caps();

/// Primes in [lo, hi] by sieve.
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

/// J_{d,k}(a, b; T) by enumerating every 2k-tuple t in [1, T]^{2k} with
/// sum_j (-1)^j (a t_j + b)^{-d} == 0. Values of t with a t + b == 0 are left
/// out of the range.
CountReport count_J_naive(int d, int k, std::int64_t a, std::int64_t b, std::int64_t T, const FieldContext& ctx,
                          const WorkCaps& caps = default_caps());

/// Same count as count_J_naive via the k-fold cyclic convolution R_k of the
/// histogram of (a t + b)^{-d}: J = sum_x R_k(x)^2.
CountReport count_J_conv(int d, int k, std::int64_t a, std::int64_t b, std::int64_t T, const FieldContext& ctx,
                         const WorkCaps& caps = default_caps());

/// Right-hand side used for J reports (sharper form for d = 1, k = 2).
double J_bound_rhs(int d, int k, double T, double p);

/// N_f(U, Z) = #{(u, z) in [1,U] x [1,Z] : f(u) z == 1}, in O(U).
CountReport count_N(const PolySpec& f, std::int64_t U, std::int64_t Z, const FieldContext& ctx);

/// I(lambda) = #{(l, u, v) : l prime in [L, 2L], 1 <= u <= r.size(), 1 <= v <= V,
///               (v + r_u) / l == lambda}.
Histogram count_I_lambda(std::span<const Elem> r, std::int64_t L, std::int64_t V, const FieldContext& ctx);

/// N = sum_lambda I(lambda)^2, reported against L U^2 V.
CountReport count_N_tuples(std::span<const Elem> r, std::int64_t L, std::int64_t V, const FieldContext& ctx);

/// sum over lambda in F_p of |sum_{k=1}^{K} chi(lambda + k)|^{2 nu}.
double char_moment(const MultChar& chi, std::int64_t K, int nu, const FieldContext& ctx);

/// Dyadic census of rho(1 / f(u)) over 1 <= u <= U.
///
/// With I = floor(ln(2p/V)) and J = floor(ln 2p): R counts rho < e^I, Q[j - I - 1]
/// counts e^j <= rho < e^{j+1} for I < j <= J, and `band_I` counts the band
/// e^I <= rho < e^{I+1} that lies between them, so that
/// R + band_I + sum Q + excluded == U.
struct RhoCensus {
    int I = 0;
    int J = 0;
    std::uint64_t R = 0;
    std::uint64_t band_I = 0;
    std::vector<std::uint64_t> Q;
    std::uint64_t excluded = 0;

    std::uint64_t total() const noexcept;
};

RhoCensus rho_census(const PolySpec& f, std::int64_t U, std::int64_t V, const FieldContext& ctx);

/// max over b in F_p and 1 <= Z < p of |#{(u, z) : r_u == b + z, z <= Z} - U Z / p| / U.
double discrepancy(std::span<const Elem> r, const FieldContext& ctx);

}  // namespace recip
