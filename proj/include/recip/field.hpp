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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace recip {

using Complex = std::complex<double>;

/// Field elements are canonical residues in [0, p).
using Elem = std::uint64_t;

bool is_prime(std::uint64_t n);

/// Smallest generator of (Z/pZ)^*; p must be prime.
Elem primitive_root(std::uint64_t p);

/// k in [0, p-2] with g^k = x (mod p), by baby-step giant-step.
std::uint64_t discrete_log(Elem g, Elem x, std::uint64_t p);

/// Prime field F_p with optional lookup tables.
///
/// Inverse, index and unit-root tables are built when p <= index_table_cap.
/// Above the cap, inverses come from extended Euclid and discrete logs from
/// baby-step giant-step, so every query gives the same answer either way.
class FieldContext {
  public:
    static constexpr std::uint64_t kDefaultIndexTableCap = 100000;
    static constexpr std::uint64_t kMaxModulus = 1ULL << 31;

    explicit FieldContext(std::uint64_t p, std::uint64_t index_table_cap = kDefaultIndexTableCap);

    std::uint64_t p() const noexcept { return p_; }
    Elem generator() const noexcept { return g_; }
    bool has_tables() const noexcept { return !inv_.empty(); }
    std::uint64_t index_table_cap() const noexcept { return cap_; }

    Elem reduce(std::int64_t a) const noexcept {
        const auto m = static_cast<std::int64_t>(p_);
        auto r = a % m;
        return static_cast<Elem>(r < 0 ? r + m : r);
    }
    Elem add(Elem x, Elem y) const noexcept { return (x + y) % p_; }
    Elem sub(Elem x, Elem y) const noexcept { return (x + p_ - y) % p_; }
    Elem neg(Elem x) const noexcept { return x == 0 ? 0 : p_ - x; }
    Elem mul(Elem x, Elem y) const noexcept { return (x * y) % p_; }
    Elem pow(Elem x, std::uint64_t e) const noexcept;

    /// Throws ZeroInverse for x == 0 (mod p).
    Elem inv(Elem x) const;

    /// ind_g(x) in [0, p-2] for x != 0.
    std::uint64_t index(Elem x) const;

    /// Residue congruent to a with |w| < p/2.
    std::int64_t signed_residue(std::int64_t a) const noexcept {
        const auto r = static_cast<std::int64_t>(reduce(a));
        const auto m = static_cast<std::int64_t>(p_);
        return 2 * r > m ? r - m : r;
    }

    /// exp(2 pi i r / p) for an already reduced r.
    Complex unit_root(Elem r) const noexcept;

  private:
    std::uint64_t p_;
    std::uint64_t cap_;
    Elem g_;
    std::vector<Elem> inv_;
    std::vector<std::uint32_t> ind_;
    std::vector<Complex> roots_;
};

/// x^{-1} mod p, in [1, p-1].
Elem mod_inv(Elem x, const FieldContext& ctx);

/// Distance from a to the nearest multiple of p.
std::uint64_t rho_int(std::int64_t a, const FieldContext& ctx);

/// rho of the residue u / v; throws ZeroDenominator when p | v.
std::uint64_t rho_frac(std::int64_t u, std::int64_t v, const FieldContext& ctx);

/// Additive character e_p(z) = exp(2 pi i z / p). z is reduced first, so
/// e_p(z + p) == e_p(z) bit for bit.
Complex e_p(std::int64_t z, const FieldContext& ctx);

/// Polynomial a_0 + a_1 X + ... + a_d X^d over F_p with a_d != 0.
class PolySpec {
  public:
    /// Coefficients are given lowest degree first and reduced mod p.
    /// Throws ZeroLeadingCoeff if the last coefficient vanishes mod p.
    PolySpec(std::span<const std::int64_t> coeffs, const FieldContext& ctx);
    PolySpec(std::initializer_list<std::int64_t> coeffs, const FieldContext& ctx);

    /// a*X + b.
    static PolySpec linear(std::int64_t a, std::int64_t b, const FieldContext& ctx);
    /// X^d.
    static PolySpec monomial(int d, const FieldContext& ctx);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::uint64_t modulus() const noexcept { return p_; }
    std::span<const Elem> coeffs() const noexcept { return coeffs_; }
    Elem coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

  private:
    std::vector<Elem> coeffs_;
    std::uint64_t p_;
};

/// Horner evaluation mod p.
Elem poly_eval(const PolySpec& f, Elem x, const FieldContext& ctx);

/// Multiplicative character of order dividing m, chi(g^k) = exp(2 pi i j k / m)
/// for the smallest primitive root g; chi(0) = 0.
class MultChar {
  public:
    /// Requires m | p - 1, m >= 2 and 1 <= j <= m - 1.
    MultChar(const FieldContext& ctx, std::uint64_t order, std::uint64_t index);

    static MultChar quadratic(const FieldContext& ctx) { return MultChar(ctx, 2, 1); }

    std::uint64_t modulus() const noexcept { return p_; }
    std::uint64_t order() const noexcept { return m_; }
    std::uint64_t char_index() const noexcept { return j_; }

    Complex operator()(Elem x) const;

  private:
    std::uint64_t p_;
    std::uint64_t m_;
    std::uint64_t j_;
    Elem g_;
    std::vector<Complex> table_;  // empty above the context's table cap
};

Complex chi_eval(const MultChar& chi, Elem x);

/// Streaming pairwise (cascade) summation. For a fixed sequence of terms the
/// result is deterministic and the rounding error grows like O(log n).
class PairwiseSum {
  public:
    void add(Complex x);
    Complex result() const;
    std::uint64_t count() const noexcept { return n_; }

  private:
    static constexpr std::size_t kBlock = 16;
    Complex block_{};
    std::size_t in_block_ = 0;
    std::uint64_t n_ = 0;
    std::vector<Complex> levels_;
    std::vector<bool> occupied_;
};

Complex pairwise_sum(std::span<const Complex> terms);

}  // namespace recip
