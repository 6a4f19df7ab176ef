/*
 * Copyright 2026 The qpg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qpg {

using BigInt = boost::multiprecision::cpp_int;

/// floor(log2 n) for n >= 1.
unsigned floor_log2(std::uint64_t n);
/// ceil(log2 n) for n >= 1.
unsigned ceil_log2(std::uint64_t n);

/// Exact binomial coefficient C(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Largest double not above x.
double to_double_down(const BigInt& x);

/**
 * Width of the grafted universal tree, by the recursion
 *
 *   f(0, h) = 0,  f(n, 0) = 1 (n >= 1),
 *   f(n, h) = f(n, h-1) + f(n/2, h) + f(n-1-n/2, h).
 *
 * Memoized per thread.
 */
BigInt f_rec(std::uint64_t n, std::uint64_t h);

/**
 * Closed form for n, h >= 1, with L = floor(log2 n):
 *
 *   sum_{i<L} 2^i C(h-1+i, h-1) + (n - 2^L + 1) C(h-1+L, h-1)
 */
BigInt f_explicit(std::uint64_t n, std::uint64_t h);

/// n * C(h-1+L, L), L = floor(log2 n).
BigInt bound_binomial(std::uint64_t n, std::uint64_t h);

/// Earlier bound 2^K * C(h-1+K, K), K = ceil(log2 n).
BigInt bound_old(std::uint64_t n, std::uint64_t h);

/// 1 + log2(e), the exponent constant realized for "2.45 - epsilon".
double exponent_constant();

/**
 * n^{(1 + log2 e) + log2(1 + (h-1)/log2 n)}. Throws std::domain_error for n < 2.
 */
double bound_exponential(std::uint64_t n, std::uint64_t h);

struct WidthRow
{
    std::uint64_t n = 0;
    std::uint64_t h = 0;
    BigInt f;
    BigInt binomial_bound;
    BigInt old_bound;
    /// NaN for n < 2.
    double exponential_bound = 0;
    /// old_bound / f.
    double ratio_old_new = 0;
    /// f(n, h) / f(n/2, h); infinite for n = 1.
    double ratio_half = 0;
};

struct WidthTable
{
    std::vector<WidthRow> rows;
};

/// One row per (n, h) pair, n-major. Throws std::invalid_argument on empty grids or zero entries.
WidthTable width_report(std::span<const std::uint64_t> n_values, std::span<const std::uint64_t> h_values);

inline constexpr const char* width_csv_header =
    "n,h,f,bound_binomial,bound_old,bound_exponential,ratio_old_new,ratio_half";

/// Header line, then one row per entry; integers exact, floats with 6 significant digits.
void write_csv(std::ostream& out, const WidthTable& table);

} // namespace qpg
