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

#include <qpg/width_formulas.hpp>

#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

namespace qpg {

unsigned
floor_log2(std::uint64_t n)
{
    if (n == 0) throw std::domain_error("floor_log2(0)");
    return static_cast<unsigned>(std::bit_width(n) - 1);
}

unsigned
ceil_log2(std::uint64_t n)
{
    if (n == 0) throw std::domain_error("ceil_log2(0)");
    return static_cast<unsigned>(std::bit_width(n - 1));
}

BigInt
binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    // r stays C(n-k+i, i) after step i, so each division is exact
    for (std::uint64_t i = 1; i <= k; i++) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

double
to_double_down(const BigInt& x)
{
    double d = x.convert_to<double>();
    if (std::isinf(d)) return std::numeric_limits<double>::max();
    while (BigInt(d) > x) d = std::nextafter(d, -std::numeric_limits<double>::infinity());
    return d;
}

BigInt
f_rec(std::uint64_t n, std::uint64_t h)
{
    thread_local std::map<std::pair<std::uint64_t, std::uint64_t>, BigInt> memo;
    if (n == 0) return 0;
    if (h == 0) return 1;
    auto key = std::make_pair(n, h);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt v = f_rec(n, h - 1) + f_rec(n / 2, h) + f_rec(n - 1 - n / 2, h);
    memo.emplace(key, v);
    return v;
}

BigInt
f_explicit(std::uint64_t n, std::uint64_t h)
{
    if (n < 1 || h < 1) throw std::domain_error("f_explicit needs n, h >= 1");
    const unsigned L = floor_log2(n);
    BigInt sum = 0;
    for (unsigned i = 0; i < L; i++) {
        sum += (BigInt(1) << i) * binomial(h - 1 + i, h - 1);
    }
    sum += BigInt(n - (std::uint64_t{1} << L) + 1) * binomial(h - 1 + L, h - 1);
    return sum;
}

BigInt
bound_binomial(std::uint64_t n, std::uint64_t h)
{
    if (n < 1 || h < 1) throw std::domain_error("bound_binomial needs n, h >= 1");
    const unsigned L = floor_log2(n);
    return BigInt(n) * binomial(h - 1 + L, L);
}

BigInt
bound_old(std::uint64_t n, std::uint64_t h)
{
    if (n < 1 || h < 1) throw std::domain_error("bound_old needs n, h >= 1");
    const unsigned K = ceil_log2(n);
    return (BigInt(1) << K) * binomial(h - 1 + K, K);
}

double
exponent_constant()
{
    return 1.0 + std::numbers::log2e;
}

double
bound_exponential(std::uint64_t n, std::uint64_t h)
{
    if (n < 2) throw std::domain_error("bound_exponential needs n >= 2");
    if (h < 1) throw std::domain_error("bound_exponential needs h >= 1");
    const double lg = std::log2(static_cast<double>(n));
    const double exponent = exponent_constant() + std::log2(1.0 + static_cast<double>(h - 1) / lg);
    return std::pow(static_cast<double>(n), exponent);
}

namespace {

double
ratio(const BigInt& num, const BigInt& den)
{
    if (den == 0) return std::numeric_limits<double>::infinity();
    using boost::multiprecision::cpp_rational;
    return cpp_rational(num, den).convert_to<double>();
}

std::string
fmt6(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

} // namespace

WidthTable
width_report(std::span<const std::uint64_t> n_values, std::span<const std::uint64_t> h_values)
{
    if (n_values.empty() || h_values.empty()) throw std::invalid_argument("width_report: empty grid");
    WidthTable table;
    for (auto n : n_values) {
        for (auto h : h_values) {
            if (n < 1 || h < 1) throw std::invalid_argument("width_report: n and h must be positive");
            WidthRow row;
            row.n = n;
            row.h = h;
            row.f = f_explicit(n, h);
            row.binomial_bound = bound_binomial(n, h);
            row.old_bound = bound_old(n, h);
            row.exponential_bound = n >= 2 ? bound_exponential(n, h) : std::numeric_limits<double>::quiet_NaN();
            row.ratio_old_new = ratio(row.old_bound, row.f);
            row.ratio_half = ratio(row.f, f_rec(n / 2, h));
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

void
write_csv(std::ostream& out, const WidthTable& table)
{
    out << width_csv_header << '\n';
    for (const auto& r : table.rows) {
        out << r.n << ',' << r.h << ',' << r.f << ',' << r.binomial_bound << ',' << r.old_bound << ','
            << fmt6(r.exponential_bound) << ',' << fmt6(r.ratio_old_new) << ',' << fmt6(r.ratio_half) << '\n';
    }
}

} // namespace qpg
