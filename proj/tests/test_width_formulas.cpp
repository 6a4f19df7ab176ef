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

#include <doctest.h>

#include <qpg/width_formulas.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <sstream>
#include <thread>

using namespace qpg;

TEST_CASE("logarithms and binomials")
{
    CHECK(floor_log2(1) == 0);
    CHECK(floor_log2(7) == 2);
    CHECK(floor_log2(8) == 3);
    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(7) == 3);
    CHECK(ceil_log2(8) == 3);
    CHECK(ceil_log2(100) == 7);

    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(11, 3) == 165);
    CHECK(binomial(10, 2) == 45);
    // Pascal's rule beyond 64-bit range
    for (std::uint64_t n = 1; n < 140; n += 7) {
        for (std::uint64_t k = 1; k < n; k += 3) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
    CHECK(binomial(100, 50) > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("f_rec base cases and small values")
{
    CHECK(f_rec(0, 7) == 0);
    CHECK(f_rec(0, 0) == 0);
    CHECK(f_rec(5, 0) == 1);
    // hand unrolled: f(3,2) = f(3,1) + f(1,2) + f(1,2) = 3 + 1 + 1
    CHECK(f_rec(3, 2) == 5);
    // f(4,2) = f(4,1) + f(2,2) + f(1,2) = 4 + (2 + 1 + 0) + 1
    CHECK(f_rec(4, 2) == 8);
    for (std::uint64_t n = 1; n < 50; n++) CHECK(f_rec(n, 1) == n);
    for (std::uint64_t h = 0; h < 30; h++) CHECK(f_rec(1, h) == 1);
}

TEST_CASE("explicit formula")
{
    CHECK(f_explicit(3, 2) == 5);
    CHECK(f_explicit(4, 2) == 8);
    for (std::uint64_t n = 1; n <= 128; n++) {
        for (std::uint64_t h = 1; h <= 8; h++) CHECK(f_explicit(n, h) == f_rec(n, h));
    }
    CHECK_THROWS_AS(f_explicit(0, 3), std::domain_error);
    CHECK_THROWS_AS(f_explicit(3, 0), std::domain_error);
}

TEST_CASE("f is monotone in n and in h")
{
    for (std::uint64_t n = 1; n <= 100; n++) {
        for (std::uint64_t h = 1; h <= 10; h++) {
            CHECK(f_rec(n, h) <= f_rec(n + 1, h));
            CHECK(f_rec(n, h) <= f_rec(n, h + 1));
        }
    }
}

TEST_CASE("binomial and old bounds")
{
    CHECK(bound_binomial(3, 2) == 6);
    CHECK(bound_binomial(5, 9) == 225);
    CHECK(bound_old(5, 9) == 1320);
    CHECK(bound_old(3, 2) == 12);
    for (std::uint64_t h = 1; h < 40; h++) CHECK(bound_binomial(1, h) == 1);

    // powers of two: the two bounds coincide
    for (unsigned k = 0; k < 12; k++) {
        for (std::uint64_t h = 1; h < 20; h++) CHECK(bound_old(1u << k, h) == bound_binomial(1u << k, h));
    }
    // otherwise the binomial coefficients differ by (h-1+K)/K, K = ceil(log2 n)
    for (std::uint64_t n = 3; n < 300; n++) {
        if ((n & (n - 1)) == 0) continue;
        const unsigned K = ceil_log2(n);
        for (std::uint64_t h = 1; h < 30; h++) {
            BigInt old_c = binomial(h - 1 + K, K);
            BigInt new_c = binomial(h - 2 + K, K - 1);
            CHECK(old_c * K == new_c * (h - 1 + K));
        }
    }
    for (std::uint64_t n = 1; n <= 256; n++) {
        for (std::uint64_t h = 1; h <= 12; h++) {
            CHECK(f_explicit(n, h) <= bound_binomial(n, h));
            CHECK(bound_binomial(n, h) <= bound_old(n, h));
        }
    }
}

TEST_CASE("exponential bound")
{
    CHECK(exponent_constant() == doctest::Approx(2.442695).epsilon(1e-6));
    CHECK(exponent_constant() < 2.45);
    CHECK(bound_exponential(2, 1) == doctest::Approx(std::pow(2.0, exponent_constant())));
    CHECK(bound_exponential(2, 1) == doctest::Approx(5.4366).epsilon(1e-4));
    for (std::uint64_t n = 2; n < 600; n += 13) CHECK(bound_exponential(n, 1) >= static_cast<double>(n));
    CHECK_THROWS_AS(bound_exponential(1, 3), std::domain_error);
    CHECK(to_double_down(BigInt(5)) == 5.0);
    BigInt big = (BigInt(1) << 80) + 1;
    CHECK(BigInt(to_double_down(big)) <= big);
}

TEST_CASE("bound ratio grows linearly in h")
{
    // old/new = (2^K / n) * (h-1+K)/K for n = 100, K = 7: slope 1.28/7 per unit h
    const std::uint64_t n = 100;
    std::vector<double> xs, ys;
    for (std::uint64_t h = 32; h <= 256; h++) {
        using boost::multiprecision::cpp_rational;
        xs.push_back(static_cast<double>(h));
        ys.push_back(cpp_rational(bound_old(n, h), bound_binomial(n, h)).convert_to<double>());
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); i++) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= xs.size();
    my /= ys.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); i++) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    const double slope = sxy / sxx;
    CHECK(slope == doctest::Approx(128.0 / 100.0 / 7.0).epsilon(1e-9));
    // the binomial part alone has slope exactly 1/K
    CHECK(slope * 100.0 / 128.0 == doctest::Approx(1.0 / 7.0).epsilon(1e-9));
}

TEST_CASE("width report and CSV")
{
    std::vector<std::uint64_t> ns{3}, hs{2};
    auto table = width_report(ns, hs);
    REQUIRE(table.rows.size() == 1);
    const auto& r = table.rows[0];
    CHECK(r.f == 5);
    CHECK(r.binomial_bound == 6);
    CHECK(r.old_bound == 12);
    CHECK(r.ratio_old_new == doctest::Approx(2.4));
    CHECK(r.ratio_half == doctest::Approx(5.0));

    std::ostringstream csv;
    std::vector<std::uint64_t> ns2{1, 5}, hs2{9};
    write_csv(csv, width_report(ns2, hs2));
    std::istringstream lines(csv.str());
    std::string header, row1, row5;
    std::getline(lines, header);
    std::getline(lines, row1);
    std::getline(lines, row5);
    CHECK(header == "n,h,f,bound_binomial,bound_old,bound_exponential,ratio_old_new,ratio_half");
    CHECK(row1 == "1,9,1,1,1,nan,1,inf");
    CHECK(row5.rfind("5,9,", 0) == 0);
    CHECK(row5.find(",225,1320,") != std::string::npos);

    std::vector<std::uint64_t> empty;
    CHECK_THROWS_AS(width_report(empty, hs), std::invalid_argument);
    std::vector<std::uint64_t> zero{0};
    CHECK_THROWS_AS(width_report(zero, hs), std::invalid_argument);
}

TEST_CASE("halving ratio is monotone in h")
{
    std::vector<std::uint64_t> ns{1024}, hs;
    for (std::uint64_t h = 1; h <= 64; h++) hs.push_back(h);
    auto table = width_report(ns, hs);
    for (std::size_t i = 1; i < table.rows.size(); i++) CHECK(table.rows[i].ratio_half >= table.rows[i - 1].ratio_half);
}

TEST_CASE("f_rec is consistent across threads")
{
    std::vector<BigInt> got(4);
    std::vector<std::thread> ts;
    for (int i = 0; i < 4; i++) ts.emplace_back([&, i] { got[i] = f_rec(200 + i, 10); });
    for (auto& t : ts) t.join();
    for (int i = 0; i < 4; i++) CHECK(got[i] == f_explicit(200 + i, 10));
}
