/* Copyright 2026 The yangian-omega Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
#include <doctest.h>

#include <limits>
#include <random>

#include "yangian/rational.hpp"

using yangian::Rational;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, -7) == Rational(0));
    CHECK(Rational(-1, 2).to_string() == "-1/2");
    CHECK(Rational::parse("5/2") == Rational(5, 2));
    CHECK(Rational::parse("-1") == Rational(-1));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational overflow promotes to arbitrary precision") {
    const Rational big(std::numeric_limits<long long>::max());
    Rational sq = big * big;
    CHECK(sq / big == big);
    CHECK((sq - sq).is_zero());
    CHECK(sq > big);
    Rational back = sq / big / big;
    CHECK(back.is_one());
    CHECK(back.numerator_i64() == 1);
    CHECK(Rational(2).pow(100) / Rational(2).pow(99) == Rational(2));
    CHECK(Rational(0).pow(0) == Rational(1));
}

TEST_CASE("rational field axioms on random values") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> dist(-(1LL << 40), 1LL << 40);
    for (int t = 0; t < 500; ++t) {
        Rational a(dist(rng), dist(rng) | 1);
        Rational b(dist(rng), dist(rng) | 1);
        Rational c(dist(rng), dist(rng) | 1);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(((a < b) || (b < a) || (a == b)));
    }
}
