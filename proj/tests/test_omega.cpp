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

#include <random>

#include "test_support.hpp"
#include "yangian/errors.hpp"
#include "yangian/omega.hpp"

using namespace yangian;

TEST_CASE("multiply on basis elements") {
    auto c2 = direct_sum_C(2);
    auto u1 = OmegaElement::basis(c2, 0);
    auto u2 = OmegaElement::basis(c2, 1);
    CHECK(multiply(u1, u1) == u1);
    CHECK(multiply(u1, u2).is_zero());

    auto m2 = matrix_algebra(2);
    // basis E11, E12, E21, E22
    CHECK(multiply(OmegaElement::basis(m2, 0), OmegaElement::basis(m2, 1)) == OmegaElement::basis(m2, 1));
    CHECK_THROWS_AS(multiply(u1, OmegaElement::basis(m2, 0)), StructuralError);
}

TEST_CASE("associativity checks") {
    CHECK_FALSE(check_associativity(*direct_sum_C(3)));
    CHECK_FALSE(check_associativity(*matrix_algebra(2)));
    CHECK_FALSE(check_associativity(*null_algebra(3)));
    // (xx)x = yx = 0, x(xx) = xy = x
    auto w = check_associativity(*nonassoc_witness());
    REQUIRE(w);
    CHECK(*w == std::array<int, 3>{0, 0, 0});
}

TEST_CASE("unit detection") {
    auto c2 = direct_sum_C(2);
    auto e = detect_unit(c2);
    REQUIRE(e);
    CHECK(*e == OmegaElement::basis(c2, 0) + OmegaElement::basis(c2, 1));
    CHECK_FALSE(detect_unit(null_algebra(1)));
    auto m2 = matrix_algebra(2);
    auto e2 = detect_unit(m2);
    REQUIRE(e2);
    CHECK(*e2 == OmegaElement::basis(m2, 0) + OmegaElement::basis(m2, 3));
    for (int l = 1; l <= 4; ++l) {
        auto cl = direct_sum_C(l);
        auto unit = detect_unit(cl);
        REQUIRE(unit);
        CHECK(unit->coeffs().size() == static_cast<std::size_t>(l));
        for (const auto& [k, c] : unit->coeffs()) CHECK(c.is_one());
    }
}

TEST_CASE("builtins") {
    CHECK(direct_sum_C(2)->dim() == 2);
    CHECK(matrix_algebra(2)->dim() == 4);
    CHECK(null_algebra(3)->entries().empty());
    CHECK_THROWS_AS(direct_sum_C(0), StructuralError);
    CHECK_THROWS_AS(matrix_algebra(-1), StructuralError);
    CHECK((*builtin("direct_sum_C(2)"))->dim() == 2);
    CHECK((*builtin("Mat(2)"))->dim() == 4);
    CHECK((*builtin("null:2"))->dim() == 2);
    CHECK((*builtin("C"))->dim() == 1);
    CHECK_FALSE(builtin("quaternions"));
}

TEST_CASE("multiply is bilinear") {
    std::mt19937_64 rng(11);
    for (auto spec : {direct_sum_C(3), matrix_algebra(2), nonassoc_witness()}) {
        for (int t = 0; t < 50; ++t) {
            OmegaElement a(spec, testing::random_basis_vector(rng, spec->dim()));
            OmegaElement b(spec, testing::random_basis_vector(rng, spec->dim()));
            OmegaElement c(spec, testing::random_basis_vector(rng, spec->dim()));
            Rational alpha = testing::random_rational(rng);
            CHECK(multiply(alpha * a + b, c) == alpha * multiply(a, c) + multiply(b, c));
            CHECK(multiply(c, alpha * a + b) == alpha * multiply(c, a) + multiply(c, b));
        }
    }
}

TEST_CASE("json round trip and diagnostics") {
    auto m2 = matrix_algebra(2);
    auto back = parse_omega_json(to_json(*m2));
    CHECK(back->labels() == m2->labels());
    CHECK(back->entries().size() == m2->entries().size());
    CHECK_FALSE(check_associativity(*back));

    auto sparse = parse_omega_json(R"({"dim": 2, "basis": ["u1", "u2"],
        "table": [{"i": 0, "j": 0, "terms": [{"k": 0, "num": 1, "den": 1}]}]})");
    CHECK(sparse->product(1, 1).is_zero());
    CHECK(sparse->product(0, 0) == BasisVector(0));

    try {
        parse_omega_json(R"({"dim": 2, "table": [{"i": 0, "j": 0, "terms": [{"k": 5, "num": 1, "den": 1}]}]})");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("table[0].terms[0].k") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_omega_json("{"), ParseError);
    CHECK_THROWS_AS(parse_omega_json(R"({"dim": 0})"), ParseError);
    CHECK_THROWS_AS(parse_omega_json(R"({"dim": 2, "basis": ["a", "a"]})"), ParseError);
}
