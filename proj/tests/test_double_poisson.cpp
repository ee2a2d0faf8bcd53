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
#include "yangian/double_poisson.hpp"
#include "yangian/errors.hpp"

using namespace yangian;

namespace {

DoubleTensor dt(const Word& u, const Word& v, const Rational& c = Rational(1)) { return DoubleTensor(WordPair{u, v}, c); }

// Eq (5.A) on letters with mu = the algebra product.
DoubleTensor letter_formula(const AlgebraSpec& omega, int x, int y) {
    DoubleTensor out;
    for (const auto& [k, c] : omega.product(x, y)) out.add(WordPair{Word{}, Word{k}}, c);
    for (const auto& [k, c] : omega.product(y, x)) out.add(WordPair{Word{k}, Word{}}, -c);
    return out;
}

}  // namespace

TEST_CASE("double bracket on letters and units") {
    for (auto omega : {direct_sum_C(2), matrix_algebra(2), nonassoc_witness(), null_algebra(2)}) {
        for (int x = 0; x < omega->dim(); ++x)
            for (int y = 0; y < omega->dim(); ++y) CHECK(double_bracket(*omega, Word{x}, Word{y}) == letter_formula(*omega, x, y));
        CHECK(double_bracket(*omega, Word{}, Word{0}).is_zero());
        CHECK(double_bracket(*omega, Word{0, 0}, Word{}).is_zero());
    }
    auto c2 = direct_sum_C(2);
    CHECK(double_bracket(*c2, Word{0}, Word{1}).is_zero());
    // x = y: 1 (x) x^2 - x^2 (x) 1
    CHECK(double_bracket(*c2, Word{0}, Word{0}) == dt({}, {0}) - dt({0}, {}));
}

TEST_CASE("m = 1, n = 2 instance of the bracket formula") {
    auto m2 = matrix_algebra(2);
    // x = E11, y = (E12, E21): 1 (x) (x y1, y2) + y1 (x) (x y2) - (y1 x) (x) y2 - (y1, y2 x) (x) 1
    // x y1 = E12, x y2 = 0, y1 x = 0, y2 x = E21
    DoubleTensor expected = dt({}, {1, 2}) - dt({1, 2}, {});
    CHECK(double_bracket(*m2, Word{0}, Word{1, 2}) == expected);
}

TEST_CASE("skew symmetry, Leibniz and double Jacobi for associative algebras") {
    for (auto omega : {direct_sum_C(1), direct_sum_C(2), null_algebra(2)}) {
        CHECK_FALSE(check_skew(*omega, 3));
        CHECK_FALSE(check_leibniz(*omega, 3));
        CHECK_FALSE(check_double_jacobi(*omega, 2));
    }
    auto m2 = matrix_algebra(2);
    CHECK_FALSE(check_skew(*m2, 2));
    CHECK_FALSE(check_leibniz(*m2, 2));
    CHECK_FALSE(check_double_jacobi(*m2, 1));
}

TEST_CASE("double Jacobi detects non-associativity") {
    auto w = nonassoc_witness();
    auto witness = check_double_jacobi(*w, 1);
    REQUIRE(witness);
    CHECK(*witness == WordTriple{Word{0}, Word{0}, Word{0}});
    CHECK_FALSE(double_jacobi(*w, {0}, {0}, {0}).is_zero());
    // skew symmetry and Leibniz hold for any table
    CHECK_FALSE(check_skew(*w, 2));
    CHECK_FALSE(check_leibniz(*w, 2));
    auto r = pvdw_equivalence(*w, 1);
    CHECK(r.associativity_witness);
    CHECK(r.jacobi_witness);
    CHECK(r.agree());
}

TEST_CASE("pvdw equivalence on a fuzz corpus") {
    auto tables = fuzz_tables(2024, 50);
    REQUIRE(tables.size() == 50);
    int associative = 0;
    for (const auto& t : tables) {
        auto r = pvdw_equivalence(*t, 2);
        CHECK_MESSAGE(r.agree(), t->name());
        if (!r.associativity_witness) ++associative;
    }
    CHECK(associative >= 20);
    CHECK(associative <= 40);
    CHECK(pvdw_equivalence(*direct_sum_C(3), 1).agree());
    CHECK(pvdw_equivalence(*null_algebra(2), 2).agree());
    CHECK_FALSE(pvdw_equivalence(*null_algebra(2), 2).jacobi_witness);
}

TEST_CASE("poisson bracket on S(M_d)") {
    auto c2 = direct_sum_C(2);
    auto m2 = matrix_algebra(2);
    // letters: delta_kj p_il(xy) - delta_il p_kj(yx)
    for (auto omega : {c2, m2}) {
        for (int x = 0; x < omega->dim(); ++x)
            for (int y = 0; y < omega->dim(); ++y)
                for (int i = 1; i <= 2; ++i)
                    for (int j = 1; j <= 2; ++j)
                        for (int k = 1; k <= 2; ++k)
                            for (int l = 1; l <= 2; ++l) {
                                SPoly expected;
                                if (k == j)
                                    for (const auto& [b, c] : omega->product(x, y)) expected.add(PMonomial{PGen{i, l, {b}}}, c);
                                if (i == l)
                                    for (const auto& [b, c] : omega->product(y, x)) expected.add(PMonomial{PGen{k, j, {b}}}, -c);
                                CHECK(poisson_smd(*omega, 2, PGen{i, j, {x}}, PGen{k, l, {y}}) == expected);
                            }
    }
    auto c1 = direct_sum_C(1);
    CHECK(poisson_smd(*c1, 1, PGen{1, 1, {0}}, PGen{1, 1, {0}}).is_zero());
    CHECK_THROWS_AS(poisson_smd(*c1, 1, PGen{1, 2, {0}}, PGen{1, 1, {0}}), StructuralError);
}

TEST_CASE("poisson bracket on S(M_d) is antisymmetric and satisfies Jacobi") {
    for (auto omega : {direct_sum_C(1), direct_sum_C(2)}) {
        for (int d = 1; d <= 2; ++d) {
            std::vector<SPoly> gens;
            for (int i = 1; i <= d; ++i)
                for (int j = 1; j <= d; ++j)
                    for (const auto& w : all_words_up_to(omega->dim(), 1, 2)) gens.push_back(p_poly(PGen{i, j, w}));
            for (const auto& f : gens)
                for (const auto& g : gens) CHECK(poisson_smd(*omega, d, f, g) == -poisson_smd(*omega, d, g, f));
            const std::size_t stride = omega->dim() == 1 ? 1 : 5;
            for (std::size_t a = 0; a < gens.size(); a += 1)
                for (std::size_t b = 0; b < gens.size(); b += stride)
                    for (std::size_t c = 0; c < gens.size(); c += stride) {
                        const auto& f = gens[a];
                        const auto& g = gens[b];
                        const auto& h = gens[c];
                        SPoly jac = poisson_smd(*omega, d, f, poisson_smd(*omega, d, g, h)) +
                                    poisson_smd(*omega, d, g, poisson_smd(*omega, d, h, f)) +
                                    poisson_smd(*omega, d, h, poisson_smd(*omega, d, f, g));
                        CHECK(jac.is_zero());
                    }
        }
    }
}

TEST_CASE("trace bracket") {
    auto c2 = direct_sum_C(2);
    CHECK(trace_bracket(*c2, Word{0}, Word{1}).is_zero());
    CHECK(trace_bracket(*c2, Word{0}, Word{0}).is_zero());
    auto m2 = matrix_algebra(2);
    CHECK(trace_bracket(*m2, Word{0}, Word{1}) == CyclicElement(CyclicWord{{1}}));

    std::mt19937_64 rng(59);
    for (auto omega : {c2, m2}) {
        for (int t = 0; t < 30; ++t) {
            Word a = testing::random_word(rng, omega->dim(), 1, 3);
            Word b = testing::random_word(rng, omega->dim(), 1, 3);
            const CyclicElement base = trace_bracket(*omega, a, b);
            Word ra = a;
            std::rotate(ra.begin(), ra.begin() + 1, ra.end());
            Word rb = b;
            std::rotate(rb.begin(), rb.end() - 1, rb.end());
            CHECK(trace_bracket(*omega, ra, rb) == base);
            CHECK(trace_bracket(*omega, b, a) == -base);
        }
    }
}

TEST_CASE("necklace Poisson bracket") {
    auto m2 = matrix_algebra(2);
    NecklacePoly one(NMonomial{});
    NecklacePoly f = n_poly(cyclic_canonical({0, 1}));
    CHECK(poisson_stc(*m2, f, one).is_zero());
    NecklacePoly g = n_poly(cyclic_canonical({2}));
    NecklacePoly expected;
    for (const auto& [c, k] : trace_bracket(*m2, Word{0, 1}, Word{2})) expected.add(NMonomial{c}, k);
    CHECK(poisson_stc(*m2, f, g) == expected);

    std::mt19937_64 rng(61);
    for (auto omega : {direct_sum_C(2), m2}) {
        auto random_poly = [&]() {
            NecklacePoly p;
            std::uniform_int_distribution<int> factors(1, 2);
            for (int t = 0; t < 2; ++t) {
                NecklacePoly mono(NMonomial{});
                const int nf = factors(rng);
                for (int a = 0; a < nf; ++a) mono = multiply(mono, n_poly(cyclic_canonical(testing::random_word(rng, omega->dim(), 1, 2))));
                p.add_scaled(mono, testing::random_rational(rng));
            }
            return p;
        };
        for (int t = 0; t < 15; ++t) {
            auto a = random_poly();
            auto b = random_poly();
            auto c = random_poly();
            CHECK(poisson_stc(*omega, a, b) == -poisson_stc(*omega, b, a));
            NecklacePoly jac = poisson_stc(*omega, a, poisson_stc(*omega, b, c)) + poisson_stc(*omega, b, poisson_stc(*omega, c, a)) +
                               poisson_stc(*omega, c, poisson_stc(*omega, a, b));
            CHECK(jac.is_zero());
        }
    }
}

TEST_CASE("symbols of commutators on S(M_d)") {
    auto c1 = direct_sum_C(1);
    auto c2 = direct_sum_C(2);
    CHECK(symbol_match_smd(1, 1, 1, 1, {0}, {0}, c1, 1, Rational(0), 3).status == Stabilization::match);
    CHECK(symbol_match_smd(1, 2, 2, 1, {0}, {0}, c1, 2, Rational(0), 3).status == Stabilization::match);
    CHECK(symbol_match_smd(1, 1, 1, 2, {0, 1}, {1}, c2, 2, Rational(1), 4).status == Stabilization::match);
    CHECK(symbol_match_smd(2, 1, 1, 2, {0, 0}, {0}, c1, 2, Rational(-1), 4).status == Stabilization::match);

    // both sides of the comparison are nonzero
    CHECK_FALSE(poisson_smd(*c2, 2, p_poly(PGen{1, 1, {0, 1}}), p_poly(PGen{1, 2, {1}})).is_zero());
    Evaluator ev(GlContext(c2, 4), 2);
    const UElement a = ev.generator(TGen{1, 1, {0, 1}, Rational(1)});
    const UElement b = ev.generator(TGen{1, 2, {1}, Rational(1)});
    CHECK_FALSE(commutator(a, b).is_zero());
}

TEST_CASE("symbols of commutators on S(Tc+)") {
    CHECK(symbol_match_stc({0}, {0}, direct_sum_C(1), 3).status == Stabilization::match);
    CHECK(symbol_match_stc({0}, {1}, matrix_algebra(2), 3).status == Stabilization::match);
    CHECK(symbol_match_stc({0, 1}, {2, 3}, matrix_algebra(2), 3).status == Stabilization::match);
    CHECK(symbol_match_stc({0, 1}, {1}, null_algebra(2), 3).status == Stabilization::match);
    auto m2 = matrix_algebra(2);
    CHECK_FALSE(trace_bracket(*m2, Word{0}, Word{1}).is_zero());
    GlContext mctx(m2, 3);
    CHECK_FALSE(commutator(trace_element(mctx, {0}), trace_element(mctx, {1})).is_zero());
    GlContext ctx(null_algebra(2), 3);
    CHECK(commutator(trace_element(ctx, {0, 1}), trace_element(ctx, {1})).is_zero());
}
