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

#include <functional>
#include <random>

#include "test_support.hpp"
#include "yangian/errors.hpp"
#include "yangian/yangian.hpp"

using namespace yangian;

namespace {

TGen random_tgen(std::mt19937_64& rng, int d, int dim, int max_len, const Rational& s) {
    std::uniform_int_distribution<int> idx(1, d);
    return TGen{idx(rng), idx(rng), testing::random_word(rng, dim, 1, max_len), s};
}

YExpression random_yexpr(std::mt19937_64& rng, int d, int dim, const Rational& s) {
    YExpression y;
    std::uniform_int_distribution<int> factors(0, 2);
    for (int t = 0; t < 2; ++t) {
        std::vector<TGen> f;
        const int k = factors(rng);
        for (int a = 0; a < k; ++a) f.push_back(random_tgen(rng, d, dim, 1, s));
        y.add(make_monomial(f), testing::random_rational(rng));
    }
    return y;
}

// Multisets of graded generators with total degree <= deg, counted by brute force.
long long count_multisets(const std::vector<int>& degrees, std::size_t from, int budget) {
    long long n = 1;
    for (std::size_t k = from; k < degrees.size(); ++k) {
        if (degrees[k] <= budget) n += count_multisets(degrees, k, budget - degrees[k]);
    }
    return n;
}

}  // namespace

TEST_CASE("evaluation of generators and monomials") {
    GlContext ctx(direct_sum_C(2), 3);
    TGen g{1, 2, {0, 1}, Rational(1)};
    CHECK(evaluate(y_generator(g), ctx, 2) == t_elem(ctx, 1, 2, Word{0, 1}, Rational(1)));
    CHECK(evaluate(YExpression(OrderedMonomial{}), ctx, 2) == UElement::scalar(ctx, Rational(1)));
    CHECK_THROWS_AS(evaluate(y_generator(g), GlContext(direct_sum_C(2), 1), 2), PreconditionError);
    CHECK_THROWS_AS(make_monomial({TGen{1, 1, {0}, Rational(0)}, TGen{1, 1, {0}, Rational(1)}}), StructuralError);
    CHECK_THROWS_AS(make_monomial({TGen{1, 1, {}, Rational(0)}}), StructuralError);

    auto m = make_monomial({TGen{2, 1, {0}, Rational(0)}, TGen{1, 1, {0, 0}, Rational(0)}, TGen{1, 1, {1}, Rational(0)}});
    CHECK(m[0].word == Word{1});
    CHECK(m[1].word == Word{0, 0});
    CHECK(m[2].i == 2);
    CHECK(total_length(m) == 4);
    CHECK(shifted_degree(m) == 1);
    CHECK(gl_weight(m, 2) == std::vector<int>{-1, 1});
}

TEST_CASE("evaluation is compatible with the projection") {
    std::mt19937_64 rng(41);
    for (auto omega : {direct_sum_C(1), direct_sum_C(2)}) {
        for (int d = 1; d <= 2; ++d) {
            for (int n = d + 1; n <= 3; ++n) {
                for (int t = 0; t < 5; ++t) {
                    auto y = random_yexpr(rng, d, omega->dim(), Rational(t - 2));
                    CHECK(project_down(evaluate(y, GlContext(omega, n), d)) == evaluate(y, GlContext(omega, n - 1), d));
                }
            }
        }
    }
}

TEST_CASE("products of expressions are evaluation faithful") {
    std::mt19937_64 rng(43);
    const Rational s(1, 2);
    for (auto omega : {direct_sum_C(1), direct_sum_C(2)}) {
        Evaluator ev3(GlContext(omega, 3), 2);
        Evaluator ev4(GlContext(omega, 4), 2);
        for (int t = 0; t < 4; ++t) {
            auto a = random_yexpr(rng, 2, omega->dim(), s);
            auto b = random_yexpr(rng, 2, omega->dim(), s);
            auto p3 = multiply_y(a, b, s, ev3);
            auto p4 = multiply_y(a, b, s, ev4);
            REQUIRE(p3);
            REQUIRE(p4);
            CHECK(*p3 == *p4);
            CHECK(ev3.expression(*p3) == ev3.expression(a) * ev3.expression(b));
            CHECK(ev4.expression(*p4) == ev4.expression(a) * ev4.expression(b));
        }
    }
}

TEST_CASE("shift") {
    std::mt19937_64 rng(47);
    auto y = random_yexpr(rng, 2, 2, Rational(0));
    CHECK(shift(y, Rational(0)) == y);
    CHECK(shift(shift(y, Rational(1, 3)), Rational(2)) == shift(y, Rational(7, 3)));
}

TEST_CASE("reexpress") {
    auto c1 = direct_sum_C(1);
    TGen g{1, 1, {0, 0}, Rational(0)};
    CHECK(reexpress(g, Rational(0), *c1) == y_generator(g));
    YExpression expected = y_generator(TGen{1, 1, {0, 0}, Rational(1)});
    expected.add(make_monomial({TGen{1, 1, {0}, Rational(1)}}), Rational(1));
    CHECK(reexpress(g, Rational(1), *c1) == expected);

    for (auto omega : {direct_sum_C(1), direct_sum_C(2), matrix_algebra(2)}) {
        for (int n = 2; n <= 3; ++n) {
            GlContext ctx(omega, n);
            for (const auto& w : all_words_up_to(omega->dim(), 1, 2)) {
                for (const auto& [s, s2] : {std::pair{0, 1}, {1, -1}, {2, 5}}) {
                    TGen h{1, 2, w, Rational(s)};
                    CHECK(evaluate(reexpress(h, Rational(s2), *omega), ctx, 2) == evaluate(y_generator(h), ctx, 2));
                }
            }
        }
    }
}

TEST_CASE("independence checks") {
    auto c1 = direct_sum_C(1);
    GlContext ctx(c1, 2);
    const Rational s(0);
    const OrderedMonomial one{};
    const OrderedMonomial t1 = make_monomial({TGen{1, 1, {0}, s}});
    const OrderedMonomial t1sq = make_monomial({TGen{1, 1, {0}, s}, TGen{1, 1, {0}, s}});
    const OrderedMonomial t2 = make_monomial({TGen{1, 1, {0, 0}, s}});
    CHECK(independence_check({one, t1}, ctx, 1).full_rank);
    auto r = independence_check({one, t1, t1sq, t2}, ctx, 1);
    CHECK(r.full_rank);
    CHECK(r.rank == 4);

    Evaluator ev(ctx, 1);
    auto dep = independence_check(std::vector<YExpression>{YExpression(t2), Rational(2) * YExpression(t2)}, ev);
    CHECK_FALSE(dep.full_rank);
    CHECK(dep.dependency == std::vector<Rational>{Rational(2), Rational(-1)});
}

TEST_CASE("pbw suite") {
    auto r1 = pbw_suite(direct_sum_C(1), 1, 2, 2, 3, Rational(0));
    CHECK(r1.count == 4);
    CHECK(r1.ok());
    auto r2 = pbw_suite(direct_sum_C(2), 2, 2, 2, 4, Rational(1));
    CHECK(r2.count == 61);
    CHECK(r2.ok());
    auto r0 = pbw_suite(direct_sum_C(2), 2, 0, 2, 4, Rational(1));
    CHECK(r0.count == 1);
    CHECK(r0.rank == 1);
    CHECK_THROWS_AS(ordered_monomials(2, 2, 6, 6, Rational(0), Budget{100}), SizeLimitError);
}

TEST_CASE("splitting series against brute-force multiset counts") {
    for (int dim = 1; dim <= 2; ++dim) {
        for (int d = 0; d <= 2; ++d) {
            for (int deg = 0; deg <= 3; ++deg) {
                std::vector<int> degrees;
                long long power = 1;
                for (int m = 1; m <= deg; ++m) {
                    power *= dim;
                    const long long gens = necklace_count(dim, m) + static_cast<long long>(d) * d * power;
                    for (long long g = 0; g < gens; ++g) degrees.push_back(m);
                }
                CHECK(splitting_dim(dim, d, deg) == count_multisets(degrees, 0, deg));
            }
            CHECK(splitting_dim(dim, d, 1) == 1 + dim + d * d * dim);
            CHECK(splitting_dim(dim, d, 0) == 1);
        }
    }
    CHECK(splitting_dim(1, 0, 2) == 4);
}

TEST_CASE("splitting probe") {
    auto r = splitting_probe(direct_sum_C(1), 1, 1, 3);
    CHECK(r.dim_n == 3);
    CHECK(r.dim_n1 == 3);
    CHECK(r.status == Stabilization::match);
    auto r0 = splitting_probe(direct_sum_C(2), 1, 0, 3);
    CHECK(r0.dim_n == 1);
    CHECK(r0.status == Stabilization::match);
    CHECK(splitting_probe(direct_sum_C(1), 1, 2, 3).status == Stabilization::match);
    CHECK(stabilize(true, false) == Stabilization::not_stabilized);
    CHECK(to_string(Stabilization::not_stabilized) == "not-stabilized");
}

TEST_CASE("shift acts by automorphisms") {
    std::mt19937_64 rng(53);
    for (auto omega : {direct_sum_C(1), direct_sum_C(2)}) {
        for (int n = 3; n <= 4; ++n) {
            Evaluator ev(GlContext(omega, n), 2);
            for (int t = 0; t < 3; ++t) {
                TGen g = random_tgen(rng, 2, omega->dim(), 2, Rational(0));
                TGen h = random_tgen(rng, 2, omega->dim(), 2, Rational(0));
                CHECK(shift_automorphism_check(g, h, Rational(3, 2), ev));
            }
        }
    }
}

TEST_CASE("d = 0 invariants commute with the evaluated generators") {
    auto c1 = direct_sum_C(1);
    for (int n = 3; n <= 4; ++n) {
        GlContext ctx(c1, n);
        auto invariants = invariant_basis(ctx, 0, 2);
        Evaluator ev(ctx, 2);
        for (const auto& g : t_generators(2, 1, 2, Rational(0))) {
            for (const auto& u : invariants) CHECK(commutator(u, ev.generator(g)).is_zero());
        }
    }
}
