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
// Hand-rolled generators for property tests.

#ifndef YANGIAN_TEST_SUPPORT_HPP
#define YANGIAN_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "yangian/omega.hpp"
#include "yangian/ugl.hpp"
#include "yangian/words.hpp"

namespace yangian::testing {

inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(num(rng), den(rng));
}

inline Word random_word(std::mt19937_64& rng, int dim, int min_len, int max_len) {
    std::uniform_int_distribution<int> len(min_len, max_len);
    std::uniform_int_distribution<int> letter(0, dim - 1);
    Word w(static_cast<std::size_t>(len(rng)));
    for (auto& b : w) b = letter(rng);
    return w;
}

inline BasisVector random_basis_vector(std::mt19937_64& rng, int dim) {
    BasisVector v;
    std::uniform_int_distribution<int> letter(0, dim - 1);
    for (int t = 0; t < 2; ++t) v.add(letter(rng), random_rational(rng));
    return v;
}

inline TensorElement random_tensor(std::mt19937_64& rng, int dim, int min_len, int max_len, int terms = 3) {
    TensorElement t;
    for (int k = 0; k < terms; ++k) t.add(random_word(rng, dim, min_len, max_len), random_rational(rng));
    return t;
}

inline std::vector<Generator> random_generators(std::mt19937_64& rng, const GlContext& ctx, int count) {
    std::uniform_int_distribution<int> idx(1, ctx.n());
    std::uniform_int_distribution<int> letter(0, ctx.dim() - 1);
    std::vector<Generator> seq;
    for (int k = 0; k < count; ++k) seq.push_back({idx(rng), idx(rng), letter(rng)});
    return seq;
}

inline UElement random_uelement(std::mt19937_64& rng, const GlContext& ctx, int max_deg, int terms = 2) {
    UElement u(ctx);
    std::uniform_int_distribution<int> deg(0, max_deg);
    for (int k = 0; k < terms; ++k) {
        u += random_rational(rng) * normal_form(ctx, random_generators(rng, ctx, deg(rng)));
    }
    return u;
}

inline UElement gen(const GlContext& ctx, int i, int j, int b = 0) { return UElement::generator(ctx, {i, j, b}); }

}  // namespace yangian::testing

#endif  // YANGIAN_TEST_SUPPORT_HPP
