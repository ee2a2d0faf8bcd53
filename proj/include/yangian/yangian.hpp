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
// Formal expressions in the generators t_ij(x; s) of Y_d(Omega), their
// evaluation at finite N, and finite-N probes of the PBW and splitting theorems.

#ifndef YANGIAN_YANGIAN_HPP
#define YANGIAN_YANGIAN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "yangian/linalg.hpp"
#include "yangian/ugl.hpp"
#include "yangian/words.hpp"

namespace yangian {

struct TGen {
    int i = 1;
    int j = 1;
    Word word;
    Rational s;
    friend bool operator==(const TGen&, const TGen&) = default;
};

// (i, j, word length, word entries), then s.
struct TGenOrder {
    bool operator()(const TGen& a, const TGen& b) const;
};

using OrderedMonomial = std::vector<TGen>;

struct OrderedMonomialOrder {
    bool operator()(const OrderedMonomial& a, const OrderedMonomial& b) const;
};

using YExpression = LinComb<OrderedMonomial, OrderedMonomialOrder>;

// Sorts the factors; throws StructuralError on mixed s, empty words or bad indices.
OrderedMonomial make_monomial(std::vector<TGen> factors);
YExpression y_generator(const TGen& g);

// Sum of word lengths, and sum of (length - 1).
int total_length(const OrderedMonomial& m);
int shifted_degree(const OrderedMonomial& m);
// Weight under the diagonal of gl(d): t_ij contributes e_i - e_j.
std::vector<int> gl_weight(const OrderedMonomial& m, int d);

/* Memoized evaluation of t-generators and ordered monomials in U(gl(N, Omega)).
 * Monomials are evaluated left to right and every prefix is cached.
 */
class Evaluator {
public:
    Evaluator(GlContext ctx, int d);

    const GlContext& context() const { return ctx_; }
    int d() const { return d_; }

    const UElement& generator(const TGen& g);
    const UElement& monomial(const OrderedMonomial& m);
    UElement expression(const YExpression& y);

private:
    GlContext ctx_;
    int d_;
    std::map<TGen, UElement, TGenOrder> gens_;
    std::map<OrderedMonomial, UElement, OrderedMonomialOrder> monos_;
};

// Throws PreconditionError when N < d.
UElement evaluate(const YExpression& y, const GlContext& ctx, int d);

YExpression shift(const YExpression& y, const Rational& c);

// t_ij(x; s) = sum_nu (s' - s)^(l(x) - l(x * nu)) t_ij(x * nu; s').
YExpression reexpress(const TGen& g, const Rational& s2, const AlgebraSpec& omega);

// All generators t_ij(w; s) with i, j <= d and 1 <= |w| <= max_len, in TGenOrder.
std::vector<TGen> t_generators(int d, int dim, int max_len, const Rational& s);

// Ordered monomials (including 1) with total length <= max_len and at most max_deg factors.
std::vector<OrderedMonomial> ordered_monomials(int d, int dim, int max_len, int max_deg, const Rational& s,
                                               const Budget& budget = {});

struct IndependenceResult {
    bool full_rank = false;
    std::size_t rank = 0;
    std::size_t count = 0;
    // Primitive integer dependency among the first dependent prefix, first nonzero entry positive.
    std::vector<Rational> dependency;
};

IndependenceResult independence_check(const std::vector<YExpression>& elements, Evaluator& ev);
IndependenceResult independence_check(const std::vector<OrderedMonomial>& monomials, Evaluator& ev);
IndependenceResult independence_check(const std::vector<OrderedMonomial>& monomials, const GlContext& ctx, int d);

struct PbwReport {
    int d = 0;
    int max_len = 0;
    int max_deg = 0;
    int n = 0;
    std::size_t count = 0;
    std::size_t rank = 0;
    bool ok() const { return rank == count; }
};

PbwReport pbw_suite(const OmegaPtr& omega, int d, int max_len, int max_deg, int n, const Rational& s,
                    const Budget& budget = {});

// Coordinates of target in the span of the evaluated candidates; nullopt if outside it.
// Candidates must evaluate to independent elements for the answer to be unique.
std::optional<YExpression> expand(const UElement& target, const std::vector<OrderedMonomial>& candidates,
                                  Evaluator& ev);

// Product in Y_d(Omega), re-expanded over ordered monomials at parameter s whose total
// length is at most the sum of the factors' lengths and whose weight occurs in the product.
std::optional<YExpression> multiply_y(const YExpression& a, const YExpression& b, const Rational& s, Evaluator& ev);

enum class Stabilization { match, mismatch, not_stabilized };
std::string to_string(Stabilization s);
// Two evaluations at consecutive N: both true is a match, both false a mismatch.
Stabilization stabilize(bool at_n, bool at_n1);

// Dimension of the degree-k part of S(Tc+(Omega)) (x) S(M_d(Omega)), k = 0..deg,
// grading a word of length m by m.
std::vector<long long> splitting_series(int dim, int d, int deg);
long long splitting_dim(int dim, int d, int deg);

struct SplittingReport {
    int d = 0;
    int deg = 0;
    int n = 0;
    long long expected = 0;
    std::size_t dim_n = 0;
    std::size_t dim_n1 = 0;
    Stabilization status = Stabilization::mismatch;
};

SplittingReport splitting_probe(const OmegaPtr& omega, int d, int deg, int n, const Budget& budget = {});

// g(s+c) h(s+c) expanded at s+c has the structure constants of g(s) h(s) expanded at s.
bool shift_automorphism_check(const TGen& g, const TGen& h, const Rational& c, Evaluator& ev);

std::string to_string(const TGen& g, const AlgebraSpec& omega);
std::string to_string(const YExpression& y, const AlgebraSpec& omega);

}  // namespace yangian

#endif  // YANGIAN_YANGIAN_HPP
