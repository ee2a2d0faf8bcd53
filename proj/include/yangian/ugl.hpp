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
// The enveloping algebra U(gl(N, Omega)) in PBW normal form, the gl(N, C)-action,
// centralizers, the projection onto U(gl(N-1, Omega)), and the elements
// e_ij(x; N), t_ij(x; N; s).

#ifndef YANGIAN_UGL_HPP
#define YANGIAN_UGL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "yangian/omega.hpp"
#include "yangian/sparse.hpp"
#include "yangian/words.hpp"

namespace yangian {

// E_ij(x_b) = E_ij (x) x_b; i, j are 1-based, b indexes the basis of Omega.
struct Generator {
    int i = 1;
    int j = 1;
    int b = 0;
    friend bool operator==(const Generator&, const Generator&) = default;
};

/* Fixes N and Omega, and with them the total order on generators.
 *
 * Generators are ordered by (class, i, j, b) where class 0 is i, j < N,
 * class 1 is i = N, j < N, and class 2 is j = N.  Placing every E_iN last makes
 * membership of an E_NN-weight-zero PBW monomial in the left ideal generated by
 * the E_iN(x) a syntactic property (see project_down).
 */
class GlContext {
public:
    using Code = std::uint32_t;

    GlContext(OmegaPtr omega, int n);

    int n() const { return n_; }
    int dim() const { return omega_->dim(); }
    const OmegaPtr& omega() const { return omega_; }
    std::size_t generator_count() const { return static_cast<std::size_t>(n_ * n_ * dim()); }

    int generator_class(int i, int j) const { return j == n_ ? 2 : (i == n_ ? 1 : 0); }
    Code encode(const Generator& g) const;
    const Generator& decode(Code c) const { return decoded_[c]; }
    // All valid codes in increasing order.
    const std::vector<Code>& codes() const { return codes_; }

    GlContext with_n(int n) const { return GlContext(omega_, n); }

    friend bool operator==(const GlContext& a, const GlContext& b) { return a.n_ == b.n_ && a.omega_ == b.omega_; }

private:
    OmegaPtr omega_;
    int n_;
    std::vector<Generator> decoded_;
    std::vector<Code> codes_;
};

// Weakly increasing sequence of generator codes.
using Monomial = std::vector<GlContext::Code>;

// Degree first, then lexicographic.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

using MonomialComb = LinComb<Monomial, MonomialOrder>;

class UElement {
public:
    explicit UElement(GlContext ctx) : ctx_(std::move(ctx)) {}
    UElement(GlContext ctx, MonomialComb terms);

    static UElement scalar(const GlContext& ctx, const Rational& c);
    static UElement generator(const GlContext& ctx, const Generator& g);

    const GlContext& context() const { return ctx_; }
    const MonomialComb& terms() const { return terms_; }
    bool is_zero() const { return terms_.is_zero(); }
    // Filtration degree: the largest monomial degree (0 for the zero element).
    int degree() const;
    // The component spanned by monomials of exactly this degree.
    UElement part_of_degree(int deg) const;

    UElement& operator+=(const UElement& o);
    UElement& operator-=(const UElement& o);
    UElement& operator*=(const Rational& c);
    friend UElement operator+(UElement a, const UElement& b) { return a += b; }
    friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
    friend UElement operator*(const Rational& c, UElement a) { return a *= c; }
    friend UElement operator*(const UElement& a, const UElement& b);
    friend bool operator==(const UElement& a, const UElement& b) {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const UElement& a, const UElement& b) { return !(a == b); }

private:
    void require_same(const UElement& o) const;

    GlContext ctx_;
    MonomialComb terms_;
};

/* Rewrites products of generators into PBW form by swapping adjacent
 * out-of-order pairs, a b = b a + [a, b], with [E_ij(x), E_kl(y)] expanded as
 * delta_kj E_il(xy) - delta_il E_kj(yx) through the structure constants.
 * Pending words are merged in a shared worklist, largest degree first.
 */
class NormalFormer {
public:
    explicit NormalFormer(GlContext ctx, std::mt19937_64* random_schedule = nullptr);

    void push(Monomial word, const Rational& c);
    UElement finish();

private:
    struct PendingOrder {
        bool operator()(const Monomial& a, const Monomial& b) const {
            if (a.size() != b.size()) return a.size() > b.size();
            return a > b;
        }
    };

    GlContext ctx_;
    std::mt19937_64* rng_;
    LinComb<Monomial, PendingOrder> pending_;
    MonomialComb done_;
};

UElement normal_form(const GlContext& ctx, const std::vector<Generator>& seq);
// Same, with a random choice of the out-of-order pair at every step.
UElement normal_form_random(const GlContext& ctx, const std::vector<Generator>& seq, std::mt19937_64& rng);

UElement multiply_u(const UElement& a, const UElement& b);
UElement commutator(const UElement& a, const UElement& b);

// [E_ij, u] for the action of gl(N, C) extended as a derivation.
UElement ad_E(int i, int j, const UElement& u);

// u is annihilated by every E_ij with d < i, j <= N.
bool is_in_centralizer(const UElement& u, int d);

// Sum over a_1..a_{m-1} of E_{i a_1}(x_1) E_{a_1 a_2}(x_2) ... E_{a_{m-1} j}(x_m).
UElement e_elem(const GlContext& ctx, int i, int j, const Word& w);
UElement e_elem(const GlContext& ctx, int i, int j, const TensorElement& t);

// sum_{nu in Comp(m)} base^(m - l(nu)) (w * nu), coagulated blocks expanded in basis words.
TensorElement coagulation_sum(const AlgebraSpec& omega, const Word& w, const Rational& base);

// sum_nu (-N - s)^(m - l(nu)) e_ij(w * nu; N).
UElement t_elem(const GlContext& ctx, int i, int j, const Word& w, const Rational& s);
UElement t_elem(const GlContext& ctx, int i, int j, const TensorElement& t, const Rational& s);

// t_ij(w; N; s) == sum_nu (s' - s)^(m - l(nu)) t_ij(w * nu; N; s').
bool reparametrize_check(const GlContext& ctx, int i, int j, const Word& w, const Rational& s, const Rational& s2);

// Eigenvalue of [E_NN, -]: each generator contributes delta_iN - delta_jN.
std::optional<int> weight(const UElement& u);

// Projection U(gl(N))^{E_NN} -> U(gl(N-1)).  Throws PreconditionError unless
// N >= 2 and u has E_NN-weight zero.
UElement project_down(const UElement& u);

struct Budget {
    std::size_t max_basis = 250000;
};

// Weakly increasing code sequences of length <= max_degree, ordered by MonomialOrder.
std::vector<Monomial> pbw_basis(const GlContext& ctx, int max_degree, const Budget& budget = {});

struct IdealCheck {
    bool intersections_equal = false;
    bool two_sided = false;
    bool decomposition = false;  // dim centralizer = dim U(gl(N-1)) + dim L, within the truncation
    std::size_t dim_centralizer = 0;
    std::size_t dim_plus = 0;
    std::size_t dim_minus = 0;
    std::size_t dim_lower = 0;
    bool ok() const { return intersections_equal && two_sided && decomposition; }
};

// Compares the centralizer of E_NN intersected with I+(N) and with I-(N) inside
// filtration degree <= max_degree.
IdealCheck ideal_intersection_check(const GlContext& ctx, int max_degree, const Budget& budget = {});

// Kernel of all [E_ij, -], d < i, j <= N, on filtration degree <= deg.
std::vector<UElement> invariant_basis(const GlContext& ctx, int d, int deg, const Budget& budget = {});
std::size_t invariant_dim(const GlContext& ctx, int d, int deg, const Budget& budget = {});

// Canonical text form "c * E(i,j,label)E(...) + ...", terms sorted by monomial.
std::string to_string(const UElement& u);

}  // namespace yangian

#endif  // YANGIAN_UGL_HPP
