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

#include "yangian/yangian.hpp"

#include <algorithm>
#include <set>

#include "yangian/errors.hpp"

namespace yangian {

bool TGenOrder::operator()(const TGen& a, const TGen& b) const {
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    if (a.word != b.word) return WordOrder{}(a.word, b.word);
    return a.s < b.s;
}

bool OrderedMonomialOrder::operator()(const OrderedMonomial& a, const OrderedMonomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), TGenOrder{});
}

OrderedMonomial make_monomial(std::vector<TGen> factors) {
    for (const auto& g : factors) {
        if (g.word.empty()) throw StructuralError("t-generator with empty word");
        if (g.i < 1 || g.j < 1) throw StructuralError("t-generator index must be positive");
        if (g.s != factors.front().s) throw StructuralError("ordered monomial with mixed shift parameters");
    }
    std::sort(factors.begin(), factors.end(), TGenOrder{});
    return factors;
}

YExpression y_generator(const TGen& g) { return YExpression(make_monomial({g})); }

int total_length(const OrderedMonomial& m) {
    int n = 0;
    for (const auto& g : m) n += static_cast<int>(g.word.size());
    return n;
}

int shifted_degree(const OrderedMonomial& m) { return total_length(m) - static_cast<int>(m.size()); }

std::vector<int> gl_weight(const OrderedMonomial& m, int d) {
    std::vector<int> w(static_cast<std::size_t>(d), 0);
    for (const auto& g : m) {
        ++w.at(static_cast<std::size_t>(g.i - 1));
        --w.at(static_cast<std::size_t>(g.j - 1));
    }
    return w;
}

Evaluator::Evaluator(GlContext ctx, int d) : ctx_(std::move(ctx)), d_(d) {
    if (d < 0) throw StructuralError("Evaluator: negative d");
    if (ctx_.n() < d) {
        throw PreconditionError("evaluation needs N >= d (N=" + std::to_string(ctx_.n()) + ", d=" + std::to_string(d) + ")");
    }
}

const UElement& Evaluator::generator(const TGen& g) {
    auto it = gens_.find(g);
    if (it != gens_.end()) return it->second;
    if (g.i > d_ || g.j > d_) throw StructuralError("t-generator index exceeds d");
    return gens_.emplace(g, t_elem(ctx_, g.i, g.j, g.word, g.s)).first->second;
}

const UElement& Evaluator::monomial(const OrderedMonomial& m) {
    auto it = monos_.find(m);
    if (it != monos_.end()) return it->second;
    if (m.empty()) return monos_.emplace(m, UElement::scalar(ctx_, Rational(1))).first->second;
    OrderedMonomial prefix(m.begin(), m.end() - 1);
    UElement value = monomial(prefix) * generator(m.back());
    return monos_.emplace(m, std::move(value)).first->second;
}

UElement Evaluator::expression(const YExpression& y) {
    UElement out(ctx_);
    for (const auto& [m, c] : y) out += c * monomial(m);
    return out;
}

UElement evaluate(const YExpression& y, const GlContext& ctx, int d) {
    Evaluator ev(ctx, d);
    return ev.expression(y);
}

YExpression shift(const YExpression& y, const Rational& c) {
    YExpression out;
    for (const auto& [m, coeff] : y) {
        OrderedMonomial shifted = m;
        for (auto& g : shifted) g.s += c;
        out.add(std::move(shifted), coeff);
    }
    return out;
}

YExpression reexpress(const TGen& g, const Rational& s2, const AlgebraSpec& omega) {
    YExpression out;
    for (const auto& [w, c] : coagulation_sum(omega, g.word, s2 - g.s)) {
        out.add(make_monomial({TGen{g.i, g.j, w, s2}}), c);
    }
    return out;
}

std::vector<TGen> t_generators(int d, int dim, int max_len, const Rational& s) {
    std::vector<TGen> out;
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            for (const auto& w : all_words_up_to(dim, 1, max_len)) out.push_back(TGen{i, j, w, s});
    std::sort(out.begin(), out.end(), TGenOrder{});
    return out;
}

namespace {

void extend_monomials(const std::vector<TGen>& gens, std::size_t from, int len_left, int deg_left,
                      OrderedMonomial& current, std::vector<OrderedMonomial>& out, const Budget& budget) {
    out.push_back(current);
    if (out.size() > budget.max_basis) {
        throw SizeLimitError("ordered_monomials: more than " + std::to_string(budget.max_basis) + " monomials");
    }
    if (deg_left == 0) return;
    for (std::size_t k = from; k < gens.size(); ++k) {
        const int len = static_cast<int>(gens[k].word.size());
        if (len > len_left) continue;
        current.push_back(gens[k]);
        extend_monomials(gens, k, len_left - len, deg_left - 1, current, out, budget);
        current.pop_back();
    }
}

}  // namespace

std::vector<OrderedMonomial> ordered_monomials(int d, int dim, int max_len, int max_deg, const Rational& s,
                                               const Budget& budget) {
    if (max_len < 0 || max_deg < 0) throw StructuralError("ordered_monomials: negative bound");
    std::vector<OrderedMonomial> out;
    if (max_len == 0 || d == 0) {
        out.emplace_back();
        return out;
    }
    const auto gens = t_generators(d, dim, max_len, s);
    OrderedMonomial current;
    extend_monomials(gens, 0, max_len, max_deg, current, out, budget);
    std::sort(out.begin(), out.end(), OrderedMonomialOrder{});
    return out;
}

IndependenceResult independence_check(const std::vector<YExpression>& elements, Evaluator& ev) {
    IndependenceResult result;
    result.count = elements.size();
    Indexer<Monomial> cols;
    RowReducer reducer(true);
    for (const auto& y : elements) {
        auto dep = reducer.insert(cols.row(ev.expression(y).terms()));
        if (dep && result.dependency.empty()) {
            result.dependency.assign(elements.size(), Rational(0));
            for (const auto& [k, c] : normalize_dependency(*dep)) result.dependency[k] = c;
        }
    }
    result.rank = reducer.rank();
    result.full_rank = result.rank == result.count;
    return result;
}

IndependenceResult independence_check(const std::vector<OrderedMonomial>& monomials, Evaluator& ev) {
    std::vector<YExpression> elements;
    elements.reserve(monomials.size());
    for (const auto& m : monomials) elements.emplace_back(m);
    return independence_check(elements, ev);
}

IndependenceResult independence_check(const std::vector<OrderedMonomial>& monomials, const GlContext& ctx, int d) {
    Evaluator ev(ctx, d);
    return independence_check(monomials, ev);
}

PbwReport pbw_suite(const OmegaPtr& omega, int d, int max_len, int max_deg, int n, const Rational& s,
                    const Budget& budget) {
    PbwReport report{d, max_len, max_deg, n, 0, 0};
    Evaluator ev(GlContext(omega, n), d);
    const auto monomials = ordered_monomials(d, omega->dim(), max_len, max_deg, s, budget);
    const auto r = independence_check(monomials, ev);
    report.count = r.count;
    report.rank = r.rank;
    return report;
}

std::optional<YExpression> expand(const UElement& target, const std::vector<OrderedMonomial>& candidates,
                                  Evaluator& ev) {
    Indexer<Monomial> cols;
    RowReducer reducer(true);
    for (const auto& m : candidates) reducer.insert(cols.row(ev.monomial(m).terms()));
    SparseRow combo;
    if (!reducer.reduce(cols.row(target.terms()), &combo).empty()) return std::nullopt;
    YExpression out;
    for (const auto& [k, c] : combo) out.add(candidates[k], c);
    return out;
}

namespace {

int max_total_length(const YExpression& y) {
    int n = 0;
    for (const auto& [m, c] : y) n = std::max(n, total_length(m));
    return n;
}

std::vector<OrderedMonomial> weighted_candidates(int d, int dim, int max_len, const Rational& s,
                                                 const std::set<std::vector<int>>& weights) {
    std::vector<OrderedMonomial> out;
    for (auto& m : ordered_monomials(d, dim, max_len, max_len, s)) {
        if (weights.count(gl_weight(m, d)) != 0) out.push_back(std::move(m));
    }
    return out;
}

}  // namespace

std::optional<YExpression> multiply_y(const YExpression& a, const YExpression& b, const Rational& s, Evaluator& ev) {
    const int d = ev.d();
    std::set<std::vector<int>> weights;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            auto w = gl_weight(ma, d);
            const auto wb = gl_weight(mb, d);
            for (std::size_t k = 0; k < w.size(); ++k) w[k] += wb[k];
            weights.insert(std::move(w));
        }
    const int len = max_total_length(a) + max_total_length(b);
    const UElement product = ev.expression(a) * ev.expression(b);
    return expand(product, weighted_candidates(d, ev.context().dim(), len, s, weights), ev);
}

std::string to_string(Stabilization s) {
    switch (s) {
        case Stabilization::match:
            return "match";
        case Stabilization::mismatch:
            return "mismatch";
        case Stabilization::not_stabilized:
            return "not-stabilized";
    }
    return "mismatch";
}

Stabilization stabilize(bool at_n, bool at_n1) {
    if (at_n && at_n1) return Stabilization::match;
    if (!at_n && !at_n1) return Stabilization::mismatch;
    return Stabilization::not_stabilized;
}

std::vector<long long> splitting_series(int dim, int d, int deg) {
    if (dim < 1 || d < 0 || deg < 0) throw StructuralError("splitting_series: bad parameters");
    std::vector<long long> series(static_cast<std::size_t>(deg + 1), 0);
    series[0] = 1;
    long long power = 1;
    for (int m = 1; m <= deg; ++m) {
        power *= dim;
        const long long generators = necklace_count(dim, m) + static_cast<long long>(d) * d * power;
        // multiply by (1 - q^m)^(-generators), one generator at a time
        for (long long g = 0; g < generators; ++g)
            for (int k = m; k <= deg; ++k) series[static_cast<std::size_t>(k)] += series[static_cast<std::size_t>(k - m)];
    }
    return series;
}

long long splitting_dim(int dim, int d, int deg) {
    long long total = 0;
    for (long long v : splitting_series(dim, d, deg)) total += v;
    return total;
}

SplittingReport splitting_probe(const OmegaPtr& omega, int d, int deg, int n, const Budget& budget) {
    SplittingReport r;
    r.d = d;
    r.deg = deg;
    r.n = n;
    r.expected = splitting_dim(omega->dim(), d, deg);
    r.dim_n = invariant_dim(GlContext(omega, n), d, deg, budget);
    r.dim_n1 = invariant_dim(GlContext(omega, n + 1), d, deg, budget);
    if (r.dim_n != r.dim_n1) {
        r.status = Stabilization::not_stabilized;
    } else {
        r.status = static_cast<long long>(r.dim_n) == r.expected ? Stabilization::match : Stabilization::mismatch;
    }
    return r;
}

bool shift_automorphism_check(const TGen& g, const TGen& h, const Rational& c, Evaluator& ev) {
    if (g.s != h.s) throw StructuralError("shift_automorphism_check: generators with different s");
    const YExpression yg = y_generator(g);
    const YExpression yh = y_generator(h);
    auto before = multiply_y(yg, yh, g.s, ev);
    auto after = multiply_y(shift(yg, c), shift(yh, c), g.s + c, ev);
    return before && after && shift(*before, c) == *after;
}

std::string to_string(const TGen& g, const AlgebraSpec& omega) {
    return "t(" + std::to_string(g.i) + "," + std::to_string(g.j) + ";" + word_to_string(omega, g.word) +
           ";s=" + g.s.to_string() + ")";
}

std::string to_string(const YExpression& y, const AlgebraSpec& omega) {
    if (y.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : y) {
        if (!out.empty()) out += " + ";
        out += c.to_string() + " *";
        if (m.empty()) out += " 1";
        for (const auto& g : m) out += " " + to_string(g, omega);
    }
    return out;
}

}  // namespace yangian
