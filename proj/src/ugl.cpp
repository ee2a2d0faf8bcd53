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

#include "yangian/ugl.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "yangian/errors.hpp"
#include "yangian/linalg.hpp"

namespace yangian {

GlContext::GlContext(OmegaPtr omega, int n) : omega_(std::move(omega)), n_(n) {
    if (!omega_) throw StructuralError("GlContext: null algebra");
    if (n_ < 1) throw StructuralError("GlContext: N must be at least 1");
    const int dim = omega_->dim();
    decoded_.resize(static_cast<std::size_t>(3 * n_ * n_ * dim));
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            for (int b = 0; b < dim; ++b) {
                Code c = encode({i, j, b});
                decoded_[c] = {i, j, b};
                codes_.push_back(c);
            }
        }
    }
    std::sort(codes_.begin(), codes_.end());
}

GlContext::Code GlContext::encode(const Generator& g) const {
    if (g.i < 1 || g.i > n_ || g.j < 1 || g.j > n_ || g.b < 0 || g.b >= dim()) {
        throw StructuralError("generator E(" + std::to_string(g.i) + "," + std::to_string(g.j) + "," + std::to_string(g.b) +
                              ") out of range for N=" + std::to_string(n_));
    }
    const int cls = generator_class(g.i, g.j);
    return static_cast<Code>(((cls * n_ + (g.i - 1)) * n_ + (g.j - 1)) * dim() + g.b);
}

// ---------------------------------------------------------------------------

UElement::UElement(GlContext ctx, MonomialComb terms) : ctx_(std::move(ctx)), terms_(std::move(terms)) {}

UElement UElement::scalar(const GlContext& ctx, const Rational& c) { return UElement(ctx, MonomialComb(Monomial{}, c)); }

UElement UElement::generator(const GlContext& ctx, const Generator& g) {
    return UElement(ctx, MonomialComb(Monomial{ctx.encode(g)}));
}

int UElement::degree() const {
    if (terms_.is_zero()) return 0;
    return static_cast<int>(std::prev(terms_.end())->first.size());
}

UElement UElement::part_of_degree(int deg) const {
    MonomialComb out;
    for (const auto& [m, c] : terms_) {
        if (static_cast<int>(m.size()) == deg) out.add(m, c);
    }
    return UElement(ctx_, std::move(out));
}

void UElement::require_same(const UElement& o) const {
    if (!(ctx_ == o.ctx_)) throw StructuralError("UElement: context mismatch");
}

UElement& UElement::operator+=(const UElement& o) {
    require_same(o);
    terms_ += o.terms_;
    return *this;
}

UElement& UElement::operator-=(const UElement& o) {
    require_same(o);
    terms_ -= o.terms_;
    return *this;
}

UElement& UElement::operator*=(const Rational& c) {
    terms_ *= c;
    return *this;
}

UElement operator*(const UElement& a, const UElement& b) { return multiply_u(a, b); }

// ---------------------------------------------------------------------------

NormalFormer::NormalFormer(GlContext ctx, std::mt19937_64* random_schedule)
    : ctx_(std::move(ctx)), rng_(random_schedule) {}

void NormalFormer::push(Monomial word, const Rational& c) { pending_.add(std::move(word), c); }

UElement NormalFormer::finish() {
    const AlgebraSpec& omega = *ctx_.omega();
    std::vector<std::size_t> descents;
    while (!pending_.is_zero()) {
        auto [w, c] = pending_.pop_first();
        descents.clear();
        for (std::size_t p = 0; p + 1 < w.size(); ++p) {
            if (w[p] > w[p + 1]) {
                descents.push_back(p);
                if (rng_ == nullptr) break;
            }
        }
        if (descents.empty()) {
            done_.add(std::move(w), c);
            continue;
        }
        std::size_t p = descents.front();
        if (rng_ != nullptr) {
            std::uniform_int_distribution<std::size_t> pick(0, descents.size() - 1);
            p = descents[pick(*rng_)];
        }
        const Generator a = ctx_.decode(w[p]);
        const Generator b = ctx_.decode(w[p + 1]);

        auto contracted = [&](int i, int j, int k) {
            Monomial v;
            v.reserve(w.size() - 1);
            v.insert(v.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
            v.push_back(ctx_.encode({i, j, k}));
            v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(p) + 2, w.end());
            return v;
        };
        if (b.i == a.j) {
            for (const auto& [k, ck] : omega.product(a.b, b.b)) pending_.add(contracted(a.i, b.j, k), c * ck);
        }
        if (a.i == b.j) {
            for (const auto& [k, ck] : omega.product(b.b, a.b)) pending_.add(contracted(b.i, a.j, k), -(c * ck));
        }
        std::swap(w[p], w[p + 1]);
        pending_.add(std::move(w), c);
    }
    return UElement(ctx_, std::move(done_));
}

namespace {

Monomial encode_all(const GlContext& ctx, const std::vector<Generator>& seq) {
    Monomial w;
    w.reserve(seq.size());
    for (const auto& g : seq) w.push_back(ctx.encode(g));
    return w;
}

}  // namespace

UElement normal_form(const GlContext& ctx, const std::vector<Generator>& seq) {
    NormalFormer nf(ctx);
    nf.push(encode_all(ctx, seq), Rational(1));
    return nf.finish();
}

UElement normal_form_random(const GlContext& ctx, const std::vector<Generator>& seq, std::mt19937_64& rng) {
    NormalFormer nf(ctx, &rng);
    nf.push(encode_all(ctx, seq), Rational(1));
    return nf.finish();
}

UElement multiply_u(const UElement& a, const UElement& b) {
    if (!(a.context() == b.context())) throw StructuralError("multiply_u: context mismatch");
    NormalFormer nf(a.context());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Monomial w = ma;
            w.insert(w.end(), mb.begin(), mb.end());
            nf.push(std::move(w), ca * cb);
        }
    }
    return nf.finish();
}

UElement commutator(const UElement& a, const UElement& b) { return multiply_u(a, b) - multiply_u(b, a); }

UElement ad_E(int i, int j, const UElement& u) {
    const GlContext& ctx = u.context();
    if (i < 1 || i > ctx.n() || j < 1 || j > ctx.n()) throw StructuralError("ad_E: index out of range");
    NormalFormer nf(ctx);
    for (const auto& [m, c] : u.terms()) {
        for (std::size_t p = 0; p < m.size(); ++p) {
            const Generator g = ctx.decode(m[p]);
            // [E_ij, E_kl(y)] = delta_kj E_il(y) - delta_il E_kj(y)
            if (g.i == j) {
                Monomial v = m;
                v[p] = ctx.encode({i, g.j, g.b});
                nf.push(std::move(v), c);
            }
            if (g.j == i) {
                Monomial v = m;
                v[p] = ctx.encode({g.i, j, g.b});
                nf.push(std::move(v), -c);
            }
        }
    }
    return nf.finish();
}

bool is_in_centralizer(const UElement& u, int d) {
    const int n = u.context().n();
    if (d < 0 || d > n) throw StructuralError("is_in_centralizer: d out of range");
    for (int i = d + 1; i <= n; ++i) {
        for (int j = d + 1; j <= n; ++j) {
            if (!ad_E(i, j, u).is_zero()) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

namespace {

void check_indices(const GlContext& ctx, int i, int j) {
    if (i < 1 || i > ctx.n() || j < 1 || j > ctx.n()) {
        throw StructuralError("index pair (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for N=" +
                              std::to_string(ctx.n()));
    }
}

void push_e_terms(NormalFormer& nf, const GlContext& ctx, int i, int j, const Word& w, const Rational& c) {
    if (w.empty()) throw StructuralError("e_elem: word must be nonempty");
    for (int b : w) {
        if (b < 0 || b >= ctx.dim()) throw StructuralError("e_elem: basis index out of range");
    }
    const std::size_t m = w.size();
    const int n = ctx.n();
    std::vector<int> a(m + 1, 1);  // a[0] = i, a[m] = j, inner indices run over 1..N
    a[0] = i;
    a[m] = j;
    while (true) {
        Monomial word(m);
        for (std::size_t p = 0; p < m; ++p) word[p] = ctx.encode({a[p], a[p + 1], w[p]});
        nf.push(std::move(word), c);
        std::size_t p = m - 1;
        while (p >= 1 && a[p] == n) {
            a[p] = 1;
            --p;
        }
        if (p == 0) break;
        ++a[p];
    }
}

}  // namespace

UElement e_elem(const GlContext& ctx, int i, int j, const Word& w) {
    check_indices(ctx, i, j);
    NormalFormer nf(ctx);
    push_e_terms(nf, ctx, i, j, w, Rational(1));
    return nf.finish();
}

UElement e_elem(const GlContext& ctx, int i, int j, const TensorElement& t) {
    check_indices(ctx, i, j);
    NormalFormer nf(ctx);
    for (const auto& [w, c] : t) push_e_terms(nf, ctx, i, j, w, c);
    return nf.finish();
}

TensorElement coagulation_sum(const AlgebraSpec& omega, const Word& w, const Rational& base) {
    if (w.empty()) throw StructuralError("coagulation_sum: word must be nonempty");
    TensorElement out;
    const int m = static_cast<int>(w.size());
    for (const auto& nu : compositions(m)) {
        Rational c = base.pow(static_cast<unsigned>(m - nu.length()));  // 0^0 = 1
        if (c.is_zero()) continue;
        out.add_scaled(coagulate_word(omega, w, nu), c);
    }
    return out;
}

UElement t_elem(const GlContext& ctx, int i, int j, const Word& w, const Rational& s) {
    const Rational base = Rational(-ctx.n()) - s;
    return e_elem(ctx, i, j, coagulation_sum(*ctx.omega(), w, base));
}

UElement t_elem(const GlContext& ctx, int i, int j, const TensorElement& t, const Rational& s) {
    const Rational base = Rational(-ctx.n()) - s;
    TensorElement expanded;
    for (const auto& [w, c] : t) expanded.add_scaled(coagulation_sum(*ctx.omega(), w, base), c);
    return e_elem(ctx, i, j, expanded);
}

bool reparametrize_check(const GlContext& ctx, int i, int j, const Word& w, const Rational& s, const Rational& s2) {
    UElement lhs = t_elem(ctx, i, j, w, s);
    UElement rhs = t_elem(ctx, i, j, coagulation_sum(*ctx.omega(), w, s2 - s), s2);
    return lhs == rhs;
}

// ---------------------------------------------------------------------------

namespace {

int monomial_weight(const GlContext& ctx, const Monomial& m, int a) {
    int wgt = 0;
    for (auto code : m) {
        const Generator& g = ctx.decode(code);
        wgt += (g.i == a ? 1 : 0) - (g.j == a ? 1 : 0);
    }
    return wgt;
}

}  // namespace

std::optional<int> weight(const UElement& u) {
    std::optional<int> common;
    for (const auto& [m, c] : u.terms()) {
        int wgt = monomial_weight(u.context(), m, u.context().n());
        if (common && *common != wgt) return std::nullopt;
        common = wgt;
    }
    return common.value_or(0);
}

UElement project_down(const UElement& u) {
    const GlContext& ctx = u.context();
    const int n = ctx.n();
    if (n < 2) throw PreconditionError("project_down: N must be at least 2");
    const GlContext lower = ctx.with_n(n - 1);
    NormalFormer nf(lower);
    for (const auto& [m, c] : u.terms()) {
        if (monomial_weight(ctx, m, n) != 0) {
            throw PreconditionError("project_down: element is not invariant under [E_NN, -]");
        }
        bool touches_n = false;
        bool has_last_column = false;
        for (auto code : m) {
            const Generator& g = ctx.decode(code);
            touches_n = touches_n || g.i == n || g.j == n;
            has_last_column = has_last_column || g.j == n;
        }
        if (touches_n) {
            // Weight zero forces an E_iN factor, which sorts last: the monomial lies in I+(N).
            if (!has_last_column) throw std::logic_error("project_down: weight-zero monomial without an E_iN factor");
            continue;
        }
        Monomial v;
        v.reserve(m.size());
        for (auto code : m) v.push_back(lower.encode(ctx.decode(code)));
        nf.push(std::move(v), c);
    }
    return nf.finish();
}

// ---------------------------------------------------------------------------

std::vector<Monomial> pbw_basis(const GlContext& ctx, int max_degree, const Budget& budget) {
    std::vector<Monomial> out{Monomial{}};
    const auto& codes = ctx.codes();
    std::vector<Monomial> layer{Monomial{}};
    std::vector<std::size_t> layer_start{0};  // smallest admissible code position for extension
    for (int deg = 1; deg <= max_degree; ++deg) {
        std::vector<Monomial> next;
        std::vector<std::size_t> next_start;
        for (std::size_t a = 0; a < layer.size(); ++a) {
            for (std::size_t p = layer_start[a]; p < codes.size(); ++p) {
                Monomial m = layer[a];
                m.push_back(codes[p]);
                next.push_back(std::move(m));
                next_start.push_back(p);
                if (out.size() + next.size() > budget.max_basis) {
                    throw SizeLimitError("pbw_basis: more than " + std::to_string(budget.max_basis) + " monomials");
                }
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
        layer_start = std::move(next_start);
    }
    return out;
}

IdealCheck ideal_intersection_check(const GlContext& ctx, int max_degree, const Budget& budget) {
    const int n = ctx.n();
    if (n < 2) throw StructuralError("ideal_intersection_check: N must be at least 2");
    if (max_degree < 0) throw StructuralError("ideal_intersection_check: negative degree");
    IdealCheck result;
    const auto basis = pbw_basis(ctx, max_degree, budget);
    std::vector<Monomial> zero_weight;
    for (const auto& m : basis) {
        if (monomial_weight(ctx, m, n) == 0) zero_weight.push_back(m);
    }
    result.dim_centralizer = zero_weight.size();

    // Spanning sets of the weight-zero parts of I+(N) and I-(N); both ideals are
    // stable under [E_NN, -], so their intersections with the centralizer are spanned
    // by the weight-zero spanning vectors.
    Indexer<Monomial> index;
    std::vector<SparseRow> plus;
    std::vector<SparseRow> minus;
    std::vector<std::pair<int, UElement>> plus_elements;  // (filtration degree, element)
    const auto lower_basis = max_degree >= 1 ? pbw_basis(ctx, max_degree - 1, budget) : std::vector<Monomial>{};
    for (const auto& m : lower_basis) {
        const int wm = monomial_weight(ctx, m, n);
        UElement um(ctx, MonomialComb(m));
        for (int i = 1; i <= n; ++i) {
            for (int b = 0; b < ctx.dim(); ++b) {
                if (wm + (i == n ? 0 : -1) == 0) {
                    UElement v = multiply_u(um, UElement::generator(ctx, {i, n, b}));
                    plus.push_back(index.row(v.terms()));
                    plus_elements.emplace_back(static_cast<int>(m.size()) + 1, std::move(v));
                }
                if (wm + (i == n ? 0 : 1) == 0) {
                    UElement v = multiply_u(UElement::generator(ctx, {n, i, b}), um);
                    minus.push_back(index.row(v.terms()));
                }
            }
        }
    }
    result.intersections_equal = same_row_space(plus, minus);
    RowReducer ideal;
    for (const auto& r : plus) ideal.insert(r);
    result.dim_plus = ideal.rank();
    result.dim_minus = rank_of(minus);

    result.two_sided = true;
    for (const auto& [deg_l, l] : plus_elements) {
        for (const auto& v : zero_weight) {
            if (static_cast<int>(v.size()) + deg_l > max_degree) continue;
            UElement uv(ctx, MonomialComb(v));
            if (!ideal.reduce(index.row(multiply_u(uv, l).terms())).empty() ||
                !ideal.reduce(index.row(multiply_u(l, uv).terms())).empty()) {
                result.two_sided = false;
                break;
            }
        }
        if (!result.two_sided) break;
    }
    result.dim_lower = pbw_basis(ctx.with_n(n - 1), max_degree, budget).size();
    result.decomposition = result.dim_centralizer == result.dim_lower + result.dim_plus;
    return result;
}

std::vector<UElement> invariant_basis(const GlContext& ctx, int d, int deg, const Budget& budget) {
    const int n = ctx.n();
    if (d < 0 || d > n) throw StructuralError("invariant_basis: d out of range");
    if (deg < 0) throw StructuralError("invariant_basis: negative degree");
    // The diagonal E_aa (a > d) act by weights, so invariants live in the joint
    // zero-weight span; only off-diagonal E_ij remain to be imposed there.
    std::vector<Monomial> candidates;
    for (const auto& m : pbw_basis(ctx, deg, budget)) {
        bool zero = true;
        for (int a = d + 1; a <= n && zero; ++a) zero = monomial_weight(ctx, m, a) == 0;
        if (zero) candidates.push_back(m);
    }
    Indexer<std::pair<int, Monomial>> index;
    RowReducer reducer(true);
    std::vector<UElement> kernel;
    for (const auto& m : candidates) {
        UElement um(ctx, MonomialComb(m));
        SparseRow image;
        int pair_id = 0;
        for (int i = d + 1; i <= n; ++i) {
            for (int j = d + 1; j <= n; ++j) {
                if (i == j) continue;
                const UElement moved = ad_E(i, j, um);
                for (const auto& [mm, c] : moved.terms()) image.emplace_back(index.index({pair_id, mm}), c);
                ++pair_id;
            }
        }
        std::sort(image.begin(), image.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        if (auto dep = reducer.insert(std::move(image))) {
            MonomialComb k;
            for (const auto& [id, c] : *dep) k.add(candidates[id], c);
            kernel.emplace_back(ctx, std::move(k));
        }
    }
    return kernel;
}

std::size_t invariant_dim(const GlContext& ctx, int d, int deg, const Budget& budget) {
    return invariant_basis(ctx, d, deg, budget).size();
}

std::string to_string(const UElement& u) {
    if (u.is_zero()) return "0";
    const GlContext& ctx = u.context();
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : u.terms()) {
        if (!first) os << " + ";
        first = false;
        os << c << " * ";
        if (m.empty()) os << "1";
        for (auto code : m) {
            const Generator& g = ctx.decode(code);
            os << "E(" << g.i << "," << g.j << "," << ctx.omega()->label(g.b) << ")";
        }
    }
    return os.str();
}

}  // namespace yangian
