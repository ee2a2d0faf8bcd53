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

#include "yangian/current.hpp"

#include <algorithm>
#include <set>

#include "yangian/errors.hpp"
#include "yangian/linalg.hpp"

namespace yangian {

TensorElement odot(const AlgebraSpec& omega, const Word& x, const Word& y) {
    if (x.empty() || y.empty()) throw StructuralError("odot: words must be nonempty");
    TensorElement out;
    for (const auto& [k, c] : omega.product(x.back(), y.front())) {
        Word w(x.begin(), x.end() - 1);
        w.push_back(k);
        w.insert(w.end(), y.begin() + 1, y.end());
        out.add(std::move(w), c);
    }
    return out;
}

TensorElement odot(const AlgebraSpec& omega, const TensorElement& x, const TensorElement& y) {
    TensorElement out;
    for (const auto& [wx, cx] : x)
        for (const auto& [wy, cy] : y) out.add_scaled(odot(omega, wx, wy), cx * cy);
    return out;
}

bool CurrentKeyOrder::operator()(const CurrentKey& a, const CurrentKey& b) const {
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    return WordOrder{}(a.word, b.word);
}

GlCurrent current(int i, int j, const TensorElement& x) {
    GlCurrent out;
    for (const auto& [w, c] : x) out.add(CurrentKey{i, j, w}, c);
    return out;
}

GlCurrent gl_current_bracket(const AlgebraSpec& omega, int d, const GlCurrent& a, const GlCurrent& b) {
    for (const GlCurrent* g : {&a, &b})
        for (const auto& [key, c] : *g) {
            if (key.i < 1 || key.j < 1 || key.i > d || key.j > d) {
                throw StructuralError("gl_current_bracket: index out of range for d=" + std::to_string(d));
            }
        }
    GlCurrent out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            if (ka.j == kb.i) out.add_scaled(current(ka.i, kb.j, odot(omega, ka.word, kb.word)), ca * cb);
            if (kb.j == ka.i) out.add_scaled(current(kb.i, ka.j, odot(omega, kb.word, ka.word)), -(ca * cb));
        }
    return out;
}

std::optional<TensorElement> current_unit(const OmegaPtr& omega, int max_grade) {
    auto e = detect_unit(omega);
    if (!e) return std::nullopt;
    TensorElement unit;
    for (const auto& [b, c] : e->coeffs()) unit.add(Word{b}, c);
    for (const auto& w : all_words_up_to(omega->dim(), 1, max_grade + 1)) {
        const TensorElement tw(w);
        if (odot(*omega, unit, tw) != tw || odot(*omega, tw, unit) != tw) return std::nullopt;
    }
    return unit;
}

long long graded_dim(int dim, int d, int n) {
    if (dim < 1 || d < 0 || n < 0) throw StructuralError("graded_dim: bad parameters");
    long long p = static_cast<long long>(d) * d;
    for (int k = 0; k <= n; ++k) p *= dim;
    return p;
}

long long enumerate_current_basis(int dim, int d, int n) {
    std::set<CurrentKey, CurrentKeyOrder> keys;
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            for (const auto& w : all_words(dim, n + 1)) keys.insert(CurrentKey{i, j, w});
    return static_cast<long long>(keys.size());
}

namespace {

// A path in the full quiver: its start vertex and its edges (source, target).
struct Path {
    int start = 0;
    std::vector<std::pair<int, int>> edges;
    int end() const { return edges.empty() ? start : edges.back().second; }
    friend bool operator==(const Path&, const Path&) = default;
};

std::vector<Path> paths_of_length(int vertices, int length) {
    std::vector<Path> current;
    for (int v = 0; v < vertices; ++v) current.push_back(Path{v, {}});
    for (int step = 0; step < length; ++step) {
        std::vector<Path> next;
        for (const auto& p : current)
            for (int t = 0; t < vertices; ++t) {
                Path q = p;
                q.edges.emplace_back(p.end(), t);
                next.push_back(std::move(q));
            }
        current = std::move(next);
    }
    return current;
}

std::optional<Path> compose(const Path& p, const Path& q) {
    if (p.end() != q.start) return std::nullopt;
    Path r = p;
    r.edges.insert(r.edges.end(), q.edges.begin(), q.edges.end());
    return r;
}

Path word_to_path(const Word& w) {
    Path p{w.front(), {}};
    for (std::size_t a = 1; a < w.size(); ++a) p.edges.emplace_back(w[a - 1], w[a]);
    return p;
}

}  // namespace

PathAlgebraReport path_algebra_iso_check(int vertices, int max_grade) {
    if (vertices < 1 || max_grade < 0) throw StructuralError("path_algebra_iso_check: bad parameters");
    auto omega = direct_sum_C(vertices);
    PathAlgebraReport r;
    r.bijective = true;
    r.multiplicative = true;
    std::vector<std::vector<Word>> words(static_cast<std::size_t>(max_grade + 1));
    for (int n = 0; n <= max_grade; ++n) {
        const auto paths = paths_of_length(vertices, n);
        words[static_cast<std::size_t>(n)] = all_words(vertices, n + 1);
        const auto& ws = words[static_cast<std::size_t>(n)];
        r.path_counts.push_back(static_cast<long long>(paths.size()));
        r.word_counts.push_back(static_cast<long long>(ws.size()));
        // injective on words and onto the enumerated paths
        std::vector<Path> images;
        for (const auto& w : ws) {
            Path p = word_to_path(w);
            if (std::find(images.begin(), images.end(), p) != images.end()) r.bijective = false;
            if (std::find(paths.begin(), paths.end(), p) == paths.end()) r.bijective = false;
            images.push_back(std::move(p));
        }
        if (images.size() != paths.size()) r.bijective = false;
    }
    for (int p = 0; p <= max_grade; ++p)
        for (int q = 0; p + q <= max_grade; ++q)
            for (const auto& x : words[static_cast<std::size_t>(p)])
                for (const auto& y : words[static_cast<std::size_t>(q)]) {
                    const TensorElement product = odot(*omega, x, y);
                    const auto composed = compose(word_to_path(x), word_to_path(y));
                    if (!composed) {
                        if (!product.is_zero()) r.multiplicative = false;
                        continue;
                    }
                    if (product.size() != 1 || !product.begin()->second.is_one() ||
                        !(word_to_path(product.begin()->first) == *composed)) {
                        r.multiplicative = false;
                    }
                }
    return r;
}

namespace {

// (x1, y1, ..., xn, yn) -> (x1, y1 x2, ..., y_{n-1} xn, yn)
TensorElement balanced_to_current(const AlgebraSpec& omega, const Word& w) {
    TensorElement out(Word{w.front()});
    for (std::size_t a = 1; a + 1 < w.size(); a += 2) {
        TensorElement next;
        for (const auto& [prefix, c] : out)
            for (const auto& [k, pc] : omega.product(w[a], w[a + 1])) {
                Word v = prefix;
                v.push_back(k);
                next.add(std::move(v), c * pc);
            }
        out = std::move(next);
    }
    TensorElement last;
    for (const auto& [prefix, c] : out) {
        Word v = prefix;
        v.push_back(w.back());
        last.add(std::move(v), c);
    }
    return last;
}

TensorElement balanced_to_current(const AlgebraSpec& omega, const TensorElement& t) {
    TensorElement out;
    for (const auto& [w, c] : t) out.add_scaled(balanced_to_current(omega, w), c);
    return out;
}

// Replaces position pos of w by the basis expansion of v.
TensorElement substitute(const Word& w, std::size_t pos, const BasisVector& v) {
    TensorElement out;
    for (const auto& [k, c] : v) {
        Word u = w;
        u[pos] = k;
        out.add(std::move(u), c);
    }
    return out;
}

}  // namespace

BimoduleReport bimodule_iso_check(const OmegaPtr& omega, int max_grade) {
    if (!detect_unit(omega)) throw PreconditionError("bimodule_iso_check: Omega has no unit");
    if (max_grade < 0) throw StructuralError("bimodule_iso_check: negative grade");
    const int dim = omega->dim();
    BimoduleReport r;
    r.well_defined = true;
    r.surjective = true;
    r.multiplicative = true;
    r.quotient_dims.push_back(static_cast<std::size_t>(dim));
    r.current_dims.push_back(static_cast<std::size_t>(dim));
    for (int n = 1; n <= max_grade; ++n) {
        const auto words = all_words(dim, 2 * n);
        Indexer<Word> cols;
        RowReducer relations;
        for (const auto& w : words) {
            for (int k = 1; k < n; ++k) {
                const std::size_t left = static_cast<std::size_t>(2 * k - 1);  // y_k, 0-based
                for (int a = 0; a < dim; ++a) {
                    TensorElement rel = substitute(w, left, omega->product(w[left], a));
                    rel -= substitute(w, left + 1, omega->product(a, w[left + 1]));
                    if (!balanced_to_current(*omega, rel).is_zero()) r.well_defined = false;
                    relations.insert(cols.row(rel));
                }
            }
        }
        r.quotient_dims.push_back(words.size() - relations.rank());
        std::size_t current_dim = 1;
        for (int k = 0; k <= n; ++k) current_dim *= static_cast<std::size_t>(dim);
        r.current_dims.push_back(current_dim);
        Indexer<Word> image_cols;
        RowReducer images;
        for (const auto& w : words) images.insert(image_cols.row(balanced_to_current(*omega, w)));
        if (images.rank() != current_dim) r.surjective = false;
    }
    // Products: Omega acting on either side, and concatenation of balanced tensors.
    for (int p = 0; p <= max_grade; ++p)
        for (int q = 0; p + q <= max_grade; ++q)
            for (const auto& x : all_words(dim, p == 0 ? 1 : 2 * p))
                for (const auto& y : all_words(dim, q == 0 ? 1 : 2 * q)) {
                    TensorElement product;
                    if (p == 0 && q == 0) {
                        for (const auto& [k, c] : omega->product(x[0], y[0])) product.add(Word{k}, c);
                    } else if (p == 0) {
                        product = substitute(y, 0, omega->product(x[0], y[0]));
                    } else if (q == 0) {
                        product = substitute(x, x.size() - 1, omega->product(x.back(), y[0]));
                    } else {
                        product = TensorElement(concat(x, y));
                    }
                    const TensorElement lhs = (p == 0 && q == 0) ? product : balanced_to_current(*omega, product);
                    const TensorElement fx = p == 0 ? TensorElement(x) : balanced_to_current(*omega, x);
                    const TensorElement fy = q == 0 ? TensorElement(y) : balanced_to_current(*omega, y);
                    if (lhs != odot(*omega, fx, fy)) r.multiplicative = false;
                }
    return r;
}

std::optional<int> degeneration_remainder_degree(int i, int j, int k, int l, const Word& x, const Word& y,
                                                 const Rational& s, Evaluator& ev) {
    const AlgebraSpec& omega = *ev.context().omega();
    UElement remainder = commutator(ev.generator(TGen{i, j, x, s}), ev.generator(TGen{k, l, y, s}));
    if (k == j) {
        for (const auto& [w, c] : odot(omega, x, y)) remainder -= c * ev.generator(TGen{i, l, w, s});
    }
    if (i == l) {
        for (const auto& [w, c] : odot(omega, y, x)) remainder += c * ev.generator(TGen{k, j, w, s});
    }
    const int d = ev.d();
    const int max_len = static_cast<int>(x.size() + y.size()) - 1;
    std::vector<int> weight(static_cast<std::size_t>(d), 0);
    ++weight[static_cast<std::size_t>(i - 1)];
    --weight[static_cast<std::size_t>(j - 1)];
    ++weight[static_cast<std::size_t>(k - 1)];
    --weight[static_cast<std::size_t>(l - 1)];
    std::vector<OrderedMonomial> candidates;
    for (auto& m : ordered_monomials(d, omega.dim(), max_len, max_len, s)) {
        if (gl_weight(m, d) == weight) candidates.push_back(std::move(m));
    }
    auto expansion = expand(remainder, candidates, ev);
    if (!expansion) return std::nullopt;
    int top = -1;
    for (const auto& [m, c] : *expansion) top = std::max(top, shifted_degree(m));
    return top;
}

DegenerationReport degeneration_check(int i, int j, int k, int l, const Word& x, const Word& y, const OmegaPtr& omega,
                                      int d, const Rational& s, int n) {
    const int needed = d + static_cast<int>(x.size() + y.size());
    if (n < needed) {
        throw PreconditionError("degeneration_check: N=" + std::to_string(n) + " below d + |x| + |y| = " +
                                std::to_string(needed));
    }
    DegenerationReport r;
    r.n = n;
    r.bound = static_cast<int>(x.size() + y.size()) - 3;
    Evaluator ev_n(GlContext(omega, n), d);
    Evaluator ev_n1(GlContext(omega, n + 1), d);
    const auto top_n = degeneration_remainder_degree(i, j, k, l, x, y, s, ev_n);
    const auto top_n1 = degeneration_remainder_degree(i, j, k, l, x, y, s, ev_n1);
    r.expressible_n = top_n.has_value();
    r.expressible_n1 = top_n1.has_value();
    r.max_shifted_n = top_n.value_or(-1);
    r.max_shifted_n1 = top_n1.value_or(-1);
    r.status = stabilize(top_n && *top_n <= r.bound, top_n1 && *top_n1 <= r.bound);
    return r;
}

}  // namespace yangian
