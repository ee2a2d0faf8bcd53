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

#include "yangian/double_poisson.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "yangian/errors.hpp"
#include "yangian/linalg.hpp"

namespace yangian {

bool WordTupleOrder::operator()(const WordPair& a, const WordPair& b) const {
    if (a.first != b.first) return WordOrder{}(a.first, b.first);
    return WordOrder{}(a.second, b.second);
}

bool WordTupleOrder::operator()(const WordTriple& a, const WordTriple& b) const {
    for (std::size_t k = 0; k < 3; ++k) {
        if (a[k] != b[k]) return WordOrder{}(a[k], b[k]);
    }
    return false;
}

namespace {

Word slice(const Word& w, std::size_t from, std::size_t to) {
    return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

// prefix (x) letter (x) suffix for each basis letter of the product.
void add_with_product(DoubleTensor& out, const Word& first, const Word& prefix, const BasisVector& product,
                      const Word& suffix, const Rational& c, bool product_in_first) {
    for (const auto& [k, pc] : product) {
        Word mid = prefix;
        mid.push_back(k);
        mid.insert(mid.end(), suffix.begin(), suffix.end());
        if (product_in_first) {
            out.add(WordPair{mid, first}, c * pc);
        } else {
            out.add(WordPair{first, mid}, c * pc);
        }
    }
}

}  // namespace

DoubleTensor double_bracket(const AlgebraSpec& omega, const Word& x, const Word& y) {
    DoubleTensor out;
    if (x.empty() || y.empty()) return out;
    const std::size_t m = x.size();
    const std::size_t n = y.size();
    for (std::size_t r = 0; r < m; ++r) {
        const Word x_before = slice(x, 0, r);
        const Word x_after = slice(x, r + 1, m);
        for (std::size_t s = 0; s < n; ++s) {
            const Word y_before = slice(y, 0, s);
            const Word y_after = slice(y, s + 1, n);
            // (y<s x>r) (x) (x<r (x_r y_s) y>s)
            add_with_product(out, concat(y_before, x_after), x_before, omega.product(x[r], y[s]), y_after, Rational(1),
                             false);
            // - (y<s (y_s x_r) x>r) (x) (x<r y>s)
            add_with_product(out, concat(x_before, y_after), y_before, omega.product(y[s], x[r]), x_after, Rational(-1),
                             true);
        }
    }
    return out;
}

DoubleTensor double_bracket(const AlgebraSpec& omega, const TensorElement& x, const TensorElement& y) {
    DoubleTensor out;
    for (const auto& [wx, cx] : x)
        for (const auto& [wy, cy] : y) out.add_scaled(double_bracket(omega, wx, wy), cx * cy);
    return out;
}

DoubleTensor flip(const DoubleTensor& t) {
    DoubleTensor out;
    for (const auto& [p, c] : t) out.add(WordPair{p.second, p.first}, c);
    return out;
}

DoubleTensor outer_left(const Word& b, const DoubleTensor& t) {
    DoubleTensor out;
    for (const auto& [p, c] : t) out.add(WordPair{concat(b, p.first), p.second}, c);
    return out;
}

DoubleTensor outer_right(const DoubleTensor& t, const Word& c) {
    DoubleTensor out;
    for (const auto& [p, k] : t) out.add(WordPair{p.first, concat(p.second, c)}, k);
    return out;
}

DoubleTensor inner_left(const Word& a, const DoubleTensor& t) {
    DoubleTensor out;
    for (const auto& [p, c] : t) out.add(WordPair{p.first, concat(a, p.second)}, c);
    return out;
}

DoubleTensor inner_right(const DoubleTensor& t, const Word& b) {
    DoubleTensor out;
    for (const auto& [p, c] : t) out.add(WordPair{concat(p.first, b), p.second}, c);
    return out;
}

std::optional<WordPair> check_skew(const AlgebraSpec& omega, int max_len) {
    const auto words = all_words_up_to(omega.dim(), 0, max_len);
    for (const auto& x : words)
        for (const auto& y : words) {
            if (double_bracket(omega, x, y) != -flip(double_bracket(omega, y, x))) return WordPair{x, y};
        }
    return std::nullopt;
}

std::optional<WordTriple> check_leibniz(const AlgebraSpec& omega, int max_len) {
    const auto words = all_words_up_to(omega.dim(), 0, max_len);
    for (const auto& a : words) {
        for (const auto& w : words) {
            const DoubleTensor lhs_second = double_bracket(omega, a, w);
            const DoubleTensor lhs_first = double_bracket(omega, w, a);
            for (std::size_t cut = 0; cut <= w.size(); ++cut) {
                const Word b = slice(w, 0, cut);
                const Word c = slice(w, cut, w.size());
                if (lhs_second != outer_right(double_bracket(omega, a, b), c) + outer_left(b, double_bracket(omega, a, c))) {
                    return WordTriple{a, b, c};
                }
                // w plays the product bc in the first argument, a the second argument
                if (lhs_first != inner_left(b, double_bracket(omega, c, a)) + inner_right(double_bracket(omega, b, a), c)) {
                    return WordTriple{b, c, a};
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

class BracketCache {
public:
    explicit BracketCache(const AlgebraSpec& omega) : omega_(omega) {}
    const DoubleTensor& operator()(const Word& a, const Word& b) {
        auto it = memo_.find(WordPair{a, b});
        if (it != memo_.end()) return it->second;
        return memo_.emplace(WordPair{a, b}, double_bracket(omega_, a, b)).first->second;
    }

private:
    const AlgebraSpec& omega_;
    std::map<WordPair, DoubleTensor, WordTupleOrder> memo_;
};

// {{a, {{b, c}}}}_L
TripleTensor left_substitution(BracketCache& bracket, const Word& a, const Word& b, const Word& c) {
    TripleTensor out;
    for (const auto& [uv, k] : bracket(b, c)) {
        for (const auto& [pq, k2] : bracket(a, uv.first)) {
            out.add(WordTriple{pq.first, pq.second, uv.second}, k * k2);
        }
    }
    return out;
}

// tau^power (u, v, w) with tau(u, v, w) = (w, u, v)
TripleTensor rotate(const TripleTensor& t, int power) {
    TripleTensor out;
    for (const auto& [uvw, k] : t) {
        WordTriple r = uvw;
        for (int p = 0; p < power; ++p) r = WordTriple{r[2], r[0], r[1]};
        out.add(std::move(r), k);
    }
    return out;
}

TripleTensor jacobi_sum(BracketCache& bracket, const Word& a, const Word& b, const Word& c) {
    TripleTensor out = left_substitution(bracket, a, b, c);
    out += rotate(left_substitution(bracket, b, c, a), 1);
    out += rotate(left_substitution(bracket, c, a, b), 2);
    return out;
}

}  // namespace

TripleTensor double_jacobi(const AlgebraSpec& omega, const Word& a, const Word& b, const Word& c) {
    BracketCache bracket(omega);
    return jacobi_sum(bracket, a, b, c);
}

std::optional<WordTriple> check_double_jacobi(const AlgebraSpec& omega, int max_len) {
    BracketCache bracket(omega);
    const auto words = all_words_up_to(omega.dim(), 1, max_len);
    for (const auto& a : words)
        for (const auto& b : words)
            for (const auto& c : words) {
                if (!jacobi_sum(bracket, a, b, c).is_zero()) return WordTriple{a, b, c};
            }
    return std::nullopt;
}

PvdwResult pvdw_equivalence(const AlgebraSpec& omega, int max_len) {
    PvdwResult r;
    r.associativity_witness = check_associativity(omega);
    r.jacobi_witness = check_double_jacobi(omega, max_len);
    return r;
}

namespace {

using Dense = std::vector<std::vector<Rational>>;

std::vector<std::string> default_labels(int dim) {
    std::vector<std::string> labels;
    for (int b = 0; b < dim; ++b) labels.push_back("f" + std::to_string(b + 1));
    return labels;
}

// Structure constants of the same algebra in the basis f_a = sum_b P[a][b] e_b.
OmegaPtr change_basis(const AlgebraSpec& spec, const Dense& p, const std::string& name) {
    const int dim = spec.dim();
    // Row k of p_inv expresses e_k in the f basis: e_k = sum_a p_inv[k][a] f_a.
    Dense p_inv(static_cast<std::size_t>(dim), std::vector<Rational>(static_cast<std::size_t>(dim)));
    Dense pt(static_cast<std::size_t>(dim), std::vector<Rational>(static_cast<std::size_t>(dim)));
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) pt[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = p[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    for (int k = 0; k < dim; ++k) {
        std::vector<Rational> rhs(static_cast<std::size_t>(dim));
        rhs[static_cast<std::size_t>(k)] = Rational(1);
        // e_k = sum_a y_a f_a = sum_a y_a sum_b P[a][b] e_b  =>  P^T y = unit_k
        auto y = solve_dense(pt, rhs);
        if (!y) throw std::logic_error("change_basis: singular matrix");
        p_inv[static_cast<std::size_t>(k)] = *y;
    }
    auto coords = [&](int a) {
        BasisVector v;
        for (int b = 0; b < dim; ++b) v.add(b, p[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
        return v;
    };
    std::vector<TableEntry> table;
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            const BasisVector prod_e = spec.multiply(coords(a), coords(b));
            BasisVector prod_f;
            for (const auto& [k, c] : prod_e)
                for (int f = 0; f < dim; ++f) prod_f.add(f, c * p_inv[static_cast<std::size_t>(k)][static_cast<std::size_t>(f)]);
            if (!prod_f.is_zero()) table.push_back({a, b, prod_f});
        }
    return std::make_shared<AlgebraSpec>(name, default_labels(dim), table);
}

OmegaPtr table_from(const std::string& name, int dim, const std::vector<TableEntry>& table) {
    return std::make_shared<AlgebraSpec>(name, default_labels(dim), table);
}

std::vector<OmegaPtr> associative_seeds() {
    return {
        direct_sum_C(1),
        direct_sum_C(2),
        direct_sum_C(3),
        null_algebra(2),
        null_algebra(3),
        // C[x]/(x^2), basis 1, x
        table_from("dual_numbers", 2, {{0, 0, BasisVector(0)}, {0, 1, BasisVector(1)}, {1, 0, BasisVector(1)}}),
        // C[x]/(x^3), basis 1, x, x^2
        table_from("truncated_poly_3", 3,
                   {{0, 0, BasisVector(0)}, {0, 1, BasisVector(1)}, {0, 2, BasisVector(2)}, {1, 0, BasisVector(1)},
                    {1, 1, BasisVector(2)}, {2, 0, BasisVector(2)}}),
        // upper triangular 2x2 matrices, basis E11, E12, E22
        table_from("upper_triangular_2", 3,
                   {{0, 0, BasisVector(0)}, {0, 1, BasisVector(1)}, {1, 2, BasisVector(1)}, {2, 2, BasisVector(2)}}),
        // x^2 = y, all other products zero
        table_from("square_zero_chain", 2, {{0, 0, BasisVector(1)}}),
        // left-zero semigroup algebra: x_i x_j = x_i
        table_from("left_zero_2", 2, {{0, 0, BasisVector(0)}, {0, 1, BasisVector(0)}, {1, 0, BasisVector(1)}, {1, 1, BasisVector(1)}}),
    };
}

}  // namespace

std::vector<OmegaPtr> fuzz_tables(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(-2, 2);
    std::uniform_int_distribution<int> coin(0, 2);
    std::vector<OmegaPtr> out{nonassoc_witness()};
    const auto seeds = associative_seeds();
    int made = 0;
    while (static_cast<int>(out.size()) < count) {
        ++made;
        if (made % 2 == 1) {
            const auto& base = seeds[static_cast<std::size_t>(made / 2) % seeds.size()];
            const int dim = base->dim();
            Dense p;
            while (true) {
                p.assign(static_cast<std::size_t>(dim), std::vector<Rational>(static_cast<std::size_t>(dim)));
                std::vector<SparseRow> rows;
                for (int a = 0; a < dim; ++a) {
                    SparseRow r;
                    for (int b = 0; b < dim; ++b) {
                        p[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = Rational(small(rng));
                        if (!p[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].is_zero())
                            r.emplace_back(static_cast<std::size_t>(b), p[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
                    }
                    rows.push_back(r);
                }
                if (rank_of(rows) == static_cast<std::size_t>(dim)) break;
            }
            out.push_back(change_basis(*base, p, "basis_change(" + base->name() + ")#" + std::to_string(made)));
        } else {
            std::uniform_int_distribution<int> dims(1, 3);
            const int dim = dims(rng);
            std::vector<TableEntry> table;
            for (int a = 0; a < dim; ++a)
                for (int b = 0; b < dim; ++b) {
                    if (coin(rng) == 0) continue;
                    BasisVector v;
                    for (int k = 0; k < dim; ++k) {
                        if (coin(rng) == 0) v.add(k, Rational(small(rng)));
                    }
                    if (!v.is_zero()) table.push_back({a, b, v});
                }
            out.push_back(table_from("random_table#" + std::to_string(made), dim, table));
        }
    }
    return out;
}

bool PGenOrder::operator()(const PGen& a, const PGen& b) const {
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    return WordOrder{}(a.word, b.word);
}

bool PMonomialOrder::operator()(const PMonomial& a, const PMonomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), PGenOrder{});
}

bool NMonomialOrder::operator()(const NMonomial& a, const NMonomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

template <class Mono, class Less>
Mono merge_sorted(const Mono& a, const Mono& b) {
    Mono out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), Less{});
    return out;
}

template <class Mono>
Mono without(const Mono& m, std::size_t k) {
    Mono out = m;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
}

// Leibniz extension of a bracket on single factors to commutative polynomials.
template <class Poly, class Mono, class Less, class Bracket>
Poly leibniz_extend(const Poly& f, const Poly& g, Bracket&& bracket) {
    Poly out;
    for (const auto& [mf, cf] : f) {
        for (const auto& [mg, cg] : g) {
            for (std::size_t a = 0; a < mf.size(); ++a) {
                for (std::size_t b = 0; b < mg.size(); ++b) {
                    const Mono rest = merge_sorted<Mono, Less>(without(mf, a), without(mg, b));
                    for (const auto& [mb, cb] : bracket(mf[a], mg[b])) {
                        out.add(merge_sorted<Mono, Less>(mb, rest), cf * cg * cb);
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace

SPoly p_poly(const PGen& p) { return SPoly(PMonomial{p}); }

SPoly multiply(const SPoly& a, const SPoly& b) {
    SPoly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) out.add(merge_sorted<PMonomial, PGenOrder>(ma, mb), ca * cb);
    return out;
}

SPoly poisson_smd(const AlgebraSpec& omega, int d, const PGen& p, const PGen& q) {
    for (const PGen* g : {&p, &q}) {
        if (g->i < 1 || g->j < 1 || g->i > d || g->j > d) {
            throw StructuralError("poisson_smd: index (" + std::to_string(g->i) + "," + std::to_string(g->j) +
                                  ") out of range for d=" + std::to_string(d));
        }
        if (g->word.empty()) throw StructuralError("poisson_smd: empty word");
    }
    const int i = p.i, j = p.j, k = q.i, l = q.j;
    SPoly out;
    for (const auto& [uv, c] : double_bracket(omega, p.word, q.word)) {
        // p_kj(u) p_il(v), an empty slot contributing delta
        PMonomial m;
        Rational coeff = c;
        if (uv.first.empty()) {
            if (k != j) continue;
        } else {
            m.push_back(PGen{k, j, uv.first});
        }
        if (uv.second.empty()) {
            if (i != l) continue;
        } else {
            m.push_back(PGen{i, l, uv.second});
        }
        std::sort(m.begin(), m.end(), PGenOrder{});
        out.add(std::move(m), coeff);
    }
    return out;
}

SPoly poisson_smd(const AlgebraSpec& omega, int d, const SPoly& f, const SPoly& g) {
    return leibniz_extend<SPoly, PMonomial, PGenOrder>(
        f, g, [&](const PGen& p, const PGen& q) { return poisson_smd(omega, d, p, q); });
}

NecklacePoly n_poly(const CyclicWord& c) { return NecklacePoly(NMonomial{c}); }

NecklacePoly multiply(const NecklacePoly& a, const NecklacePoly& b) {
    NecklacePoly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) out.add(merge_sorted<NMonomial, std::less<CyclicWord>>(ma, mb), ca * cb);
    return out;
}

CyclicElement trace_bracket(const AlgebraSpec& omega, const Word& a, const Word& b) {
    TensorElement products;
    for (const auto& [uv, c] : double_bracket(omega, a, b)) products.add(concat(uv.first, uv.second), c);
    return project_cyclic(products);
}

CyclicElement trace_bracket(const AlgebraSpec& omega, const CyclicWord& a, const CyclicWord& b) {
    return trace_bracket(omega, a.rep, b.rep);
}

NecklacePoly poisson_stc(const AlgebraSpec& omega, const NecklacePoly& f, const NecklacePoly& g) {
    return leibniz_extend<NecklacePoly, NMonomial, std::less<CyclicWord>>(f, g, [&](const CyclicWord& a, const CyclicWord& b) {
        NecklacePoly out;
        for (const auto& [c, k] : trace_bracket(omega, a, b)) out.add(NMonomial{c}, k);
        return out;
    });
}

bool symbol_match_smd_at(int i, int j, int k, int l, const Word& x, const Word& y, const Rational& s, Evaluator& ev) {
    const int degree = static_cast<int>(x.size() + y.size()) - 1;
    const UElement bracket = commutator(ev.generator(TGen{i, j, x, s}), ev.generator(TGen{k, l, y, s}));
    if (bracket.degree() > degree) return false;
    UElement image(ev.context());
    for (const auto& [m, c] : poisson_smd(*ev.context().omega(), ev.d(), PGen{i, j, x}, PGen{k, l, y})) {
        std::vector<TGen> factors;
        for (const auto& p : m) factors.push_back(TGen{p.i, p.j, p.word, s});
        image += c * ev.monomial(make_monomial(factors)).part_of_degree(degree);
    }
    return bracket.part_of_degree(degree) == image;
}

SymbolReport symbol_match_smd(int i, int j, int k, int l, const Word& x, const Word& y, const OmegaPtr& omega, int d,
                              const Rational& s, int n) {
    SymbolReport r;
    r.n = n;
    r.degree = static_cast<int>(x.size() + y.size()) - 1;
    r.headroom = n >= r.degree + d + 1;
    Evaluator ev_n(GlContext(omega, n), d);
    Evaluator ev_n1(GlContext(omega, n + 1), d);
    r.at_n = symbol_match_smd_at(i, j, k, l, x, y, s, ev_n);
    r.at_n1 = symbol_match_smd_at(i, j, k, l, x, y, s, ev_n1);
    r.status = stabilize(r.at_n, r.at_n1);
    return r;
}

UElement trace_element(const GlContext& ctx, const Word& w) {
    UElement out(ctx);
    for (int a = 1; a <= ctx.n(); ++a) out += e_elem(ctx, a, a, w);
    return out;
}

bool symbol_match_stc_at(const Word& x, const Word& y, const GlContext& ctx) {
    if (x.empty() || y.empty()) throw StructuralError("symbol_match_stc: words must be nonempty");
    const int degree = static_cast<int>(x.size() + y.size()) - 1;
    const UElement bracket = commutator(trace_element(ctx, x), trace_element(ctx, y));
    if (bracket.degree() > degree) return false;
    UElement image(ctx);
    for (const auto& [c, k] : trace_bracket(*ctx.omega(), x, y)) image += k * trace_element(ctx, c.rep).part_of_degree(degree);
    return bracket.part_of_degree(degree) == image;
}

SymbolReport symbol_match_stc(const Word& x, const Word& y, const OmegaPtr& omega, int n) {
    SymbolReport r;
    r.n = n;
    r.degree = static_cast<int>(x.size() + y.size()) - 1;
    r.headroom = n >= r.degree + 1;
    r.at_n = symbol_match_stc_at(x, y, GlContext(omega, n));
    r.at_n1 = symbol_match_stc_at(x, y, GlContext(omega, n + 1));
    r.status = stabilize(r.at_n, r.at_n1);
    return r;
}

}  // namespace yangian
