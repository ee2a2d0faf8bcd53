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
// The linear double Poisson bracket on T(Omega), its axioms, and the induced
// Poisson brackets on S(M_d(Omega)) and S(Tc+(Omega)).

#ifndef YANGIAN_DOUBLE_POISSON_HPP
#define YANGIAN_DOUBLE_POISSON_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "yangian/omega.hpp"
#include "yangian/ugl.hpp"
#include "yangian/words.hpp"
#include "yangian/yangian.hpp"

namespace yangian {

using WordPair = std::pair<Word, Word>;
using WordTriple = std::array<Word, 3>;

struct WordTupleOrder {
    bool operator()(const WordPair& a, const WordPair& b) const;
    bool operator()(const WordTriple& a, const WordTriple& b) const;
};

using DoubleTensor = LinComb<WordPair, WordTupleOrder>;
using TripleTensor = LinComb<WordTriple, WordTupleOrder>;

DoubleTensor double_bracket(const AlgebraSpec& omega, const Word& x, const Word& y);
DoubleTensor double_bracket(const AlgebraSpec& omega, const TensorElement& x, const TensorElement& y);

// u (x) v -> v (x) u
DoubleTensor flip(const DoubleTensor& t);
// Outer bimodule structure: b (u (x) v) = bu (x) v, (u (x) v) c = u (x) vc.
DoubleTensor outer_left(const Word& b, const DoubleTensor& t);
DoubleTensor outer_right(const DoubleTensor& t, const Word& c);
// Inner bimodule structure: a * (u (x) v) = u (x) av, (u (x) v) * b = ub (x) v.
DoubleTensor inner_left(const Word& a, const DoubleTensor& t);
DoubleTensor inner_right(const DoubleTensor& t, const Word& b);

// The axioms on basis words of length <= max_len; each returns the first failing tuple.
std::optional<WordPair> check_skew(const AlgebraSpec& omega, int max_len);
// Second-argument rule {{a, bc}} = {{a, b}} c + b {{a, c}} and first-argument rule
// {{ab, c}} = a * {{b, c}} + {{a, c}} * b, over all splittings of basis words.
std::optional<WordTriple> check_leibniz(const AlgebraSpec& omega, int max_len);

// {{a, {{b, c}}}}_L + tau {{b, {{c, a}}}}_L + tau^2 {{c, {{a, b}}}}_L with
// {{a, u (x) v}}_L = {{a, u}} (x) v and tau(u (x) v (x) w) = w (x) u (x) v.
TripleTensor double_jacobi(const AlgebraSpec& omega, const Word& a, const Word& b, const Word& c);
std::optional<WordTriple> check_double_jacobi(const AlgebraSpec& omega, int max_len);

struct PvdwResult {
    std::optional<std::array<int, 3>> associativity_witness;
    std::optional<WordTriple> jacobi_witness;
    bool agree() const { return associativity_witness.has_value() == jacobi_witness.has_value(); }
};

PvdwResult pvdw_equivalence(const AlgebraSpec& omega, int max_len);

// Seeded corpus of dim <= 3 tables: basis changes of associative algebras, random
// sparse tables, and the non-associative witness.
std::vector<OmegaPtr> fuzz_tables(std::uint64_t seed, int count);

// p_ij(x) = E_ij (x) x in M_d(Omega).
struct PGen {
    int i = 1;
    int j = 1;
    Word word;
    friend bool operator==(const PGen&, const PGen&) = default;
};

struct PGenOrder {
    bool operator()(const PGen& a, const PGen& b) const;
};

// Sorted multiset of generators.
using PMonomial = std::vector<PGen>;
struct PMonomialOrder {
    bool operator()(const PMonomial& a, const PMonomial& b) const;
};
using SPoly = LinComb<PMonomial, PMonomialOrder>;

SPoly p_poly(const PGen& p);
SPoly multiply(const SPoly& a, const SPoly& b);

// sum p_kj({{x, y}}') p_il({{x, y}}''), p_ab(1) = delta_ab.  Throws StructuralError
// when an index exceeds d.
SPoly poisson_smd(const AlgebraSpec& omega, int d, const PGen& p, const PGen& q);
SPoly poisson_smd(const AlgebraSpec& omega, int d, const SPoly& f, const SPoly& g);

using NMonomial = std::vector<CyclicWord>;
struct NMonomialOrder {
    bool operator()(const NMonomial& a, const NMonomial& b) const;
};
using NecklacePoly = LinComb<NMonomial, NMonomialOrder>;

NecklacePoly n_poly(const CyclicWord& c);
NecklacePoly multiply(const NecklacePoly& a, const NecklacePoly& b);

// Class of the concatenated slots of {{a, b}} for the given lifts.
CyclicElement trace_bracket(const AlgebraSpec& omega, const Word& a, const Word& b);
CyclicElement trace_bracket(const AlgebraSpec& omega, const CyclicWord& a, const CyclicWord& b);
NecklacePoly poisson_stc(const AlgebraSpec& omega, const NecklacePoly& f, const NecklacePoly& g);

struct SymbolReport {
    int n = 0;
    int degree = 0;  // |x| + |y| - 1
    bool headroom = false;  // n >= degree + d + 1
    bool at_n = false;
    bool at_n1 = false;
    Stabilization status = Stabilization::mismatch;
};

// Top filtration part of [t_ij(x; N; s), t_kl(y; N; s)] against the image of
// {p_ij(x), p_kl(y)} under p_ab(w) -> t_ab(w; N; s).
bool symbol_match_smd_at(int i, int j, int k, int l, const Word& x, const Word& y, const Rational& s, Evaluator& ev);
SymbolReport symbol_match_smd(int i, int j, int k, int l, const Word& x, const Word& y, const OmegaPtr& omega, int d,
                              const Rational& s, int n);

// Sum over a <= N of e_aa(w; N).
UElement trace_element(const GlContext& ctx, const Word& w);
bool symbol_match_stc_at(const Word& x, const Word& y, const GlContext& ctx);
SymbolReport symbol_match_stc(const Word& x, const Word& y, const OmegaPtr& omega, int n);

}  // namespace yangian

#endif  // YANGIAN_DOUBLE_POISSON_HPP
