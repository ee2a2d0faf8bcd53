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
// The graded algebra with the odot product, the Lie algebra gl(d) over it, and
// finite checks of its structure and of the degeneration of Y_d(Omega) onto it.

#ifndef YANGIAN_CURRENT_HPP
#define YANGIAN_CURRENT_HPP

#include <optional>
#include <vector>

#include "yangian/omega.hpp"
#include "yangian/words.hpp"
#include "yangian/yangian.hpp"

namespace yangian {

// Elements are TensorElements over words of length >= 1; a word of length n + 1 has grade n.
// (x_1..x_m) odot (y_1..y_n) = (x_1..x_{m-1}, x_m y_1, y_2..y_n).  Empty words are rejected.
TensorElement odot(const AlgebraSpec& omega, const Word& x, const Word& y);
TensorElement odot(const AlgebraSpec& omega, const TensorElement& x, const TensorElement& y);

struct CurrentKey {
    int i = 1;
    int j = 1;
    Word word;
    friend bool operator==(const CurrentKey&, const CurrentKey&) = default;
};

struct CurrentKeyOrder {
    bool operator()(const CurrentKey& a, const CurrentKey& b) const;
};

using GlCurrent = LinComb<CurrentKey, CurrentKeyOrder>;

GlCurrent current(int i, int j, const TensorElement& x);

// [E_ij (x) x, E_kl (x) y] = delta_jk E_il (x) (x odot y) - delta_li E_kj (x) (y odot x).
GlCurrent gl_current_bracket(const AlgebraSpec& omega, int d, const GlCurrent& a, const GlCurrent& b);

// The unit of the graded algebra, if Omega has one and it acts as a unit on grades <= max_grade.
std::optional<TensorElement> current_unit(const OmegaPtr& omega, int max_grade);

// d^2 dim(Omega)^(n+1)
long long graded_dim(int dim, int d, int n);
// Number of distinct basis keys (i, j, word) of grade n.
long long enumerate_current_basis(int dim, int d, int n);

struct PathAlgebraReport {
    std::vector<long long> path_counts;  // paths of each length in the full quiver on L vertices
    std::vector<long long> word_counts;  // basis words of each grade
    bool bijective = false;
    bool multiplicative = false;
    bool ok() const { return bijective && multiplicative; }
};

// Compares the odot algebra over C^L with the path algebra of the quiver with one
// edge i -> j for every ordered pair, up to the given grade.
PathAlgebraReport path_algebra_iso_check(int vertices, int max_grade);

struct BimoduleReport {
    std::vector<std::size_t> quotient_dims;  // balanced tensor powers of Omega (x) Omega, grades 0..max
    std::vector<std::size_t> current_dims;   // dim Omega^(n+1)
    bool well_defined = false;  // the comparison map kills the balancing relations
    bool surjective = false;
    bool multiplicative = false;
    bool ok() const { return well_defined && surjective && multiplicative && quotient_dims == current_dims; }
};

// Throws PreconditionError when Omega has no unit.
BimoduleReport bimodule_iso_check(const OmegaPtr& omega, int max_grade);

struct DegenerationReport {
    int n = 0;
    int bound = 0;  // |x| + |y| - 3
    bool expressible_n = false;
    bool expressible_n1 = false;
    int max_shifted_n = -1;   // largest shifted degree in the remainder; -1 when it vanishes
    int max_shifted_n1 = -1;
    Stabilization status = Stabilization::mismatch;
};

// [t_ij(x; N; s), t_kl(y; N; s)] - delta_kj t_il(x odot y) + delta_il t_kj(y odot x),
// expanded over ordered monomials; passes when every term has shifted degree <= |x| + |y| - 3.
// Returns the largest shifted degree at N, or nullopt if the remainder is not in the span.
std::optional<int> degeneration_remainder_degree(int i, int j, int k, int l, const Word& x, const Word& y,
                                                 const Rational& s, Evaluator& ev);
// Throws PreconditionError unless N >= d + |x| + |y|.
DegenerationReport degeneration_check(int i, int j, int k, int l, const Word& x, const Word& y, const OmegaPtr& omega,
                                      int d, const Rational& s, int n);

}  // namespace yangian

#endif  // YANGIAN_CURRENT_HPP
