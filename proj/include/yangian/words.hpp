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
// Words over the basis of an algebra: the free algebra T(Omega), compositions,
// coagulation and cyclic coinvariants.

#ifndef YANGIAN_WORDS_HPP
#define YANGIAN_WORDS_HPP

#include <string>
#include <vector>

#include "yangian/omega.hpp"
#include "yangian/sparse.hpp"

namespace yangian {

// Sequence of basis indices; the empty word is the unit of T(Omega).
using Word = std::vector<int>;

// Length first, then lexicographic.
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

using TensorElement = LinComb<Word, WordOrder>;

struct Composition {
    std::vector<int> parts;

    int weight() const;  // |nu|
    int length() const { return static_cast<int>(parts.size()); }
    friend bool operator==(const Composition&, const Composition&) = default;
};

// All 2^(m-1) compositions of m, lexicographic by part sequence.
std::vector<Composition> compositions(int m);

// Block products x_1...x_{nu_1}, ... in Omega (left-nested).
std::vector<OmegaElement> coagulate(const std::vector<OmegaElement>& x, const Composition& nu);

// Multilinear expansion of coagulate over basis words.
TensorElement coagulate_word(const AlgebraSpec& omega, const Word& w, const Composition& nu);

TensorElement concat(const TensorElement& a, const TensorElement& b);
Word concat(const Word& a, const Word& b);

// Expands a tensor product of coordinate vectors into basis words.
TensorElement expand_tensor(const std::vector<BasisVector>& factors);

struct CyclicWord {
    Word rep;  // least rotation
    friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
    friend bool operator<(const CyclicWord& a, const CyclicWord& b) { return WordOrder{}(a.rep, b.rep); }
};

CyclicWord cyclic_canonical(const Word& w);

using CyclicElement = LinComb<CyclicWord>;
CyclicElement project_cyclic(const TensorElement& t);

// Every word of the given length over dim letters, lexicographic.
std::vector<Word> all_words(int dim, int length);
// Every word with min_len <= length <= max_len, ordered by WordOrder.
std::vector<Word> all_words_up_to(int dim, int min_len, int max_len);

// Number of rotation classes of words of length m over dim letters.
long long necklace_count(int dim, int m);

std::string word_to_string(const AlgebraSpec& omega, const Word& w);

}  // namespace yangian

#endif  // YANGIAN_WORDS_HPP
