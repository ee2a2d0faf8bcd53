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

#include "yangian/words.hpp"

#include <algorithm>
#include <numeric>

#include "yangian/errors.hpp"

namespace yangian {

int Composition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

namespace {

void compositions_rec(int remaining, std::vector<int>& prefix, std::vector<Composition>& out) {
    if (remaining == 0) {
        out.push_back({prefix});
        return;
    }
    for (int p = 1; p <= remaining; ++p) {
        prefix.push_back(p);
        compositions_rec(remaining - p, prefix, out);
        prefix.pop_back();
    }
}

void check_fits(std::size_t length, const Composition& nu) {
    if (nu.weight() != static_cast<int>(length)) {
        throw StructuralError("coagulate: composition weight " + std::to_string(nu.weight()) + " does not match length " +
                              std::to_string(length));
    }
    for (int p : nu.parts) {
        if (p < 1) throw StructuralError("coagulate: composition parts must be positive");
    }
}

}  // namespace

std::vector<Composition> compositions(int m) {
    if (m < 1) throw StructuralError("compositions: m must be at least 1");
    std::vector<Composition> out;
    std::vector<int> prefix;
    compositions_rec(m, prefix, out);
    return out;
}

std::vector<OmegaElement> coagulate(const std::vector<OmegaElement>& x, const Composition& nu) {
    check_fits(x.size(), nu);
    std::vector<OmegaElement> y;
    std::size_t pos = 0;
    for (int p : nu.parts) {
        OmegaElement block = x[pos++];
        for (int q = 1; q < p; ++q) block = multiply(block, x[pos++]);
        y.push_back(std::move(block));
    }
    return y;
}

TensorElement expand_tensor(const std::vector<BasisVector>& factors) {
    TensorElement acc(Word{});
    for (const auto& f : factors) {
        TensorElement next;
        for (const auto& [w, c] : acc) {
            for (const auto& [b, cb] : f) {
                Word v = w;
                v.push_back(b);
                next.add(std::move(v), c * cb);
            }
        }
        acc = std::move(next);
        if (acc.is_zero()) break;
    }
    return acc;
}

TensorElement coagulate_word(const AlgebraSpec& omega, const Word& w, const Composition& nu) {
    check_fits(w.size(), nu);
    std::vector<BasisVector> blocks;
    std::size_t pos = 0;
    for (int p : nu.parts) {
        BasisVector block(w[pos++]);
        for (int q = 1; q < p; ++q) block = omega.multiply(block, BasisVector(w[pos++]));
        blocks.push_back(std::move(block));
    }
    return expand_tensor(blocks);
}

Word concat(const Word& a, const Word& b) {
    Word out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

TensorElement concat(const TensorElement& a, const TensorElement& b) {
    TensorElement out;
    for (const auto& [wa, ca] : a) {
        for (const auto& [wb, cb] : b) out.add(concat(wa, wb), ca * cb);
    }
    return out;
}

CyclicWord cyclic_canonical(const Word& w) {
    if (w.empty()) throw StructuralError("cyclic_canonical: empty word has no rotation class");
    Word best = w;
    Word rot = w;
    for (std::size_t r = 1; r < w.size(); ++r) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return {best};
}

CyclicElement project_cyclic(const TensorElement& t) {
    CyclicElement out;
    for (const auto& [w, c] : t) {
        if (w.empty()) throw StructuralError("project_cyclic: support contains the empty word");
        out.add(cyclic_canonical(w), c);
    }
    return out;
}

std::vector<Word> all_words(int dim, int length) {
    std::vector<Word> out;
    Word w(static_cast<std::size_t>(length), 0);
    while (true) {
        out.push_back(w);
        int p = length - 1;
        while (p >= 0 && w[static_cast<std::size_t>(p)] == dim - 1) {
            w[static_cast<std::size_t>(p)] = 0;
            --p;
        }
        if (p < 0) break;
        ++w[static_cast<std::size_t>(p)];
    }
    return out;
}

std::vector<Word> all_words_up_to(int dim, int min_len, int max_len) {
    std::vector<Word> out;
    for (int len = min_len; len <= max_len; ++len) {
        auto ws = all_words(dim, len);
        out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
}

long long necklace_count(int dim, int m) {
    // (1/m) sum_{e | m} phi(e) dim^(m/e)
    auto phi = [](int n) {
        int r = n;
        for (int p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                while (n % p == 0) n /= p;
                r -= r / p;
            }
        }
        if (n > 1) r -= r / n;
        return r;
    };
    long long total = 0;
    for (int e = 1; e <= m; ++e) {
        if (m % e != 0) continue;
        long long pw = 1;
        for (int q = 0; q < m / e; ++q) pw *= dim;
        total += phi(e) * pw;
    }
    return total / m;
}

std::string word_to_string(const AlgebraSpec& omega, const Word& w) {
    if (w.empty()) return "()";
    std::string s = "(";
    for (std::size_t a = 0; a < w.size(); ++a) {
        if (a > 0) s += ",";
        s += omega.label(w[a]);
    }
    return s + ")";
}

}  // namespace yangian
