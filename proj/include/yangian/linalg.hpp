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
// Exact sparse Gaussian elimination: rank, membership, dependencies, solving.

#ifndef YANGIAN_LINALG_HPP
#define YANGIAN_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "yangian/rational.hpp"
#include "yangian/sparse.hpp"

namespace yangian {

// Sorted by index, no zero entries.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// row += c * other (both sorted).
SparseRow axpy(const SparseRow& row, const Rational& c, const SparseRow& other);

/* Incremental echelon form over Q.
 *
 * Every stored row has a distinct pivot (its smallest index) with pivot
 * coefficient 1.  With tracking enabled each stored row also remembers which
 * combination of inserted vectors produced it, so a vector that reduces to zero
 * yields an explicit linear dependency and reduce() can solve for coordinates.
 */
class RowReducer {
public:
    explicit RowReducer(bool track = false) : track_(track) {}

    // Returns nullopt if the vector was independent (and stored), otherwise the
    // dependency: a combination over insertion indices (including the new one,
    // with coefficient 1) summing to zero.  Without tracking the dependency is empty.
    std::optional<SparseRow> insert(SparseRow v);

    // Fully reduces v against the stored rows.  When tracking, *combo receives the
    // combination of inserted vectors that was subtracted: v = residual + sum combo.
    SparseRow reduce(SparseRow v, SparseRow* combo = nullptr) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t inserted() const { return inserted_; }

private:
    bool track_;
    std::size_t inserted_ = 0;
    std::vector<SparseRow> rows_;
    std::vector<SparseRow> combos_;
    std::unordered_map<std::size_t, std::size_t> pivot_row_;
};

// Maps arbitrary ordered keys to dense column indices.
template <class Key>
class Indexer {
public:
    std::size_t index(const Key& k) {
        auto [it, inserted] = ids_.try_emplace(k, keys_.size());
        if (inserted) keys_.push_back(k);
        return it->second;
    }
    std::optional<std::size_t> find(const Key& k) const {
        auto it = ids_.find(k);
        if (it == ids_.end()) return std::nullopt;
        return it->second;
    }
    const Key& key(std::size_t i) const { return keys_[i]; }
    std::size_t size() const { return keys_.size(); }

    template <class Compare>
    SparseRow row(const LinComb<Key, Compare>& v) {
        SparseRow r;
        r.reserve(v.size());
        for (const auto& [k, c] : v) r.emplace_back(index(k), c);
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return r;
    }

private:
    std::map<Key, std::size_t> ids_;
    std::vector<Key> keys_;
};

// Rank of a family of sparse rows.
std::size_t rank_of(const std::vector<SparseRow>& rows);

// True iff the row spaces of a and b coincide.
bool same_row_space(const std::vector<SparseRow>& a, const std::vector<SparseRow>& b);

// Solves A x = b densely; free variables are set to zero.  nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_dense(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

// Scales a dependency to a primitive integer vector whose first nonzero entry is positive.
SparseRow normalize_dependency(SparseRow v);

}  // namespace yangian

#endif  // YANGIAN_LINALG_HPP
