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

#include "yangian/linalg.hpp"

namespace yangian {

SparseRow axpy(const SparseRow& row, const Rational& c, const SparseRow& other) {
    if (c.is_zero()) return row;
    SparseRow out;
    out.reserve(row.size() + other.size());
    auto a = row.begin();
    auto b = other.begin();
    while (a != row.end() || b != other.end()) {
        if (b == other.end() || (a != row.end() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == row.end() || b->first < a->first) {
            out.emplace_back(b->first, c * b->second);
            ++b;
        } else {
            Rational v = a->second + c * b->second;
            if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    return out;
}

SparseRow RowReducer::reduce(SparseRow v, SparseRow* combo) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
        auto it = pivot_row_.find(v[pos].first);
        if (it == pivot_row_.end()) {
            ++pos;
            continue;
        }
        // Stored rows only touch indices >= their pivot, so entries before pos stay reduced.
        Rational c = v[pos].second;
        v = axpy(v, -c, rows_[it->second]);
        if (combo != nullptr && track_) *combo = axpy(*combo, c, combos_[it->second]);
    }
    return v;
}

std::optional<SparseRow> RowReducer::insert(SparseRow v) {
    const std::size_t id = inserted_++;
    SparseRow combo;
    SparseRow residual = reduce(std::move(v), track_ ? &combo : nullptr);
    SparseRow self{{id, Rational(1)}};
    if (residual.empty()) {
        if (!track_) return SparseRow{};
        return axpy(self, Rational(-1), combo);
    }
    Rational inv = Rational(1) / residual.front().second;
    for (auto& e : residual) e.second *= inv;
    pivot_row_.emplace(residual.front().first, rows_.size());
    rows_.push_back(std::move(residual));
    if (track_) {
        SparseRow c = axpy(self, Rational(-1), combo);
        for (auto& e : c) e.second *= inv;
        combos_.push_back(std::move(c));
    }
    return std::nullopt;
}

std::size_t rank_of(const std::vector<SparseRow>& rows) {
    RowReducer r;
    for (const auto& row : rows) r.insert(row);
    return r.rank();
}

bool same_row_space(const std::vector<SparseRow>& a, const std::vector<SparseRow>& b) {
    RowReducer ra;
    for (const auto& row : a) ra.insert(row);
    for (const auto& row : b) {
        if (!ra.reduce(row).empty()) return false;
    }
    return rank_of(b) == ra.rank();
}

std::optional<std::vector<Rational>> solve_dense(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a.front().size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        Rational inv = Rational(1) / a[r][c];
        for (auto& x : a[r]) x *= inv;
        b[r] *= inv;
        for (std::size_t q = 0; q < rows; ++q) {
            if (q == r || a[q][c].is_zero()) continue;
            Rational f = a[q][c];
            for (std::size_t k = c; k < cols; ++k) a[q][k] -= f * a[r][k];
            b[q] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t q = r; q < rows; ++q) {
        if (!b[q].is_zero()) return std::nullopt;
    }
    std::vector<Rational> x(cols);
    for (std::size_t q = 0; q < r; ++q) x[pivot_col[q]] = b[q];
    return x;
}

SparseRow normalize_dependency(SparseRow v) {
    if (v.empty()) return v;
    mpz_class lcm_den = 1;
    for (const auto& e : v) {
        mpq_class q = e.second.to_mpq();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
    }
    mpz_class g = 0;
    for (const auto& e : v) {
        mpq_class q = e.second.to_mpq() * lcm_den;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num().get_mpz_t());
    }
    mpq_class scale(lcm_den, g);
    if (v.front().second.sign() < 0) scale = -scale;
    Rational s(scale);
    for (auto& e : v) e.second *= s;
    return v;
}

}  // namespace yangian
