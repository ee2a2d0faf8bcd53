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
// Sparse formal linear combinations over exact rationals.

#ifndef YANGIAN_SPARSE_HPP
#define YANGIAN_SPARSE_HPP

#include <functional>
#include <map>
#include <utility>

#include "yangian/rational.hpp"

namespace yangian {

/* Finite linear combination sum_k c_k [k] with ordered keys.
 * Zero coefficients are never stored, so equality of two combinations is
 * equality of their term maps.
 */
template <class Key, class Compare = std::less<Key>>
class LinComb {
public:
    using map_type = std::map<Key, Rational, Compare>;
    using const_iterator = typename map_type::const_iterator;

    LinComb() = default;
    LinComb(const Key& k, const Rational& c = Rational(1)) { add(k, c); }  // NOLINT: a key is its own basis vector

    void add(const Key& k, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add(Key&& k, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(k), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void add_scaled(const LinComb& o, const Rational& c) {
        if (c.is_zero()) return;
        for (const auto& [k, v] : o.terms_) add(k, v * c);
    }

    Rational coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Removes and returns the smallest term.  Precondition: not zero.
    std::pair<Key, Rational> pop_first() {
        auto node = terms_.extract(terms_.begin());
        return {std::move(node.key()), std::move(node.mapped())};
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const map_type& terms() const { return terms_; }

    LinComb& operator+=(const LinComb& o) {
        add_scaled(o, Rational(1));
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        add_scaled(o, Rational(-1));
        return *this;
    }
    LinComb& operator*=(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& kv : terms_) kv.second *= c;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Rational& c) { return a *= c; }
    friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }
    friend LinComb operator-(LinComb a) { return a *= Rational(-1); }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

    // Applies a linear map given on basis keys: f(key) -> LinComb<K2>.
    template <class Out, class F>
    Out map_linear(F&& f) const {
        Out out;
        for (const auto& [k, c] : terms_) out.add_scaled(f(k), c);
        return out;
    }

private:
    map_type terms_;
};

}  // namespace yangian

#endif  // YANGIAN_SPARSE_HPP
