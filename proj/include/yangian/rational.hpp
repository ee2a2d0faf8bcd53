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
// Exact rational scalars with an inline 64-bit fast path and GMP fallback.

#ifndef YANGIAN_RATIONAL_HPP
#define YANGIAN_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace yangian {

/* Canonical reduced fraction num/den with den > 0.
 *
 * Values whose numerator and denominator both fit in int64 are stored inline;
 * anything larger is promoted to a shared, immutable mpq_class.  The promoted
 * form is used only when the value does not fit, so two equal values always
 * have the same representation and equality can compare fields directly.
 */
class Rational {
public:
    Rational() = default;
    Rational(long long n);  // NOLINT(google-explicit-constructor): scalars mix with integer literals
    Rational(long long n, long long d);
    explicit Rational(const mpq_class& q);

    // Parses "a", "-a", "a/b".  Throws std::invalid_argument.
    static Rational parse(const std::string& text);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;

    // Only valid when the value fits in int64; throws std::overflow_error otherwise.
    std::int64_t numerator_i64() const;
    std::int64_t denominator_i64() const;
    mpq_class to_mpq() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Nonnegative integer power; pow(0, 0) == 1.
    Rational pow(unsigned exponent) const;

    std::string to_string() const;
    std::size_t hash() const;

private:
    void assign_wide(__int128 n, __int128 d);  // reduces and demotes when possible
    void assign_mpq(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace yangian

template <>
struct std::hash<yangian::Rational> {
    std::size_t operator()(const yangian::Rational& q) const noexcept { return q.hash(); }
};

#endif  // YANGIAN_RATIONAL_HPP
