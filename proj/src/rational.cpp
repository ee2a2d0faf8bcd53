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

#include "yangian/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace yangian {

namespace {

using i128 = __int128;

constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();
constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();

bool fits64(i128 v) { return v >= kMin64 && v <= kMax64; }

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class to_mpz(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long n) : num_(n), den_(1) {}

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    assign_wide(n, d);
}

Rational::Rational(const mpq_class& q) { assign_mpq(q); }

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rational::parse: empty string");
    try {
        mpq_class q(text, 10);
        if (q.get_den() == 0) throw std::invalid_argument("Rational::parse: zero denominator in '" + text + "'");
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational::parse: cannot parse '" + text + "'");
    }
}

void Rational::assign_wide(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n == 0) d = 1;
    if (fits64(n) && fits64(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        big_.reset();
        return;
    }
    mpq_class q(to_mpz(n), to_mpz(d));
    big_ = std::make_shared<const mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
}

void Rational::assign_mpq(mpq_class q) {
    q.canonicalize();
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p()) {
        num_ = n.get_si();
        den_ = d.get_si();
        big_.reset();
        return;
    }
    big_ = std::make_shared<const mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

std::int64_t Rational::numerator_i64() const {
    if (big_) throw std::overflow_error("Rational: numerator exceeds int64");
    return num_;
}

std::int64_t Rational::denominator_i64() const {
    if (big_) throw std::overflow_error("Rational: denominator exceeds int64");
    return den_;
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.assign_mpq(-*big_);
    } else {
        r.assign_wide(-static_cast<i128>(num_), den_);
    }
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t s;
            if (!__builtin_add_overflow(num_, o.num_, &s)) {
                num_ = s;
                return *this;
            }
        }
        assign_wide(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                    static_cast<i128>(den_) * o.den_);
        return *this;
    }
    assign_mpq(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t s;
            if (!__builtin_sub_overflow(num_, o.num_, &s)) {
                num_ = s;
                return *this;
            }
        }
        assign_wide(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_,
                    static_cast<i128>(den_) * o.den_);
        return *this;
    }
    assign_mpq(to_mpq() - o.to_mpq());
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t p;
            if (!__builtin_mul_overflow(num_, o.num_, &p)) {
                num_ = p;
                return *this;
            }
        }
        assign_wide(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
        return *this;
    }
    assign_mpq(to_mpq() * o.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!big_ && !o.big_) {
        assign_wide(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
        return *this;
    }
    assign_mpq(to_mpq() / o.to_mpq());
    return *this;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
    }
    return a.to_mpq() < b.to_mpq();
}

Rational Rational::pow(unsigned exponent) const {
    Rational result(1);
    Rational base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

std::string Rational::to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Rational::hash() const {
    if (big_) return std::hash<std::string>{}(big_->get_str());
    std::size_t h = std::hash<std::int64_t>{}(num_);
    return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace yangian
