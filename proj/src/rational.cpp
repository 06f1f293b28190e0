// Copyright 2026 the cfp authors
// SPDX-License-Identifier: Apache-2.0
#include "cfp/rational.hpp"

#include <limits>
#include <numeric>

#include "cfp/error.hpp"

namespace cfp {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v, const char* op) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw GuardError(std::string("rational ") + op + " overflows int64");
    }
    return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational from_i128(i128 num, i128 den, const char* op) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational(narrow(num, op), narrow(den, op));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
        // int64 min would overflow on negation; reachable only via hostile
        // input, still refuse rather than wrap.
        if (num == std::numeric_limits<std::int64_t>::min() ||
            den == std::numeric_limits<std::int64_t>::min()) {
            throw GuardError("rational normalization overflows int64");
        }
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    num_ = num;
    den_ = den;
}

bool Rational::operator<(const Rational& o) const {
    return static_cast<i128>(num_) * o.den_ < static_cast<i128>(o.num_) * den_;
}

Rational Rational::operator+(const Rational& o) const {
    i128 num = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
    i128 den = static_cast<i128>(den_) * o.den_;
    return from_i128(num, den, "addition");
}

Rational Rational::operator-(const Rational& o) const {
    i128 num = static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_;
    i128 den = static_cast<i128>(den_) * o.den_;
    return from_i128(num, den, "subtraction");
}

Rational Rational::operator*(const Rational& o) const {
    i128 num = static_cast<i128>(num_) * o.num_;
    i128 den = static_cast<i128>(den_) * o.den_;
    return from_i128(num, den, "multiplication");
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return str_fraction();
}

std::string Rational::str_fraction() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace cfp
