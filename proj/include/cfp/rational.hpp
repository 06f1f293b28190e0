// Copyright 2026 the cfp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

namespace cfp {

// Exact rational on int64 components. Always stored normalized: gcd(|num|,
// den) == 1, den > 0. Comparisons cross-multiply in __int128 and are exact
// for any representable operands. Arithmetic that would leave int64 range
// after normalization throws GuardError; nothing ever wraps silently.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t num, std::int64_t den);  // den == 0 -> DomainError

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;

    // "num/den", collapsing to "num" when den == 1.
    std::string str() const;

    // Always "num/den", even for integers; the CLI prints efficacies and
    // thresholds in this form so output is machine-splittable on '/'.
    std::string str_fraction() const;

private:
    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace cfp
