#pragma once

#include "gridchroma/vec.hpp"

#include <numeric>
#include <string>
#include <string_view>

namespace gridchroma {

/// Exact non-negative rational. Used for the radio range R so that every
/// distance comparison d(U,V) <= R is decided in exact integer arithmetic.
class Rational {
public:
    Rational() = default;
    Rational(i64 num, i64 den) : num_(num), den_(den) { normalize(); }

    static Rational from_int(i64 n) { return Rational(n, 1); }

    /// Parse a decimal string like "2", "1.5", "2.50". "1.5" and "1.50"
    /// produce the same value.
    static Rational parse(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("empty rational literal");
        std::string digits;
        i64 den = 1;
        bool seen_dot = false;
        for (char c : s) {
            if (c == '.') {
                if (seen_dot) throw std::invalid_argument("bad rational literal: " + std::string(s));
                seen_dot = true;
            } else if (c >= '0' && c <= '9') {
                digits.push_back(c);
                if (seen_dot) den = checked_mul(den, 10);
            } else {
                throw std::invalid_argument("bad rational literal: " + std::string(s));
            }
        }
        if (digits.empty()) throw std::invalid_argument("bad rational literal: " + std::string(s));
        i64 num = 0;
        for (char c : digits) num = checked_add(checked_mul(num, 10), c - '0');
        return Rational(num, den);
    }

    i64 num() const { return num_; }
    i64 den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // r^2 compared against an integer: sq <=> num^2/den^2
    // (cross-multiplied, exact).
    bool sq_leq(i64 sq) const { return checked_mul(checked_mul(sq, den_), den_) <= checked_mul(num_, num_); }
    bool sq_less(i64 sq) const { return checked_mul(checked_mul(sq, den_), den_) < checked_mul(num_, num_); }

    /// true iff this > sqrt(2), decided exactly (num^2 > 2*den^2).
    bool greater_than_sqrt2() const { return checked_mul(num_, num_) > checked_mul(2, checked_mul(den_, den_)); }

    bool operator>=(i64 n) const { return num_ >= checked_mul(n, den_); }
    bool operator<(const Rational& o) const { return checked_mul(num_, o.den_) < checked_mul(o.num_, den_); }
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// floor(this * k) for integer k >= 0.
    i64 floor_mul(i64 k) const { return floor_div(checked_mul(num_, k), den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ <= 0) throw std::invalid_argument("denominator must be positive");
        if (num_ < 0) throw std::invalid_argument("rational must be non-negative");
        i64 g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    i64 num_ = 0;
    i64 den_ = 1;
};

} // namespace gridchroma
