#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gridchroma {

using i64 = std::int64_t;

struct overflow_error : std::runtime_error {
    explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

// Checked 64-bit arithmetic. All lattice computations are exact; an overflow
// is a bug or an out-of-contract instance, never silently wrapped.
inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in add");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("integer overflow in sub");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in mul");
    return r;
}

/// Integer 2-vector on the grid Z^2.
struct IntVec2 {
    i64 x = 0;
    i64 y = 0;

    friend bool operator==(const IntVec2&, const IntVec2&) = default;

    IntVec2 operator+(const IntVec2& o) const { return {checked_add(x, o.x), checked_add(y, o.y)}; }
    IntVec2 operator-(const IntVec2& o) const { return {checked_sub(x, o.x), checked_sub(y, o.y)}; }
    IntVec2 operator-() const { return {checked_sub(0, x), checked_sub(0, y)}; }
    IntVec2 operator*(i64 k) const { return {checked_mul(x, k), checked_mul(y, k)}; }

    i64 norm_sq() const { return checked_add(checked_mul(x, x), checked_mul(y, y)); }
    bool is_zero() const { return x == 0 && y == 0; }
};

inline i64 det(const IntVec2& a, const IntVec2& b) {
    return checked_sub(checked_mul(a.x, b.y), checked_mul(b.x, a.y));
}

inline i64 dot(const IntVec2& a, const IntVec2& b) {
    return checked_add(checked_mul(a.x, b.x), checked_mul(a.y, b.y));
}

/// gcd(|a|,|b|) with gcd(a,0) = gcd(0,a) = |a|. (0,0) is an error.
inline i64 gcd_nonneg(i64 a, i64 b) {
    if (a == 0 && b == 0) throw std::domain_error("zero vector has no gcd");
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// The representative of x modulo |m| in [0, |m|): works for negative x.
inline i64 euclid_mod(i64 x, i64 m) {
    if (m == 0) throw std::domain_error("modulus must be nonzero");
    if (m < 0) m = -m;
    i64 r = x % m;
    return r < 0 ? r + m : r;
}

/// Floor division (toward -infinity), exact.
inline i64 floor_div(i64 x, i64 d) {
    if (d == 0) throw std::domain_error("division by zero");
    i64 q = x / d;
    if ((x % d != 0) && ((x < 0) != (d < 0))) --q;
    return q;
}

} // namespace gridchroma
