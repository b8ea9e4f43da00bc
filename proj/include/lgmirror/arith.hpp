// Overflow-checked 64-bit integer arithmetic, exact rationals and binomials.
#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgm {

using Int = std::int64_t;
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}
inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}
inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}
inline Int neg(Int a) { return sub(0, a); }
inline Int iabs(Int a) { return a < 0 ? neg(a) : a; }
inline Int gcd(Int a, Int b) { return std::gcd(iabs(a), iabs(b)); }

// Floor and ceiling division for b > 0.
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
inline Int ceil_div(Int a, Int b) { return neg(floor_div(neg(a), b)); }

inline int sign(Int a) { return (a > 0) - (a < 0); }
inline Int sign_pow(Int e) { return (e % 2 == 0) ? 1 : -1; }  // (-1)^e

// Binomial coefficient with C(n,k) = 0 whenever k < 0, k > n or n < 0.
inline Int binom(Int n, Int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (Int i = 1; i <= k; ++i) {
        // r * (n-k+i) is divisible by i
        Int g = gcd(r, i);
        r = mul(r / g, (n - k + i) / (i / g));
    }
    return r;
}

// Vector helpers.
Int dot(const Vec& a, const Vec& b);
Vec vsub(const Vec& a, const Vec& b);
Vec vadd(const Vec& a, const Vec& b);
Vec vscale(Int s, const Vec& a);
Int vgcd(const Vec& a);
Vec primitive(const Vec& a);  // divides by gcd; zero vector stays zero
bool is_zero(const Vec& a);
std::string to_string(const Vec& a);

// Exact rational with checked 64-bit numerator/denominator, always normalized.
class Rat {
public:
    Rat() = default;
    Rat(Int n) : n_(n), d_(1) {}  // NOLINT: implicit from integer is intended
    Rat(Int n, Int d);
    Int num() const { return n_; }
    Int den() const { return d_; }
    bool is_integer() const { return d_ == 1; }
    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b);
    Rat operator-() const { return Rat(neg(n_), d_); }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.n_ == b.n_ && a.d_ == b.d_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b);
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    Int n_ = 0;
    Int d_ = 1;
};

using RVec = std::vector<Rat>;
using RMat = std::vector<RVec>;

}  // namespace lgm
