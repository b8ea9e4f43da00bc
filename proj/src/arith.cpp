#include "lgmirror/arith.hpp"

#include <sstream>

namespace lgm {

Int dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = add(s, mul(a[i], b[i]));
    return s;
}

Vec vsub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vsub: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = sub(a[i], b[i]);
    return r;
}

Vec vadd(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vadd: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = add(a[i], b[i]);
    return r;
}

Vec vscale(Int s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(s, a[i]);
    return r;
}

Int vgcd(const Vec& a) {
    Int g = 0;
    for (Int x : a) g = gcd(g, x);
    return g;
}

Vec primitive(const Vec& a) {
    Int g = vgcd(a);
    if (g <= 1) return a;
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
    return r;
}

bool is_zero(const Vec& a) {
    for (Int x : a)
        if (x != 0) return false;
    return true;
}

std::string to_string(const Vec& a) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ')';
    return os.str();
}

Rat::Rat(Int n, Int d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = neg(n);
        d = neg(d);
    }
    Int g = gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    n_ = n;
    d_ = d;
}

Rat operator+(const Rat& a, const Rat& b) {
    Int g = gcd(a.d_, b.d_);
    Int ad = a.d_ / g;
    return Rat(add(mul(a.n_, b.d_ / g), mul(b.n_, ad)), mul(ad, b.d_));
}

Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

Rat operator*(const Rat& a, const Rat& b) {
    Int g1 = gcd(a.n_, b.d_), g2 = gcd(b.n_, a.d_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return Rat(mul(a.n_ / g1, b.n_ / g2), mul(a.d_ / g2, b.d_ / g1));
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.n_ == 0) throw std::domain_error("rational division by zero");
    return a * Rat(b.d_, b.n_);
}

bool operator<(const Rat& a, const Rat& b) {
    __int128 l = static_cast<__int128>(a.n_) * b.d_;
    __int128 r = static_cast<__int128>(b.n_) * a.d_;
    return l < r;
}

std::string Rat::str() const {
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
}

}  // namespace lgm
