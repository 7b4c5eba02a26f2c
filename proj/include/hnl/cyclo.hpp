#pragma once

// Exact scalars a + b*w where w = exp(2*pi*i/3) and a, b are rationals.
// Every coefficient in the constructed state families lives in this ring
// ({0, +-1, w, w^2} and sums thereof), so orthogonality is decided with
// zero tolerance.  Reduction rule: w^2 = -1 - w.

#include <boost/rational.hpp>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hnl {

using Rational = boost::rational<long long>;

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

struct Cyclo {
    Rational a{0};
    Rational b{0};

    Cyclo() = default;
    Cyclo(long long v) : a(v) {}
    Cyclo(Rational a_, Rational b_ = Rational(0)) : a(a_), b(b_) {}

    static Cyclo omega() { return Cyclo(Rational(0), Rational(1)); }
    static Cyclo omega2() { return Cyclo(Rational(-1), Rational(-1)); }

    bool is_zero() const { return a == Rational(0) && b == Rational(0); }
    bool is_real() const { return b == Rational(0); }

    bool operator==(const Cyclo& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    Cyclo operator-() const { return Cyclo(-a, -b); }
    Cyclo operator+(const Cyclo& o) const { return Cyclo(a + o.a, b + o.b); }
    Cyclo operator-(const Cyclo& o) const { return Cyclo(a - o.a, b - o.b); }
    // (a1 + b1 w)(a2 + b2 w) with w^2 = -1 - w.
    Cyclo operator*(const Cyclo& o) const {
        return Cyclo(a * o.a - b * o.b, a * o.b + b * o.a - b * o.b);
    }
    Cyclo& operator+=(const Cyclo& o) { a += o.a; b += o.b; return *this; }
    Cyclo& operator-=(const Cyclo& o) { a -= o.a; b -= o.b; return *this; }
    Cyclo& operator*=(const Cyclo& o) { *this = *this * o; return *this; }

    // conj(w) = w^2 = -1 - w, so conj(a + b w) = (a - b) - b w.
    Cyclo conj() const { return Cyclo(a - b, -b); }

    // |x|^2 = x conj(x) = a^2 - a b + b^2, a nonnegative rational.
    Rational norm2() const { return a * a - a * b + b * b; }

    Cyclo inverse() const {
        if (is_zero()) throw std::invalid_argument("cyclo: division by zero");
        Rational n = norm2();
        Cyclo c = conj();
        return Cyclo(c.a / n, c.b / n);
    }
    Cyclo operator/(const Cyclo& o) const { return *this * o.inverse(); }

    std::complex<double> to_complex() const;
    std::string to_string() const;
};

inline Cyclo cy_mul(const Cyclo& x, const Cyclo& y) { return x * y; }
inline Cyclo cy_conj(const Cyclo& x) { return x.conj(); }
inline std::complex<double> cy_to_float(const Cyclo& x) { return x.to_complex(); }

}  // namespace hnl
