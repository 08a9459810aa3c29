#pragma once

// Complex arithmetic over the MPFR-backed Real.  std::complex is not
// specified for user-defined floats, so we carry our own value type.
// All operations evaluate at the active PrecisionScope.

#include <mahler/bigfloat.hpp>
#include <mahler/gaussian.hpp>
#include <iosfwd>
#include <sstream>

namespace mahler {

struct Cplx {
    Real re, im;

    Cplx() : re(0), im(0) {}
    Cplx(long n) : re(n), im(0) {}
    Cplx(Real r) : re(std::move(r)), im(0) {}
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Cplx(const GaussQ& q) : re(q.re), im(q.im) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator*(const Real& s, const Cplx& a) { return {s * a.re, s * a.im}; }
    friend Cplx operator/(const Cplx& a, const Cplx& b) {
        Real n = b.re * b.re + b.im * b.im;
        if (n == 0) throw std::domain_error("complex division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    Cplx& operator+=(const Cplx& b) { re += b.re; im += b.im; return *this; }
    Cplx& operator-=(const Cplx& b) { re -= b.re; im -= b.im; return *this; }
    Cplx& operator*=(const Cplx& b) { *this = *this * b; return *this; }
    Cplx& operator/=(const Cplx& b) { *this = *this / b; return *this; }

    friend bool operator==(const Cplx& a, const Cplx& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Cplx& a, const Cplx& b) { return !(a == b); }
};

inline Cplx conj(const Cplx& z) { return {z.re, -z.im}; }
inline Real abs2(const Cplx& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Cplx& z) { return hypot(z.re, z.im); }
inline Real arg(const Cplx& z) { return atan2(z.im, z.re); }

/// Principal logarithm, cut along the negative real axis.
inline Cplx log(const Cplx& z) { return {log(abs(z)), arg(z)}; }

inline Cplx exp(const Cplx& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

inline Cplx sqrt(const Cplx& z) {
    Real m = abs(z);
    if (m == 0) return Cplx();
    Real a = arg(z) / 2;
    Real s = sqrt(m);
    return {s * cos(a), s * sin(a)};
}

inline Cplx unit_circle_point(const Real& theta) { return {cos(theta), sin(theta)}; }

/// z^n for integer n (n may be negative; z must be nonzero then).
inline Cplx powi(Cplx z, long n) {
    if (n < 0) { z = Cplx(Real(1)) / z; n = -n; }
    Cplx acc(Real(1));
    while (n) {
        if (n & 1) acc *= z;
        z *= z;
        n >>= 1;
    }
    return acc;
}

inline std::string to_string(const Cplx& z, int digits = 15) {
    std::ostringstream os;
    os.precision(digits);
    os << z.re;
    if (z.im.sign() >= 0) os << "+" << z.im << "i";
    else os << z.im << "i";
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Cplx& z) { return os << to_string(z); }

} // namespace mahler
