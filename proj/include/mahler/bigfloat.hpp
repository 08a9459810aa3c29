#pragma once

// Arbitrary-precision scalar types used throughout the library.
//
// Real is an MPFR-backed float whose working precision (decimal digits)
// is set per scope with PrecisionScope; every numeric routine takes an
// explicit digit count and evaluates inside such a scope.  Int and Rat
// are GMP-backed exact integers and rationals.

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <algorithm>
#include <stdexcept>
#include <string>

namespace mahler {

namespace mp = boost::multiprecision;

using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using Int  = mp::number<mp::gmp_int, mp::et_off>;
using Rat  = mp::number<mp::gmp_rational, mp::et_off>;

constexpr int kMinDigits = 20;

/// Sets the default precision (decimal digits) for Reals created while
/// alive; restores the previous precision on destruction.
class PrecisionScope {
public:
    explicit PrecisionScope(int digits)
        : saved_(static_cast<int>(Real::default_precision())) {
        if (digits < kMinDigits)
            throw std::invalid_argument("precision below minimum of 20 digits");
        Real::default_precision(static_cast<unsigned>(digits));
    }
    ~PrecisionScope() { Real::default_precision(static_cast<unsigned>(saved_)); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    int saved_;
};

inline Real const_pi() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

/// 10^-k at the current working precision.
inline Real pow10(int k) {
    Real r = 10;
    return pow(r, k);
}

inline Real to_real(const Rat& q) { return Real(q); }
inline Real to_real(const Int& n) { return Real(n); }

inline int sign_of(const Real& x) { return x.sign(); }

inline Int rat_round(const Rat& q) {
    // round half away from zero
    Int two_n = 2 * numerator(q), d = denominator(q);
    Int r = (two_n >= 0) ? Int((two_n + d) / (2 * d)) : Int((two_n - d) / (2 * d));
    return r;
}

inline Int real_round(const Real& x) {
    Real r;
    mpfr_round(r.backend().data(), x.backend().data());
    Int n;
    mpfr_get_z(n.backend().data(), r.backend().data(), MPFR_RNDN);
    return n;
}

} // namespace mahler
