#pragma once

// The Bloch-Wigner dilogarithm D(z) = Im(Li2(z)) + arg(1-z) log|z|.
//
// Evaluation strategy: conjugate into the upper half plane, use
// D(1/z) = -D(z) to reach the unit disk and D(1-z) = -D(z) to reach
// Re z <= 1/2; there Li2 is summed with the Bernoulli series in
// u = -log(1-z), which converges geometrically (|u| < 2pi).
//
// clausen() computes Cl2(theta) = D(e^{i theta}) by a separate series,
// giving an independent cross-check of the unit-circle values.

#include <mahler/complex.hpp>
#include <mahler/bigfloat.hpp>
#include <mutex>
#include <vector>

namespace mahler {

/// Exact Bernoulli numbers B_0, B_1, ... (B_1 = -1/2), cached.
inline const Rat& bernoulli(int n) {
    static std::vector<Rat> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (n < static_cast<int>(cache.size())) return cache[n];
    if (cache.empty()) cache.push_back(Rat(1));
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
        Rat s(0);
        Int binom = 1; // C(m+1, j), starting at j=0
        for (int j = 0; j < m; ++j) {
            s += Rat(binom) * cache[j];
            binom = binom * Int(m + 1 - j) / Int(j + 1);
        }
        cache.push_back(-s / Rat(binom)); // binom = C(m+1, m) = m+1
    }
    return cache[n];
}

namespace detail {

/// Li2 via sum_k B_k u^{k+1}/(k+1)!, u = -log(1-z); requires |u| < 2pi.
inline Cplx li2_bernoulli(const Cplx& z, const Real& tol) {
    Cplx u = -log(Cplx(Real(1)) - z);
    Cplx upow = u;       // u^{k+1}
    Real factorial = 1;  // (k+1)!
    Cplx acc;
    for (int k = 0; k < 4000; ++k) {
        factorial *= Real(k + 1);
        if (k == 0 || k == 1 || k % 2 == 0) {
            Real bk = Real(bernoulli(k));
            if (bk != 0) {
                Cplx term = (bk / factorial) * upow;
                acc += term;
                if (k > 2 && abs(term) < tol) return acc;
            }
        }
        upow *= u;
    }
    return acc;
}

} // namespace detail

/// Bloch-Wigner dilogarithm; absolute error <= 10^(2-prec).
/// D vanishes identically on the real line (including z = 0, 1).
inline Real bloch_wigner(Cplx z, int prec) {
    if (z.im == 0) return Real(0);
    PrecisionScope scope(prec + 15);
    z = Cplx(z.re, z.im); // round into working precision
    int sign = 1;
    if (z.im < 0) {
        z = conj(z);
        sign = -sign;
    }
    if (abs2(z) > 1) {
        z = Cplx(Real(1)) / z;
        sign = -sign; // D(1/z) = -D(z), and conj flipped back below if needed
        if (z.im < 0) { z = conj(z); sign = -sign; }
    }
    if (z.re > Real(1) / 2) {
        z = Cplx(Real(1)) - z;
        sign = -sign; // D(1-z) = -D(z)
        if (z.im < 0) { z = conj(z); sign = -sign; }
    }
    Real tol = pow10(-(prec + 10));
    Cplx li2 = detail::li2_bernoulli(z, tol);
    Cplx one_minus = Cplx(Real(1)) - z;
    Real d = li2.im + arg(one_minus) * log(abs(z));
    return Real(sign) * d;
}

/// Cl2(theta) = sum_{n>=1} sin(n theta)/n^2, via the log-sine expansion.
inline Real clausen(Real theta, int prec) {
    PrecisionScope scope(prec + 15);
    Real pi = const_pi(), two_pi = 2 * pi;
    // reduce into (-pi, pi]
    theta -= two_pi * Real(real_round(theta / two_pi));
    if (theta > pi) theta -= two_pi;
    if (theta <= -pi) theta += two_pi;
    if (theta == 0) return Real(0);
    int sign = 1;
    if (theta < 0) {
        theta = -theta;
        sign = -1;
    }
    // Cl2(t) = t - t log t + sum_{k>=1} (-1)^{k+1} B_{2k} t^{2k+1} / (2k (2k+1) (2k)!)
    Real acc = theta - theta * log(theta);
    Real t2 = theta * theta;
    Real tpow = theta * t2; // theta^{2k+1}
    Real factorial = 2;     // (2k)!
    Real tol = pow10(-(prec + 10));
    for (int k = 1; k < 4000; ++k) {
        Real term = Real(bernoulli(2 * k)) * tpow / (Real(2 * k) * Real(2 * k + 1) * factorial);
        if (k % 2 == 1) acc += term;
        else acc -= term;
        if (abs(term) < tol) break;
        tpow *= t2;
        factorial *= Real(2 * k + 1) * Real(2 * k + 2);
    }
    return Real(sign) * acc;
}

/// Catalan's constant Cl2(pi/2), by the Clausen route.
inline Real catalan_constant(int prec) {
    PrecisionScope scope(prec + 10);
    return clausen(const_pi() / 2, prec + 5);
}

} // namespace mahler
