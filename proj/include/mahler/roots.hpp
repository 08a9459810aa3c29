#pragma once

// Simultaneous (Aberth-Ehrlich) polynomial root finding over Cplx.
// Accepts warm starts, which the Mahler-measure integrator uses heavily
// when continuing root systems along the torus.

#include <mahler/upoly.hpp>
#include <stdexcept>
#include <vector>

namespace mahler {

struct RootSolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void eval_with_derivative(const UPolyC& p, const Cplx& z, Cplx& val, Cplx& der) {
    val = Cplx();
    der = Cplx();
    for (size_t i = p.c.size(); i-- > 0;) {
        der = der * z + val;
        val = val * z + p.c[i];
    }
}

inline Real coeff_scale(const UPolyC& p, const Real& az) {
    Real s = 0, zp = 1;
    for (size_t i = 0; i < p.c.size(); ++i) {
        s += abs(p.c[i]) * zp;
        zp *= az;
    }
    return s;
}

} // namespace detail

/// All d roots of p (counted with multiplicity) at roughly `prec` correct
/// digits for simple roots; clusters of multiple roots are returned as
/// nearby points.  Throws RootSolveError on non-convergence.
inline std::vector<Cplx> roots_aberth(const UPolyC& p, int prec,
                                      const std::vector<Cplx>* warm = nullptr) {
    if (p.degree() < 1) throw std::domain_error("roots: degree must be >= 1");
    int guard = 10 + p.degree();
    PrecisionScope scope(prec + guard);

    // deflate exact zeros at the origin
    UPolyC q = p;
    std::vector<Cplx> out;
    size_t k = 0;
    while (k < q.c.size() && q.c[k].is_zero()) ++k;
    if (k) {
        q.c.erase(q.c.begin(), q.c.begin() + k);
        out.assign(k, Cplx());
    }
    int d = q.degree();
    if (d == 0) return out;
    if (d == 1) {
        out.push_back(-q.c[0] / q.c[1]);
        return out;
    }

    // Cauchy-style radius for initial guesses
    Real leadabs = abs(q.lead());
    Real radius = 0;
    for (int i = 0; i < d; ++i) {
        Real t = abs(q.c[i]) / leadabs;
        if (t > radius) radius = t;
    }
    radius += 1;

    std::vector<Cplx> z(d);
    if (warm && static_cast<int>(warm->size()) >= d) {
        for (int i = 0; i < d; ++i) z[i] = (*warm)[i];
    } else {
        Real two_pi = 2 * const_pi();
        for (int i = 0; i < d; ++i) {
            Real ang = two_pi * Real(i) / Real(d) + Real(0.3764);
            z[i] = radius * unit_circle_point(ang);
        }
    }

    Real tol = pow10(-(prec + 3));
    Real unit_round = pow10(-(prec + guard - 2));
    const int max_sweeps = 240;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        Real worst = 0;
        bool all_small_residual = true;
        for (int i = 0; i < d; ++i) {
            Cplx val, der;
            detail::eval_with_derivative(q, z[i], val, der);
            Real scale = detail::coeff_scale(q, abs(z[i]));
            if (abs(val) <= unit_round * scale * 4) continue; // converged to rounding floor
            all_small_residual = false;
            Cplx w;
            if (der.is_zero()) {
                w = Cplx(Real(1) / Real(d), Real(1) / Real(2 * d));
            } else {
                w = val / der;
            }
            Cplx s;
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                Cplx diff = z[i] - z[j];
                if (diff.is_zero()) diff = Cplx(unit_round, unit_round);
                s += Cplx(Real(1)) / diff;
            }
            Cplx denom = Cplx(Real(1)) - w * s;
            Cplx corr = denom.is_zero() ? w : w / denom;
            z[i] -= corr;
            Real rel = abs(corr) / (Real(1) + abs(z[i]));
            if (rel > worst) worst = rel;
        }
        if (all_small_residual || worst < tol) {
            out.insert(out.end(), z.begin(), z.end());
            return out;
        }
    }
    throw RootSolveError("root iteration did not converge; retry at higher precision");
}

/// Roots of an exact-coefficient polynomial: squarefree parts are solved
/// separately, so every Aberth run has only simple roots; multiplicities
/// are restored in the output.
template <class K>
std::vector<Cplx> roots_exact(const UPoly<K>& p, int prec) {
    if (p.degree() < 1) throw std::domain_error("roots: degree must be >= 1");
    std::vector<Cplx> out;
    for (auto& [part, mult] : squarefree_factors(p)) {
        auto rs = roots_aberth(to_cplx_poly(part), prec);
        for (auto& r : rs)
            for (int i = 0; i < mult; ++i) out.push_back(r);
    }
    return out;
}

inline std::vector<Cplx> roots(const UPolyQ& p, int prec) { return roots_exact(p, prec); }
inline std::vector<Cplx> roots(const UPolyG& p, int prec) { return roots_exact(p, prec); }
inline std::vector<Cplx> roots(const UPolyC& p, int prec,
                               const std::vector<Cplx>* warm = nullptr) {
    return roots_aberth(p, prec, warm);
}

} // namespace mahler
