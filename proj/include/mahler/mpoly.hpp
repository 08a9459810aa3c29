#pragma once

// Sparse multivariate polynomials over Z (up to 6 variables): arithmetic,
// exact division, recursive content/GCD via primitive PRS, and
// subresultant-PRS resultants with respect to a chosen variable.
// This is the exact engine behind bivariate resultants/discriminants and
// the successive-resultant elimination of polynomial systems.

#include <mahler/upoly.hpp>
#include <array>
#include <functional>
#include <map>
#include <vector>

namespace mahler {

constexpr int kMaxVars = 6;
using Expo = std::array<int, kMaxVars>;

struct MPoly {
    int nvars = 0;
    std::map<Expo, Int> terms; // exponent vector -> nonzero coefficient

    MPoly() = default;
    explicit MPoly(int nv) : nvars(nv) {}
    static MPoly constant(int nv, Int v) {
        MPoly p(nv);
        if (v != 0) p.terms.emplace(Expo{}, std::move(v));
        return p;
    }
    static MPoly variable(int nv, int var, int power = 1) {
        MPoly p(nv);
        Expo e{};
        e[var] = power;
        p.terms.emplace(e, Int(1));
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && terms.begin()->first == Expo{});
    }

    int degree(int var) const {
        int d = -1;
        for (const auto& [e, c] : terms) d = std::max(d, e[var]);
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms) {
            int s = 0;
            for (int i = 0; i < nvars; ++i) s += e[i];
            d = std::max(d, s);
        }
        return d;
    }

    void add_term(const Expo& e, const Int& c) {
        if (c == 0) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [e, c] : b.terms) r.add_term(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [e, c] : b.terms) r.add_term(e, -c);
        return r;
    }
    friend MPoly operator-(const MPoly& a) {
        MPoly r = a;
        for (auto& [e, c] : r.terms) c = -c;
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r(std::max(a.nvars, b.nvars));
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                Expo e{};
                for (int i = 0; i < kMaxVars; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend MPoly operator*(const Int& s, const MPoly& a) {
        if (s == 0) return MPoly(a.nvars);
        MPoly r = a;
        for (auto& [e, c] : r.terms) c *= s;
        return r;
    }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms == b.terms; }

    MPoly derivative(int var) const {
        MPoly r(nvars);
        for (const auto& [e, c] : terms) {
            if (e[var] == 0) continue;
            Expo e2 = e;
            e2[var] -= 1;
            r.add_term(e2, c * Int(e[var]));
        }
        return r;
    }

    /// Coefficient of var^k, as a polynomial not involving var.
    MPoly coeff_of(int var, int k) const {
        MPoly r(nvars);
        for (const auto& [e, c] : terms) {
            if (e[var] != k) continue;
            Expo e2 = e;
            e2[var] = 0;
            r.add_term(e2, c);
        }
        return r;
    }

    template <class P>
    P eval(const std::vector<P>& point) const {
        P acc{};
        for (const auto& [e, c] : terms) {
            P t = P(cplx_of(c));
            for (int i = 0; i < nvars; ++i)
                if (e[i]) t = t * powi(point[i], e[i]);
            acc = acc + t;
        }
        return acc;
    }

    /// Divides out the largest monomial x_i^k common to all terms.
    MPoly strip_monomial_content(Expo* removed = nullptr) const {
        if (terms.empty()) return *this;
        Expo mins = terms.begin()->first;
        for (const auto& [e, c] : terms)
            for (int i = 0; i < kMaxVars; ++i) mins[i] = std::min(mins[i], e[i]);
        if (removed) *removed = mins;
        MPoly r(nvars);
        for (const auto& [e, c] : terms) {
            Expo e2;
            for (int i = 0; i < kMaxVars; ++i) e2[i] = e[i] - mins[i];
            r.terms.emplace(e2, c);
        }
        return r;
    }

    Int int_content() const {
        Int g = 0;
        for (const auto& [e, c] : terms) g = gcd(g, c);
        return g;
    }
};

// ---- univariate views ----

inline std::vector<MPoly> univ_view(const MPoly& p, int var) {
    int d = p.degree(var);
    std::vector<MPoly> out(std::max(d + 1, 0), MPoly(p.nvars));
    for (const auto& [e, c] : p.terms) {
        Expo e2 = e;
        e2[var] = 0;
        out[e[var]].add_term(e2, c);
    }
    return out;
}

inline MPoly univ_build(const std::vector<MPoly>& coeffs, int var, int nvars) {
    MPoly r(nvars);
    for (size_t k = 0; k < coeffs.size(); ++k)
        for (const auto& [e, c] : coeffs[k].terms) {
            Expo e2 = e;
            e2[var] += static_cast<int>(k);
            r.add_term(e2, c);
        }
    return r;
}

/// Exact division: throws if not exact.
inline MPoly mp_exact_div(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw std::domain_error("MPoly division by zero");
    MPoly r = a, q(std::max(a.nvars, b.nvars));
    const auto& [eb, cb] = *b.terms.rbegin(); // leading term in lex order
    while (!r.is_zero()) {
        const auto& [er, cr] = *r.terms.rbegin();
        Expo e{};
        for (int i = 0; i < kMaxVars; ++i) {
            e[i] = er[i] - eb[i];
            if (e[i] < 0) throw std::domain_error("inexact MPoly division");
        }
        Int c = cr / cb;
        if (c * cb != cr) throw std::domain_error("inexact MPoly division");
        MPoly t(q.nvars);
        t.terms.emplace(e, c);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

inline bool mp_divides(const MPoly& a, const MPoly& b) {
    try {
        mp_exact_div(a, b);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

/// Pseudo-remainder with respect to var: lc(b)^(da-db+1) a = q b + r.
inline MPoly mp_pseudo_rem(const MPoly& a, const MPoly& b, int var) {
    int db = b.degree(var);
    if (db < 0) throw std::domain_error("mp_pseudo_rem by zero");
    MPoly lb = b.coeff_of(var, db);
    MPoly r = a;
    int e = std::max(a.degree(var) - db + 1, 0);
    int steps = 0;
    while (!r.is_zero() && r.degree(var) >= db) {
        int dr = r.degree(var);
        MPoly lr = r.coeff_of(var, dr);
        MPoly shift = MPoly::variable(r.nvars, var, dr - db);
        r = lb * r - shift * lr * b;
        ++steps;
        if (steps > 4096) throw std::runtime_error("mp_pseudo_rem: runaway");
    }
    for (int i = steps; i < e; ++i) r = lb * r;
    return r;
}

MPoly mp_gcd(const MPoly& a, const MPoly& b);

/// Content of p with respect to var: gcd of the univariate-view coefficients.
inline MPoly mp_content(const MPoly& p, int var) {
    MPoly g(p.nvars);
    for (const auto& coeff : univ_view(p, var)) {
        if (coeff.is_zero()) continue;
        g = mp_gcd(g, coeff);
        if (g.is_constant() && !g.is_zero() && g.terms.begin()->second == 1) break;
    }
    return g;
}

inline MPoly mp_primitive(const MPoly& p, int var) {
    if (p.is_zero()) return p;
    return mp_exact_div(p, mp_content(p, var));
}

/// GCD by primitive PRS, recursing on the number of active variables.
inline MPoly mp_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() && b.is_constant()) {
        Int g = gcd(a.terms.begin()->second, b.terms.begin()->second);
        return MPoly::constant(std::max(a.nvars, b.nvars), abs(g));
    }
    int var = -1;
    for (int i = 0; i < kMaxVars; ++i)
        if (a.degree(i) > 0 || b.degree(i) > 0) { var = i; break; }
    if (a.degree(var) < 0 || b.degree(var) < 0) {
        // one operand does not involve var at all: fall back to content logic
    }
    MPoly ca = a.is_constant() ? a : mp_content(a, var);
    MPoly cb = b.is_constant() ? b : mp_content(b, var);
    if (a.degree(var) <= 0 || b.degree(var) <= 0) {
        // gcd divides the contents when either has degree 0 in var
        MPoly x = (a.degree(var) <= 0) ? a : ca;
        MPoly y = (b.degree(var) <= 0) ? b : cb;
        return mp_gcd(x, y);
    }
    MPoly cg = mp_gcd(ca, cb);
    MPoly pa = mp_exact_div(a, ca), pb = mp_exact_div(b, cb);
    if (pa.degree(var) < pb.degree(var)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        MPoly r = mp_pseudo_rem(pa, pb, var);
        pa = std::move(pb);
        if (r.is_zero()) {
            pb = r;
        } else {
            pb = mp_exact_div(r, mp_content(r, var));
            Int ic = pb.int_content();
            if (ic != 0 && ic != 1) pb = mp_exact_div(pb, MPoly::constant(pb.nvars, ic));
        }
    }
    MPoly prim = mp_exact_div(pa, mp_content(pa, var));
    Int ic = prim.int_content();
    if (ic != 0 && ic != 1) prim = mp_exact_div(prim, MPoly::constant(prim.nvars, ic));
    MPoly g = cg * prim;
    if (g.terms.rbegin()->second < 0) g = -g;
    return g;
}

/// Subresultant PRS resultant with respect to var.
inline MPoly mp_resultant(MPoly a, MPoly b, int var) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("resultant of zero polynomial");
    int da = a.degree(var), db = b.degree(var);
    if (da < 0 || db < 0)
        throw std::domain_error("resultant: input independent of the variable");
    int nv = std::max(a.nvars, b.nvars);
    if (da == 0) {
        // Res(a, b) = a^deg(b)
        MPoly r = MPoly::constant(nv, 1);
        for (int i = 0; i < db; ++i) r = r * a;
        return r;
    }
    if (db == 0) {
        MPoly r = MPoly::constant(nv, 1);
        for (int i = 0; i < da; ++i) r = r * b;
        return r;
    }
    int sign = 1;
    if (da < db) {
        std::swap(a, b);
        std::swap(da, db);
        if ((da & 1) && (db & 1)) sign = -sign;
    }
    MPoly g = MPoly::constant(nv, 1), h = MPoly::constant(nv, 1);
    for (;;) {
        int d = a.degree(var) - b.degree(var);
        if ((a.degree(var) & 1) && (b.degree(var) & 1)) sign = -sign;
        MPoly r = mp_pseudo_rem(a, b, var);
        a = std::move(b);
        MPoly divisor = g;
        for (int i = 0; i < d; ++i) divisor = divisor * h;
        b = r.is_zero() ? r : mp_exact_div(r, divisor);
        if (b.is_zero()) {
            if (a.degree(var) > 0) return MPoly(nv); // common factor: resultant 0
            throw std::logic_error("mp_resultant: unexpected zero remainder");
        }
        g = a.coeff_of(var, a.degree(var));
        // h = g^d / h^(d-1)
        MPoly gp = MPoly::constant(nv, 1);
        for (int i = 0; i < d; ++i) gp = gp * g;
        if (d == 0) {
            // h unchanged
        } else if (d == 1) {
            h = gp;
        } else {
            MPoly hp = MPoly::constant(nv, 1);
            for (int i = 0; i < d - 1; ++i) hp = hp * h;
            h = mp_exact_div(gp, hp);
        }
        if (b.degree(var) == 0) break;
    }
    // final: res = sign * lc(b)^deg(a) / h^(deg(a)-1)
    int dA = a.degree(var);
    MPoly lb = b.coeff_of(var, 0);
    MPoly num = MPoly::constant(nv, 1);
    for (int i = 0; i < dA; ++i) num = num * lb;
    MPoly den = MPoly::constant(nv, 1);
    for (int i = 0; i < dA - 1; ++i) den = den * h;
    MPoly res = mp_exact_div(num, den);
    return sign > 0 ? res : -res;
}

/// Squarefree part with respect to var (keeps other variables intact).
inline MPoly mp_squarefree(const MPoly& p, int var) {
    if (p.degree(var) <= 0) return p;
    MPoly g = mp_gcd(p, p.derivative(var));
    if (g.is_constant()) return p;
    return mp_exact_div(p, g);
}

// ---- conversions with univariate polynomials ----

inline MPoly mp_from_upoly(const UPolyZ& p, int var, int nvars) {
    MPoly r(nvars);
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i] == 0) continue;
        Expo e{};
        e[var] = static_cast<int>(i);
        r.terms.emplace(e, p.c[i]);
    }
    return r;
}

/// Requires p to involve only `var`.
inline UPolyZ mp_to_upoly(const MPoly& p, int var) {
    std::vector<Int> c(std::max(p.degree(var) + 1, 0), Int(0));
    for (const auto& [e, coeff] : p.terms) {
        for (int i = 0; i < kMaxVars; ++i)
            if (i != var && e[i] != 0)
                throw std::domain_error("mp_to_upoly: polynomial is not univariate");
        c[e[var]] = coeff;
    }
    return UPolyZ(std::move(c));
}

inline std::string mp_to_string(const MPoly& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        Int v = c;
        if (first) {
            if (v < 0) { os << "-"; v = -v; }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        bool has_var = false;
        for (int i = 0; i < kMaxVars; ++i) has_var |= (e[i] != 0);
        if (v != 1 || !has_var) os << v.str();
        bool star = (v != 1);
        for (int i = 0; i < kMaxVars; ++i) {
            if (!e[i]) continue;
            if (star) os << "*";
            os << (i < (int)names.size() ? names[i] : "x" + std::to_string(i));
            if (e[i] > 1) os << "^" << e[i];
            star = true;
        }
    }
    return os.str();
}

} // namespace mahler
