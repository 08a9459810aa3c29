#pragma once

// Dense univariate polynomials, lowest degree first.  The coefficient
// type is a template parameter; the instantiations used are Rat, GaussQ,
// Int and Cplx.  Exact integer helpers (content, pseudo-division,
// subresultant resultants, cyclotomic polynomials) live at the bottom.

#include <mahler/bigfloat.hpp>
#include <mahler/gaussian.hpp>
#include <mahler/complex.hpp>
#include <map>
#include <vector>
#include <string>
#include <sstream>

namespace mahler {

template <class K>
struct UPoly {
    std::vector<K> c; // c[i] = coefficient of x^i; empty = zero polynomial

    UPoly() = default;
    explicit UPoly(std::vector<K> coeffs) : c(std::move(coeffs)) { normalize(); }
    static UPoly constant(K v) { return UPoly(std::vector<K>{std::move(v)}); }
    static UPoly monomial(K v, int deg) {
        std::vector<K> cs(deg + 1, K(0));
        cs[deg] = std::move(v);
        return UPoly(std::move(cs));
    }

    void normalize() {
        while (!c.empty() && c.back() == K(0)) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    const K& lead() const { return c.back(); }
    K at(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : K(0); }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<K> r(std::max(a.c.size(), b.c.size()), K(0));
        for (size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
        return UPoly(std::move(r));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<K> r(std::max(a.c.size(), b.c.size()), K(0));
        for (size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
        return UPoly(std::move(r));
    }
    friend UPoly operator-(const UPoly& a) {
        std::vector<K> r = a.c;
        for (auto& v : r) v = -v;
        return UPoly(std::move(r));
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<K> r(a.c.size() + b.c.size() - 1, K(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == K(0)) continue;
            for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        }
        return UPoly(std::move(r));
    }
    friend UPoly operator*(const K& s, const UPoly& a) {
        std::vector<K> r = a.c;
        for (auto& v : r) v = s * v;
        return UPoly(std::move(r));
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c == b.c; }

    UPoly derivative() const {
        if (c.size() <= 1) return UPoly();
        std::vector<K> r(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) r[i - 1] = K(long(i)) * c[i];
        return UPoly(std::move(r));
    }

    /// Horner evaluation at a point of type P (P must absorb K via ctor).
    template <class P>
    P eval(const P& x) const {
        P acc{};
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + P(c[i]);
        return acc;
    }

    /// x -> s*x substitution.
    UPoly scale_arg(const K& s) const {
        std::vector<K> r = c;
        K p(1);
        for (size_t i = 0; i < r.size(); ++i) { r[i] *= p; p *= s; }
        return UPoly(std::move(r));
    }

    /// x -> 1/x followed by clearing: coefficient reversal.
    UPoly reversed() const {
        std::vector<K> r(c.rbegin(), c.rend());
        return UPoly(std::move(r));
    }
};

using UPolyQ = UPoly<Rat>;
using UPolyZ = UPoly<Int>;
using UPolyG = UPoly<GaussQ>;
using UPolyC = UPoly<Cplx>;

// ---- field-coefficient division, gcd, squarefree ----

template <class K>
std::pair<UPoly<K>, UPoly<K>> divrem(const UPoly<K>& a, const UPoly<K>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    UPoly<K> q, r = a;
    q.c.assign(std::max<int>(a.degree() - b.degree() + 1, 0), K(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        K f = r.lead() / b.lead();
        int d = r.degree() - b.degree();
        q.c[d] = f;
        for (int i = 0; i <= b.degree(); ++i) r.c[i + d] -= f * b.c[i];
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

template <class K>
UPoly<K> monic(const UPoly<K>& a) {
    if (a.is_zero()) return a;
    K inv = K(1) / a.lead();
    return inv * a;
}

template <class K>
UPoly<K> gcd_poly(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : monic(a);
}

/// Yun's algorithm: returns [(squarefree factor, multiplicity)],
/// multiplicities strictly increasing, product reconstructing input/lead.
template <class K>
std::vector<std::pair<UPoly<K>, int>> squarefree_factors(const UPoly<K>& p) {
    std::vector<std::pair<UPoly<K>, int>> out;
    if (p.degree() <= 0) return out;
    UPoly<K> a = monic(p), d = a.derivative();
    UPoly<K> g = gcd_poly(a, d);
    if (g.degree() == 0) {
        out.push_back({a, 1});
        return out;
    }
    UPoly<K> w = divrem(a, g).first, y = divrem(d, g).first;
    int i = 1;
    while (w.degree() > 0) {
        UPoly<K> z = y - w.derivative();
        UPoly<K> f = gcd_poly(w, z);
        if (f.degree() > 0) out.push_back({f, i});
        w = divrem(w, f).first;
        y = divrem(z, f).first;
        ++i;
    }
    return out;
}

// ---- conversions ----

inline Cplx cplx_of(const Rat& q) { return Cplx(Real(q)); }
inline Cplx cplx_of(const GaussQ& z) { return {Real(z.re), Real(z.im)}; }
inline Cplx cplx_of(const Int& n) { return Cplx(Real(n)); }
inline Cplx cplx_of(const Cplx& z) { return z; }

template <class K>
UPolyC to_cplx_poly(const UPoly<K>& p) {
    std::vector<Cplx> r(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) r[i] = cplx_of(p.c[i]);
    return UPolyC(std::move(r));
}

inline UPolyQ to_rat_poly(const UPolyZ& p) {
    std::vector<Rat> r(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) r[i] = Rat(p.c[i]);
    return UPolyQ(std::move(r));
}

inline UPolyG to_gauss_poly(const UPolyQ& p) {
    std::vector<GaussQ> r(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) r[i] = GaussQ(p.c[i]);
    return UPolyG(std::move(r));
}

/// Real part extraction; throws if any coefficient has nonzero imaginary part.
inline UPolyQ to_rat_poly(const UPolyG& p) {
    std::vector<Rat> r(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i].im != 0) throw std::domain_error("polynomial has non-real coefficients");
        r[i] = p.c[i].re;
    }
    return UPolyQ(std::move(r));
}

// ---- integer-coefficient layer ----

inline Int content(const UPolyZ& p) {
    Int g = 0;
    for (const auto& v : p.c) g = gcd(g, v);
    return g;
}

inline UPolyZ primitive_part(const UPolyZ& p, Int* content_out = nullptr) {
    if (p.is_zero()) {
        if (content_out) *content_out = 0;
        return p;
    }
    Int g = content(p);
    if (p.lead() < 0) g = -g;
    if (content_out) *content_out = g;
    std::vector<Int> r(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) r[i] = p.c[i] / g;
    return UPolyZ(std::move(r));
}

/// p = unit * primitive integer polynomial (positive leading coefficient).
inline std::pair<Rat, UPolyZ> clear_denominators(const UPolyQ& p) {
    if (p.is_zero()) return {Rat(0), UPolyZ()};
    Int den = 1;
    for (const auto& v : p.c) den = den / gcd(den, denominator(v)) * denominator(v);
    std::vector<Int> z(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i)
        z[i] = numerator(p.c[i]) * (den / denominator(p.c[i]));
    Int cont;
    UPolyZ prim = primitive_part(UPolyZ(std::move(z)), &cont);
    return {Rat(cont) / Rat(den), prim};
}

/// Pseudo-remainder: lead(b)^(deg a - deg b + 1) * a = q*b + r.
inline UPolyZ pseudo_rem(UPolyZ a, const UPolyZ& b) {
    if (b.is_zero()) throw std::domain_error("pseudo_rem by zero");
    int e = a.degree() - b.degree() + 1;
    const Int& lb = b.lead();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        int d = a.degree() - b.degree();
        Int la = a.lead();
        for (auto& v : a.c) v *= lb;
        for (int i = 0; i <= b.degree(); ++i) a.c[i + d] -= la * b.c[i];
        a.normalize();
        --e;
    }
    if (e > 0) {
        Int f = pow(lb, e);
        for (auto& v : a.c) v *= f;
    }
    return a;
}

/// Exact quotient; throws if the division is not exact.
inline UPolyZ exact_div(const UPolyZ& a, const UPolyZ& b) {
    if (b.is_zero()) throw std::domain_error("exact_div by zero");
    if (a.is_zero()) return a;
    if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
    UPolyZ q, r = a;
    q.c.assign(a.degree() - b.degree() + 1, Int(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Int f = r.lead() / b.lead();
        if (f * b.lead() != r.lead()) throw std::domain_error("inexact polynomial division");
        int d = r.degree() - b.degree();
        q.c[d] = f;
        for (int i = 0; i <= b.degree(); ++i) r.c[i + d] -= f * b.c[i];
        r.normalize();
    }
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    q.normalize();
    return q;
}

inline UPolyZ gcd_int_poly(UPolyZ a, UPolyZ b) {
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        UPolyZ r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Subresultant PRS resultant of integer polynomials.
inline Int resultant_int(UPolyZ a, UPolyZ b) {
    if (a.is_zero() || b.is_zero()) return 0;
    Int sign = 1, res_acc = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    }
    Int g = 1, h = 1;
    while (b.degree() > 0) {
        int d = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        UPolyZ r = pseudo_rem(a, b);
        a = std::move(b);
        b = std::move(r);
        if (b.is_zero()) return 0;
        Int divisor = g * pow(h, d);
        for (auto& v : b.c) v /= divisor;
        g = a.lead();
        Int hp = pow(g, d);
        h = (d == 0) ? h : Int(hp / pow(h, d - 1));
    }
    // b is a nonzero constant here
    Int t = pow(b.c[0], a.degree());
    Int hd = (a.degree() == 0) ? Int(1) : pow(h, a.degree() - 1);
    (void)res_acc;
    return sign * t / hd;
}

inline Int discriminant_int(const UPolyZ& p) {
    if (p.degree() < 1) throw std::domain_error("discriminant of constant");
    Int r = resultant_int(p, p.derivative());
    Int d(p.degree());
    Int s = ((Int(p.degree()) * (Int(p.degree()) - 1) / 2) % 2 == 0) ? 1 : -1;
    (void)d;
    return s * r / p.lead();
}

// ---- cyclotomic polynomials ----

inline const UPolyZ& cyclotomic(int n) {
    static std::map<int, UPolyZ> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 = prod_{d | n} Phi_d
    std::vector<Int> xn(n + 1, Int(0));
    xn[0] = -1;
    xn[n] = 1;
    UPolyZ q{UPolyZ(std::move(xn))};
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        q = exact_div(q, cyclotomic(d));
    }
    return cache.emplace(n, std::move(q)).first->second;
}

inline int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

// ---- printing (reports and factor certificates) ----

template <class K>
std::string poly_to_string(const UPoly<K>& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        K v = p.at(i);
        if (v == K(0)) continue;
        std::string coeff = to_string(v);
        bool neg = !coeff.empty() && coeff[0] == '-';
        if (first) {
            if (neg) { os << "-"; coeff = coeff.substr(1); }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) coeff = coeff.substr(1);
        }
        first = false;
        bool unit_coeff = (coeff == "1");
        if (i == 0) {
            os << coeff;
        } else {
            if (!unit_coeff) os << coeff << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

inline std::string to_string(const Int& n) {
    return n.str();
}

} // namespace mahler
