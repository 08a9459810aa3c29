#pragma once

// Polynomial arithmetic over F_p for word-sized odd primes p: distinct
// degree and equal degree (Cantor-Zassenhaus) factorization.  Used by the
// rational factorizer (mod-p image + Hensel lifting) and by the Dedekind
// zeta Euler product (residue degrees of a defining polynomial mod p).

#include <mahler/upoly.hpp>
#include <cstdint>
#include <random>
#include <vector>

namespace mahler {

namespace fp {

inline uint64_t addp(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline uint64_t subp(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }
inline uint64_t mulp(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}
inline uint64_t powp(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulp(r, a, p);
        a = mulp(a, a, p);
        e >>= 1;
    }
    return r;
}
inline uint64_t invp(uint64_t a, uint64_t p) { return powp(a % p, p - 2, p); }

} // namespace fp

/// Dense polynomial over F_p, lowest degree first, normalized.
struct PolyP {
    std::vector<uint64_t> c;
    uint64_t p = 0;

    PolyP() = default;
    PolyP(std::vector<uint64_t> coeffs, uint64_t prime) : c(std::move(coeffs)), p(prime) { normalize(); }
    static PolyP zero(uint64_t p) { return PolyP({}, p); }
    static PolyP one(uint64_t p) { return PolyP({1 % p}, p); }
    static PolyP x(uint64_t p) { return PolyP({0, 1}, p); }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    uint64_t lead() const { return c.back(); }
};

inline PolyP to_modp(const UPolyZ& f, uint64_t p) {
    std::vector<uint64_t> c(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) {
        Int v = f.c[i] % Int(p);
        if (v < 0) v += Int(p);
        c[i] = v.convert_to<uint64_t>();
    }
    return PolyP(std::move(c), p);
}

inline PolyP add(const PolyP& a, const PolyP& b) {
    std::vector<uint64_t> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] = fp::addp(r[i], b.c[i], a.p ? a.p : b.p);
    return PolyP(std::move(r), a.p ? a.p : b.p);
}

inline PolyP sub(const PolyP& a, const PolyP& b) {
    uint64_t p = a.p ? a.p : b.p;
    std::vector<uint64_t> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] = fp::subp(r[i], b.c[i], p);
    return PolyP(std::move(r), p);
}

inline PolyP mul(const PolyP& a, const PolyP& b) {
    if (a.is_zero() || b.is_zero()) return PolyP::zero(a.p ? a.p : b.p);
    uint64_t p = a.p;
    std::vector<uint64_t> r(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r[i + j] = fp::addp(r[i + j], fp::mulp(a.c[i], b.c[j], p), p);
    }
    return PolyP(std::move(r), p);
}

inline PolyP scalar_mul(uint64_t s, const PolyP& a) {
    std::vector<uint64_t> r = a.c;
    for (auto& v : r) v = fp::mulp(v, s, a.p);
    return PolyP(std::move(r), a.p);
}

inline std::pair<PolyP, PolyP> divrem(const PolyP& a, const PolyP& b) {
    uint64_t p = b.p;
    if (b.is_zero()) throw std::domain_error("mod-p division by zero");
    PolyP q = PolyP::zero(p), r = a;
    q.c.assign(std::max(a.degree() - b.degree() + 1, 0), 0);
    uint64_t binv = fp::invp(b.lead(), p);
    while (!r.is_zero() && r.degree() >= b.degree()) {
        uint64_t f = fp::mulp(r.lead(), binv, p);
        int d = r.degree() - b.degree();
        q.c[d] = f;
        for (int i = 0; i <= b.degree(); ++i)
            r.c[i + d] = fp::subp(r.c[i + d], fp::mulp(f, b.c[i], p), p);
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

inline PolyP monic(const PolyP& a) {
    if (a.is_zero()) return a;
    return scalar_mul(fp::invp(a.lead(), a.p), a);
}

inline PolyP gcd(PolyP a, PolyP b) {
    while (!b.is_zero()) {
        PolyP r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

inline PolyP derivative(const PolyP& a) {
    if (a.c.size() <= 1) return PolyP::zero(a.p);
    std::vector<uint64_t> r(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r[i - 1] = fp::mulp(a.c[i], i % a.p, a.p);
    return PolyP(std::move(r), a.p);
}

/// g^e mod f.
inline PolyP powmod(PolyP g, Int e, const PolyP& f) {
    PolyP r = PolyP::one(f.p);
    g = divrem(g, f).second;
    while (e > 0) {
        if ((e & 1) != 0) r = divrem(mul(r, g), f).second;
        g = divrem(mul(g, g), f).second;
        e >>= 1;
    }
    return r;
}

inline PolyP squarefree_part(const PolyP& f) {
    PolyP d = derivative(f);
    if (d.is_zero()) {
        // f is a p-th power: x^(kp) exponents collapse
        uint64_t p = f.p;
        std::vector<uint64_t> r(f.degree() / p + 1, 0);
        for (size_t i = 0; i < f.c.size(); i += p) r[i / p] = f.c[i];
        return squarefree_part(PolyP(std::move(r), p));
    }
    return divrem(f, gcd(f, d)).first;
}

/// Distinct-degree factorization of a monic squarefree f: list of
/// (product of all irreducible factors of degree d, d).
inline std::vector<std::pair<PolyP, int>> ddf(PolyP f) {
    std::vector<std::pair<PolyP, int>> out;
    uint64_t p = f.p;
    PolyP h = PolyP::x(p);
    int d = 0;
    while (f.degree() > 0 && f.degree() >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, Int(p), f); // h = x^(p^d) mod f
        PolyP g = gcd(sub(h, PolyP::x(p)), f);
        if (g.degree() > 0) {
            out.push_back({g, d});
            f = divrem(f, g).first;
            h = divrem(h, f).second;
        }
    }
    if (f.degree() > 0) out.push_back({f, f.degree()});
    return out;
}

/// Equal-degree splitting (Cantor-Zassenhaus, p odd): factors f into its
/// irreducible factors, all known to have degree d.
inline void edf(const PolyP& f, int d, std::mt19937_64& rng, std::vector<PolyP>& out) {
    if (f.degree() == d) {
        out.push_back(monic(f));
        return;
    }
    uint64_t p = f.p;
    Int exponent = (pow(Int(p), d) - 1) / 2;
    for (;;) {
        std::vector<uint64_t> rc(f.degree());
        for (auto& v : rc) v = rng() % p;
        PolyP r(std::move(rc), p);
        if (r.is_zero()) continue;
        PolyP g = gcd(r, f);
        if (g.degree() == 0) {
            PolyP h = powmod(r, exponent, f);
            h = sub(h, PolyP::one(p));
            g = gcd(h, f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf(g, d, rng, out);
            edf(divrem(f, g).first, d, rng, out);
            return;
        }
    }
}

/// Full factorization of monic squarefree f over F_p (p odd).
inline std::vector<PolyP> factor_squarefree_modp(const PolyP& f, uint64_t seed = 12345) {
    std::mt19937_64 rng(seed);
    std::vector<PolyP> out;
    for (auto& [prod, d] : ddf(monic(f))) edf(prod, d, rng, out);
    std::sort(out.begin(), out.end(), [](const PolyP& a, const PolyP& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.c < b.c;
    });
    return out;
}

/// Degrees (with repetition count) of the distinct irreducible factors of
/// f mod p; multiplicities from ramification are collapsed first.
inline std::vector<int> distinct_factor_degrees(const UPolyZ& f, uint64_t p) {
    PolyP fp_ = to_modp(f, p);
    fp_.normalize();
    if (fp_.degree() < 1) return {};
    PolyP rad = squarefree_part(monic(fp_));
    std::vector<int> degs;
    for (auto& [prod, d] : ddf(rad)) {
        int count = prod.degree() / d;
        for (int i = 0; i < count; ++i) degs.push_back(d);
    }
    return degs;
}

} // namespace mahler
