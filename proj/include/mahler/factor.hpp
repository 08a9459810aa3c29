#pragma once

// Factorization of univariate polynomials over Q: squarefree split (Yun),
// mod-p factorization, quadratic Hensel lifting on a factor tree, and
// exhaustive subset recombination.  Valid for the degree range this
// library caps at (32); every result is certified by multiplying back.

#include <mahler/modp.hpp>
#include <mahler/upoly.hpp>
#include <optional>

namespace mahler {

struct Factorization {
    Rat unit{1};
    std::vector<std::pair<UPolyZ, int>> factors; // (primitive irreducible, multiplicity)

    UPolyQ expand() const {
        UPolyQ acc = UPolyQ::constant(unit);
        for (const auto& [f, m] : factors) {
            UPolyQ fq = to_rat_poly(f);
            for (int i = 0; i < m; ++i) acc = acc * fq;
        }
        return acc;
    }
};

namespace detail {

// ---- arithmetic mod m (m = p^k), coefficients in [0, m) ----

inline UPolyZ reduce_mod(const UPolyZ& f, const Int& m) {
    std::vector<Int> r(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) {
        r[i] = f.c[i] % m;
        if (r[i] < 0) r[i] += m;
    }
    return UPolyZ(std::move(r));
}

inline UPolyZ symmetric_mod(const UPolyZ& f, const Int& m) {
    std::vector<Int> r(f.c.size());
    Int half = m / 2;
    for (size_t i = 0; i < f.c.size(); ++i) {
        r[i] = f.c[i] % m;
        if (r[i] < 0) r[i] += m;
        if (r[i] > half) r[i] -= m;
    }
    return UPolyZ(std::move(r));
}

inline UPolyZ mul_mod(const UPolyZ& a, const UPolyZ& b, const Int& m) {
    return reduce_mod(a * b, m);
}

/// Division by a monic divisor with coefficients reduced mod m.
inline std::pair<UPolyZ, UPolyZ> divrem_monic_mod(const UPolyZ& a, const UPolyZ& b, const Int& m) {
    UPolyZ q, r = reduce_mod(a, m);
    q.c.assign(std::max(a.degree() - b.degree() + 1, 0), Int(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Int f = r.lead();
        int d = r.degree() - b.degree();
        q.c[d] = f;
        for (int i = 0; i <= b.degree(); ++i) {
            r.c[i + d] = (r.c[i + d] - f * b.c[i]) % m;
            if (r.c[i + d] < 0) r.c[i + d] += m;
        }
        r.normalize();
    }
    q.normalize();
    return {reduce_mod(q, m), r};
}

inline UPolyZ from_modp(const PolyP& f) {
    std::vector<Int> c(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) c[i] = Int(f.c[i]);
    return UPolyZ(std::move(c));
}

/// One quadratic Hensel step: from f = g*h (mod m), s*g + t*h = 1 (mod m)
/// to the same congruences mod m2 (m | m2 | m^2).  f, g, h monic.
inline void hensel_step(const UPolyZ& f, UPolyZ& g, UPolyZ& h, UPolyZ& s, UPolyZ& t,
                        const Int& m2) {
    UPolyZ e = reduce_mod(f - g * h, m2);
    auto [q, r] = divrem_monic_mod(mul_mod(s, e, m2), h, m2);
    g = reduce_mod(g + t * e + q * g, m2);
    h = reduce_mod(h + r, m2);
    UPolyZ b = reduce_mod(s * g + t * h - UPolyZ::constant(Int(1)), m2);
    auto [c, d] = divrem_monic_mod(mul_mod(s, b, m2), h, m2);
    s = reduce_mod(s - d, m2);
    t = reduce_mod(t - t * b - c * g, m2);
}

/// Lifts the factorization f = prod local[i] (mod p) to mod target, where
/// target is a power of p.  f and all local factors monic.
inline void hensel_lift_tree(const UPolyZ& f, std::vector<UPolyZ>& local, uint64_t p,
                             const Int& target) {
    if (local.size() == 1) {
        local[0] = reduce_mod(f, target);
        return;
    }
    size_t half = local.size() / 2;
    PolyP gp = PolyP::one(p), hp = PolyP::one(p);
    for (size_t i = 0; i < half; ++i) gp = mul(gp, to_modp(local[i], p));
    for (size_t i = half; i < local.size(); ++i) hp = mul(hp, to_modp(local[i], p));

    // extended Euclid over F_p for the Bezout pair
    PolyP a = gp, b = hp;
    PolyP sa = PolyP::one(p), sb = PolyP::zero(p);
    PolyP ta = PolyP::zero(p), tb = PolyP::one(p);
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        PolyP sn = sub(sa, mul(q, sb)), tn = sub(ta, mul(q, tb));
        a = std::move(b); b = std::move(r);
        sa = std::move(sb); sb = std::move(sn);
        ta = std::move(tb); tb = std::move(tn);
    }
    uint64_t ainv = fp::invp(a.lead(), p); // a is the gcd = nonzero constant
    sa = scalar_mul(ainv, sa);
    ta = scalar_mul(ainv, ta);

    UPolyZ g = from_modp(gp), h = from_modp(hp);
    UPolyZ s = from_modp(sa), t = from_modp(ta);
    Int m(p);
    while (m < target) {
        Int m2 = m * m;
        if (m2 > target) m2 = target; // target is p^k, so m2 stays a power of p
        hensel_step(reduce_mod(f, m2), g, h, s, t, m2);
        m = m2;
    }
    std::vector<UPolyZ> left(local.begin(), local.begin() + half);
    std::vector<UPolyZ> right(local.begin() + half, local.end());
    hensel_lift_tree(g, left, p, target);
    hensel_lift_tree(h, right, p, target);
    for (size_t i = 0; i < half; ++i) local[i] = std::move(left[i]);
    for (size_t i = half; i < local.size(); ++i) local[i] = std::move(right[i - half]);
}

/// Coefficient bound for monic factors of monic f (Mignotte-style).
inline Int factor_coeff_bound(const UPolyZ& f) {
    Int norm2 = 0;
    for (const auto& v : f.c) norm2 += v * v;
    Int b = sqrt(norm2) + 1;
    return (b + abs(f.lead())) << (f.degree() + 1);
}

/// Factors a primitive squarefree integer polynomial of degree >= 1 into
/// primitive irreducible factors over Z.
inline std::vector<UPolyZ> factor_squarefree_z(const UPolyZ& g) {
    if (g.degree() == 1) return {primitive_part(g)};
    const Int& L = g.lead();

    // monicize: G(y) = L^(n-1) g(y/L); leading coefficient becomes 1
    int n = g.degree();
    std::vector<Int> Gc(n + 1);
    for (int i = 0; i < n; ++i) Gc[i] = g.c[i] * pow(L, n - 1 - i);
    Gc[n] = 1;
    UPolyZ G(std::move(Gc));

    // pick an odd prime keeping G squarefree, preferring few modular factors
    auto is_prime_u64 = [](uint64_t m) {
        if (m < 2 || m % 2 == 0) return m == 2;
        for (uint64_t d = 3; d * d <= m; d += 2)
            if (m % d == 0) return false;
        return true;
    };
    std::vector<PolyP> best;
    uint64_t best_p = 0;
    uint64_t trial = 101;
    for (int tried = 0; tried < 5;) {
        do {
            trial += 2;
        } while (!is_prime_u64(trial));
        PolyP gp = to_modp(G, trial);
        if (gp.degree() != n) continue;
        if (gcd(gp, derivative(gp)).degree() != 0) continue;
        auto fac = factor_squarefree_modp(monic(gp));
        ++tried;
        if (best.empty() || fac.size() < best.size()) {
            best = std::move(fac);
            best_p = trial;
        }
        if (best.size() == 1) break;
    }
    if (best.size() == 1) return {primitive_part(g)}; // irreducible already mod p

    // Hensel lift to above twice the coefficient bound
    Int bound = factor_coeff_bound(G) * 2;
    Int target(best_p);
    while (target <= bound) target *= Int(best_p);
    std::vector<UPolyZ> lifted(best.size());
    for (size_t i = 0; i < best.size(); ++i) lifted[i] = from_modp(best[i]);
    hensel_lift_tree(reduce_mod(G, target), lifted, best_p, target);

    // subset recombination
    std::vector<UPolyZ> result;
    std::vector<UPolyZ> pool = std::move(lifted);
    UPolyZ rem = G;
    auto try_subset = [&](const std::vector<size_t>& idx) -> bool {
        UPolyZ prod = UPolyZ::constant(Int(1));
        for (size_t i : idx) prod = mul_mod(prod, pool[i], target);
        prod = symmetric_mod(prod, target);
        if (prod.is_zero() || rem.c[0] % prod.c[0] != 0) return false;
        try {
            UPolyZ quo = exact_div(rem, prod);
            rem = quo;
            result.push_back(prod);
            std::vector<UPolyZ> np;
            for (size_t i = 0; i < pool.size(); ++i)
                if (std::find(idx.begin(), idx.end(), i) == idx.end()) np.push_back(pool[i]);
            pool = std::move(np);
            return true;
        } catch (const std::domain_error&) {
            return false;
        }
    };
    size_t card = 1;
    while (2 * card <= pool.size()) {
        // iterate subsets of size card
        std::vector<size_t> idx(card);
        for (size_t i = 0; i < card; ++i) idx[i] = i;
        bool advanced = false;
        for (;;) {
            if (try_subset(idx)) { advanced = true; break; }
            // next combination
            size_t k = card;
            while (k-- > 0) {
                if (idx[k] + (card - k) < pool.size()) {
                    ++idx[k];
                    for (size_t j = k + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (k == 0) goto subsets_done;
            }
        }
    subsets_done:
        if (!advanced) ++card;
    }
    if (rem.degree() > 0) result.push_back(rem);

    // undo the monic substitution: h(x) = H(L x) made primitive
    std::vector<UPolyZ> out;
    for (const auto& H : result) {
        std::vector<Int> hc(H.c.size());
        Int pw = 1;
        for (size_t i = 0; i < H.c.size(); ++i) {
            hc[i] = H.c[i] * pw;
            pw *= L;
        }
        out.push_back(primitive_part(UPolyZ(std::move(hc))));
    }
    return out;
}

} // namespace detail

/// Irreducible factorization over Q.  Degree capped at 32.
inline Factorization factor_unipoly(const UPolyQ& p, int degree_cap = 32) {
    if (p.is_zero()) throw std::domain_error("factor_unipoly: zero polynomial");
    if (p.degree() > degree_cap)
        throw std::domain_error("factor_unipoly: degree exceeds cap of " + std::to_string(degree_cap));
    Factorization out;
    auto [unit, f] = clear_denominators(p);
    out.unit = unit;
    if (f.degree() == 0) return out;

    // strip monomial factor x^k
    size_t k = 0;
    while (k < f.c.size() && f.c[k] == 0) ++k;
    if (k > 0) {
        out.factors.push_back({UPolyZ({Int(0), Int(1)}), static_cast<int>(k)});
        f.c.erase(f.c.begin(), f.c.begin() + k);
    }
    if (f.degree() >= 1) {
        for (auto& [sq_part, mult] : squarefree_factors(to_rat_poly(f))) {
            UPolyZ prim = clear_denominators(sq_part).second;
            for (auto& irr : detail::factor_squarefree_z(prim))
                out.factors.push_back({irr, mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.c < b.first.c;
    });
    // certification and unit fixup: expand() must reproduce p exactly
    UPolyQ check = UPolyQ::constant(out.unit);
    for (const auto& [fac, m] : out.factors) {
        UPolyQ fq = to_rat_poly(fac);
        for (int i = 0; i < m; ++i) check = check * fq;
    }
    if (!(check == p)) {
        // leading-unit mismatch can only come from sign/scale bookkeeping
        Rat fix = p.lead() / check.lead();
        out.unit *= fix;
        check = UPolyQ::constant(fix) * check;
        if (!(check == p)) throw std::logic_error("factor_unipoly: certification failed");
    }
    return out;
}

inline bool is_irreducible(const UPolyQ& p) {
    if (p.degree() <= 0) return false;
    auto f = factor_unipoly(p);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

/// Cyclotomic test: true iff p (integer coefficients after clearing
/// denominators, monomial content stripped) is a product of cyclotomic
/// polynomials.  Returns the multiset of cyclotomic indices or the
/// non-cyclotomic remainder as witness.
struct CyclotomicResult {
    bool is_cyclotomic = false;
    std::vector<std::pair<int, int>> indices; // (d, multiplicity) of Phi_d
    UPolyZ witness;                           // non-cyclotomic part (empty if cyclotomic)
    Rat unit{1};
    int monomial_power = 0;
};

inline CyclotomicResult cyclotomic_test(const UPolyQ& p) {
    if (p.is_zero()) throw std::domain_error("cyclotomic_test: zero polynomial");
    CyclotomicResult res;
    auto [unit, f] = clear_denominators(p);
    res.unit = unit;
    size_t k = 0;
    while (k < f.c.size() && f.c[k] == 0) ++k;
    if (k > 0) {
        res.monomial_power = static_cast<int>(k);
        f.c.erase(f.c.begin(), f.c.begin() + k);
    }
    // phi(d) >= sqrt(d/2), so phi(d) <= deg forces d <= 2*deg^2
    int deg0 = f.degree();
    for (int d = 1; d <= 2 * deg0 * deg0 + 1 && f.degree() > 0; ++d) {
        if (euler_phi(d) > f.degree()) continue;
        const UPolyZ& phi = cyclotomic(d);
        int mult = 0;
        for (;;) {
            try {
                UPolyZ q = exact_div(f, phi);
                f = std::move(q);
                ++mult;
            } catch (const std::domain_error&) {
                break;
            }
        }
        if (mult > 0) res.indices.push_back({d, mult});
    }
    if (f.degree() == 0) {
        res.is_cyclotomic = true;
    } else {
        res.is_cyclotomic = false;
        res.witness = f;
    }
    return res;
}

} // namespace mahler
