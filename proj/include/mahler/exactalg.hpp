#pragma once

// Exact bivariate algebra over Q: resultants, discriminants, squarefree
// decomposition, bivariate factorization (specialize + power-series Hensel
// + recombination), and successive-resultant elimination of small
// polynomial systems guided by a numeric seed.

#include <mahler/factor.hpp>
#include <mahler/lpoly.hpp>
#include <mahler/mpoly.hpp>
#include <mahler/roots.hpp>

namespace mahler {

constexpr int kUniDegreeCap = 32;
constexpr int kBiDegreeCap = 24;

/// Exact bivariate polynomial: rational unit times a primitive integer
/// polynomial with positive leading term.
struct BiPoly {
    Rat unit{1};
    MPoly prim{2}; // vars: 0 = x, 1 = y

    BiPoly() = default;
    BiPoly(Rat u, MPoly p) : unit(std::move(u)), prim(std::move(p)) {}
    explicit BiPoly(const LaurentPoly2& lp) {
        auto [u, m] = to_mpoly(lp);
        unit = u;
        prim = m;
    }
    bool is_zero() const { return prim.is_zero() || unit == 0; }
    int degree(int var) const { return prim.degree(var); }

    static BiPoly normalized(const MPoly& raw, Rat scale = Rat(1)) {
        if (raw.is_zero()) return BiPoly(Rat(0), MPoly(2));
        Int cont = raw.int_content();
        if (raw.terms.rbegin()->second < 0) cont = -cont;
        return BiPoly(scale * Rat(cont), mp_exact_div(raw, MPoly::constant(raw.nvars, cont)));
    }
};

/// Sylvester resultant eliminating `var`; exact including the unit.
inline BiPoly resultant(const BiPoly& p, const BiPoly& q, int var) {
    if (p.is_zero() || q.is_zero()) throw std::domain_error("resultant of zero polynomial");
    int dp = p.degree(var), dq = q.degree(var);
    if (dp < 0 || dq < 0) throw std::domain_error("resultant: variable missing");
    MPoly r = mp_resultant(p.prim, q.prim, var);
    Rat scale = pow(p.unit, dq) * pow(q.unit, dp);
    return BiPoly::normalized(r, scale);
}

/// disc = (-1)^(d(d-1)/2) Res(P, dP/dvar) / lc_var(P).
inline BiPoly discriminant(const BiPoly& p, int var) {
    int d = p.degree(var);
    if (d < 1) throw std::domain_error("discriminant needs positive degree in the variable");
    MPoly der = p.prim.derivative(var);
    MPoly res = mp_resultant(p.prim, der, var);
    MPoly lc = p.prim.coeff_of(var, d);
    MPoly quo = res.is_zero() ? res : mp_exact_div(res, lc);
    int sgn = ((static_cast<long>(d) * (d - 1) / 2) % 2 == 0) ? 1 : -1;
    Rat scale = pow(p.unit, 2 * d - 2) * Rat(sgn);
    return BiPoly::normalized(quo, scale);
}

struct BiFactorization {
    Rat unit{1};
    std::vector<std::pair<MPoly, int>> factors; // primitive, positive lex-leading coeff

    MPoly expand_prim() const {
        MPoly acc = MPoly::constant(2, 1);
        for (const auto& [f, m] : factors)
            for (int i = 0; i < m; ++i) acc = acc * f;
        return acc;
    }
};

/// Squarefree decomposition of a bivariate polynomial: primitive part is
/// processed Yun-style in x; the content (a polynomial in y alone)
/// recurses univariately.
inline BiFactorization squarefree_decomposition(const BiPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
    BiFactorization out;
    out.unit = p.unit;
    std::function<void(const MPoly&, int)> run = [&](const MPoly& f, int var) {
        if (f.is_constant()) {
            if (!f.is_zero()) out.unit *= Rat(f.terms.begin()->second);
            return;
        }
        if (f.degree(var) == 0) {
            int other = 1 - var;
            if (f.degree(other) > 0) run(f, other);
            else out.unit *= Rat(f.terms.begin()->second);
            return;
        }
        MPoly cont = mp_content(f, var);
        MPoly prim = mp_exact_div(f, cont);
        if (!cont.is_constant()) run(cont, 1 - var);
        else if (cont.terms.begin()->second != 1) out.unit *= Rat(cont.terms.begin()->second);
        // Yun in `var` over the UFD Z[other var]
        MPoly a = prim, d = prim.derivative(var);
        MPoly g = mp_gcd(a, d);
        if (g.is_constant()) {
            out.factors.push_back({prim, 1});
            return;
        }
        MPoly w = mp_exact_div(a, g), y = mp_exact_div(d, g);
        int i = 1;
        while (w.degree(var) > 0 || w.total_degree() > 0) {
            MPoly z = y - w.derivative(var);
            MPoly fl = mp_gcd(w, z);
            if (!fl.is_constant()) out.factors.push_back({fl, i});
            w = mp_exact_div(w, fl);
            y = mp_exact_div(z, fl);
            ++i;
            if (i > 256) throw std::logic_error("squarefree decomposition runaway");
        }
    };
    run(p.prim, 0);
    return out;
}

namespace detail {

// polynomial in x with coefficients in Q[t] truncated to degree < K
using XSeries = std::vector<UPolyQ>;

inline UPolyQ trunc(const UPolyQ& p, int K) {
    if (p.degree() < K) return p;
    std::vector<Rat> c(p.c.begin(), p.c.begin() + K);
    return UPolyQ(std::move(c));
}

inline XSeries xs_mul(const XSeries& a, const XSeries& b, int K) {
    XSeries r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] = r[i + j] + trunc(a[i] * b[j], K);
        }
    }
    while (r.size() > 1 && r.back().is_zero()) r.pop_back();
    return r;
}

inline XSeries xs_sub(XSeries a, const XSeries& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
    while (a.size() > 1 && a.back().is_zero()) a.pop_back();
    return a;
}

inline XSeries xs_add(XSeries a, const XSeries& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] = a[i] + b[i];
    while (a.size() > 1 && a.back().is_zero()) a.pop_back();
    return a;
}

inline XSeries xs_trunc_all(XSeries a, int K) {
    for (auto& c : a) c = trunc(c, K);
    while (a.size() > 1 && a.back().is_zero()) a.pop_back();
    return a;
}

inline bool xs_is_zero(const XSeries& a) {
    for (const auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

inline int xs_deg(const XSeries& a) {
    for (size_t i = a.size(); i-- > 0;)
        if (!a[i].is_zero()) return static_cast<int>(i);
    return -1;
}

/// Division by a divisor monic in x.
inline std::pair<XSeries, XSeries> xs_divrem_monic(const XSeries& a, const XSeries& b, int K) {
    int db = xs_deg(b);
    XSeries r = a, q{UPolyQ()};
    int da = xs_deg(r);
    if (da >= db) q.assign(da - db + 1, UPolyQ());
    while (xs_deg(r) >= db) {
        int dr = xs_deg(r);
        UPolyQ f = r[dr];
        q[dr - db] = q[dr - db] + f;
        for (int i = 0; i <= db; ++i)
            r[i + dr - db] = trunc(r[i + dr - db] - f * b[i], K);
        r.resize(dr); // leading term cancelled exactly
        while (r.size() > 1 && r.back().is_zero()) r.pop_back();
        if (r.empty()) r.push_back(UPolyQ());
    }
    return {q, r};
}

inline XSeries xs_from_upoly(const UPolyQ& f) {
    XSeries r(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) r[i] = UPolyQ::constant(f.c[i]);
    if (r.empty()) r.push_back(UPolyQ());
    return r;
}

/// Quadratic Hensel lifting of a monic coprime pair over Q[t]/(t^K).
inline void xs_hensel_pair(const XSeries& f, XSeries& g, XSeries& h, int K) {
    // Bezout over Q[x] from the t = 0 slices
    auto slice0 = [](const XSeries& a) {
        std::vector<Rat> c(a.size());
        for (size_t i = 0; i < a.size(); ++i) c[i] = a[i].at(0);
        return UPolyQ(std::move(c));
    };
    UPolyQ g0 = slice0(g), h0 = slice0(h);
    UPolyQ sa = UPolyQ::constant(Rat(1)), sb, ta, tb = UPolyQ::constant(Rat(1));
    UPolyQ A = g0, B = h0;
    while (!B.is_zero()) {
        auto [q, r] = divrem(A, B);
        UPolyQ sn = sa - q * sb, tn = ta - q * tb;
        A = std::move(B); B = std::move(r);
        sa = std::move(sb); sb = std::move(sn);
        ta = std::move(tb); tb = std::move(tn);
    }
    if (A.degree() != 0) throw std::domain_error("hensel: factors not coprime");
    Rat inv = Rat(1) / A.c[0];
    UPolyQ S = inv * sa, T = inv * ta; // S g0 + T h0 = 1
    XSeries s = xs_from_upoly(S), t = xs_from_upoly(T);

    int k = 1;
    while (k < K) {
        int k2 = std::min(2 * k, K);
        XSeries e = xs_trunc_all(xs_sub(f, xs_mul(g, h, k2)), k2);
        auto [q, r] = xs_divrem_monic(xs_mul(s, e, k2), h, k2);
        g = xs_trunc_all(xs_add(g, xs_add(xs_mul(t, e, k2), xs_mul(q, g, k2))), k2);
        h = xs_trunc_all(xs_add(h, r), k2);
        XSeries b = xs_add(xs_mul(s, g, k2), xs_mul(t, h, k2));
        b = xs_trunc_all(xs_sub(b, XSeries{UPolyQ::constant(Rat(1))}), k2);
        auto [c2, d2] = xs_divrem_monic(xs_mul(s, b, k2), h, k2);
        s = xs_trunc_all(xs_sub(s, d2), k2);
        t = xs_trunc_all(xs_sub(t, xs_add(xs_mul(t, b, k2), xs_mul(c2, g, k2))), k2);
        k = k2;
    }
}

inline void xs_lift_tree(const XSeries& f, std::vector<XSeries>& local, int K) {
    if (local.size() == 1) {
        local[0] = f;
        return;
    }
    size_t half = local.size() / 2;
    XSeries g{UPolyQ::constant(Rat(1))}, h{UPolyQ::constant(Rat(1))};
    for (size_t i = 0; i < half; ++i) g = xs_mul(g, local[i], 1);
    for (size_t i = half; i < local.size(); ++i) h = xs_mul(h, local[i], 1);
    xs_hensel_pair(f, g, h, K);
    std::vector<XSeries> left(local.begin(), local.begin() + half);
    std::vector<XSeries> right(local.begin() + half, local.end());
    xs_lift_tree(g, left, K);
    xs_lift_tree(h, right, K);
    for (size_t i = 0; i < half; ++i) local[i] = std::move(left[i]);
    for (size_t i = half; i < local.size(); ++i) local[i] = std::move(right[i - half]);
}

inline UPolyQ upoly_compose(const UPolyQ& p, const UPolyQ& arg) {
    UPolyQ acc;
    for (size_t i = p.c.size(); i-- > 0;)
        acc = acc * arg + UPolyQ::constant(p.c[i]);
    return acc;
}

/// Factors a primitive squarefree bivariate polynomial (deg_x >= 1,
/// deg_y >= 1) into primitive irreducible integer factors.
inline std::vector<MPoly> factor_squarefree_bi(const MPoly& S) {
    int m = S.degree(0);
    if (m == 1) return {S}; // linear in x and primitive: irreducible
    MPoly lc = S.coeff_of(0, m); // in y only

    // monicize in x over Z[y]: S*(x,y) = lc^(m-1) S(x/lc, y),
    // i.e. coefficient of x^i is c_i * lc^(m-1-i), and x^m gets 1.
    MPoly Sstar = MPoly::variable(2, 0, m);
    {
        auto coeffs = univ_view(S, 0);
        for (int i = 0; i < m; ++i) {
            if (coeffs[i].is_zero()) continue;
            MPoly lcp = MPoly::constant(2, 1);
            for (int k = 0; k < m - 1 - i; ++k) lcp = lcp * lc;
            MPoly xi = MPoly::variable(2, 0, i);
            Sstar = Sstar + xi * coeffs[i] * lcp;
        }
    }
    int K = Sstar.degree(1) + 1;

    // pick a shift y = a with a squarefree full-degree specialization
    long a = 0;
    UPolyQ f0;
    for (long trial = 0;; ++trial) {
        a = (trial % 2 == 0) ? trial / 2 : -(trial / 2 + 1);
        std::vector<Rat> cf(m + 1, Rat(0));
        for (const auto& [e, c] : Sstar.terms) cf[e[0]] += Rat(c) * pow(Rat(a), e[1]);
        UPolyQ fa(std::move(cf));
        if (fa.degree() != m) continue;
        if (gcd_poly(fa, fa.derivative()).degree() != 0) continue;
        f0 = fa;
        break;
    }

    auto uni = factor_unipoly(f0, kUniDegreeCap);
    if (uni.factors.size() == 1 && uni.factors[0].second == 1) return {S};

    // monic local factors over Q
    std::vector<XSeries> local;
    for (const auto& [fz, mult] : uni.factors) {
        if (mult > 1) throw std::logic_error("squarefree specialization produced multiplicity");
        local.push_back(detail::xs_from_upoly(monic(to_rat_poly(fz))));
    }

    // S*(x, t + a) as an XSeries
    XSeries F(m + 1);
    UPolyQ shift_arg(std::vector<Rat>{Rat(a), Rat(1)}); // t + a
    for (int i = 0; i <= m; ++i) {
        UPolyZ ci = mp_to_upoly(Sstar.coeff_of(0, i), 1);
        F[i] = upoly_compose(to_rat_poly(ci), shift_arg);
    }
    xs_lift_tree(F, local, K);

    // recombination
    std::vector<MPoly> found;
    MPoly rem = Sstar;
    std::vector<XSeries> pool = std::move(local);
    UPolyQ back_shift(std::vector<Rat>{Rat(-a), Rat(1)}); // y - a

    auto candidate_to_mpoly = [&](const XSeries& c) -> MPoly {
        // x-coefficients are polynomials in t; substitute t = y - a
        MPoly r(2);
        Int den = 1;
        std::vector<UPolyQ> ys(c.size());
        for (size_t i = 0; i < c.size(); ++i) {
            ys[i] = upoly_compose(c[i], back_shift);
            for (const auto& q : ys[i].c) den = den / gcd(den, denominator(q)) * denominator(q);
        }
        for (size_t i = 0; i < c.size(); ++i)
            for (int j = 0; j <= ys[i].degree(); ++j) {
                Rat v = ys[i].at(j) * Rat(den);
                Expo e{};
                e[0] = static_cast<int>(i);
                e[1] = j;
                r.add_term(e, numerator(v));
            }
        if (r.is_zero()) return r;
        Int ic = r.int_content();
        if (r.terms.rbegin()->second < 0) ic = -ic;
        return mp_exact_div(r, MPoly::constant(2, ic));
    };

    auto try_subset = [&](const std::vector<size_t>& idx) -> bool {
        XSeries prod{UPolyQ::constant(Rat(1))};
        for (size_t i : idx) prod = xs_mul(prod, pool[i], K);
        MPoly cand = candidate_to_mpoly(prod);
        if (cand.is_zero() || !mp_divides(rem, cand)) return false;
        rem = mp_exact_div(rem, cand);
        found.push_back(cand);
        std::vector<XSeries> np;
        for (size_t i = 0; i < pool.size(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) np.push_back(pool[i]);
        pool = std::move(np);
        return true;
    };
    size_t card = 1;
    while (2 * card <= pool.size()) {
        std::vector<size_t> idx(card);
        for (size_t i = 0; i < card; ++i) idx[i] = i;
        bool advanced = false;
        for (;;) {
            if (try_subset(idx)) { advanced = true; break; }
            size_t k = card;
            bool more = false;
            while (k-- > 0) {
                if (idx[k] + (card - k) < pool.size()) {
                    ++idx[k];
                    for (size_t j = k + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
                    more = true;
                    break;
                }
            }
            if (!more) break;
        }
        if (!advanced) ++card;
    }
    if (rem.total_degree() > 0) found.push_back(rem);

    // undo monicization: G(x,y) = G*(lc(y) x, y), primitive part
    std::vector<MPoly> out;
    for (const auto& G : found) {
        MPoly g(2);
        int dx = G.degree(0);
        (void)dx;
        for (const auto& [e, c] : G.terms) {
            MPoly lcp = MPoly::constant(2, 1);
            for (int k = 0; k < e[0]; ++k) lcp = lcp * lc;
            MPoly t(2);
            t.terms.emplace(e, c);
            g = g + t * lcp;
        }
        // strip full content with respect to x (covers integer content too)
        MPoly cont = mp_content(g, 0);
        g = mp_exact_div(g, cont);
        if (g.terms.rbegin()->second < 0) g = -g;
        out.push_back(g);
    }
    return out;
}

} // namespace detail

/// Irreducible factorization over Q of a bivariate polynomial.  Certified
/// by expansion; total degree capped.
inline BiFactorization factor_bipoly(const BiPoly& p, int degree_cap = kBiDegreeCap) {
    if (p.is_zero()) throw std::domain_error("factor_bipoly: zero polynomial");
    if (p.prim.total_degree() > degree_cap ||
        p.degree(0) > degree_cap || p.degree(1) > degree_cap)
        throw std::domain_error("factor_bipoly: degree exceeds cap");
    BiFactorization out;
    out.unit = p.unit;

    // monomial content
    Expo mono{};
    MPoly work = p.prim.strip_monomial_content(&mono);
    for (int v = 0; v < 2; ++v)
        if (mono[v] > 0) out.factors.push_back({MPoly::variable(2, v), mono[v]});

    std::function<void(const MPoly&, int)> emit = [&](const MPoly& f, int mult) {
        if (f.is_constant()) {
            if (!f.is_zero()) out.unit *= pow(Rat(f.terms.begin()->second), mult);
            return;
        }
        bool has_x = f.degree(0) > 0, has_y = f.degree(1) > 0;
        if (!has_x || !has_y) {
            int var = has_x ? 0 : 1;
            auto uf = factor_unipoly(to_rat_poly(mp_to_upoly(f, var)), kUniDegreeCap);
            out.unit *= pow(uf.unit, mult);
            for (const auto& [z, m2] : uf.factors)
                out.factors.push_back({mp_from_upoly(z, var, 2), m2 * mult});
            return;
        }
        MPoly cont = mp_content(f, 0);
        MPoly prim = mp_exact_div(f, cont);
        if (!cont.is_constant()) emit(cont, mult);
        else if (cont.terms.begin()->second != 1)
            out.unit *= pow(Rat(cont.terms.begin()->second), mult);
        for (auto& irr : detail::factor_squarefree_bi(prim))
            out.factors.push_back({irr, mult});
    };

    BiFactorization sq = squarefree_decomposition(BiPoly(Rat(1), work));
    out.unit *= sq.unit;
    for (const auto& [part, mult] : sq.factors) emit(part, mult);

    // sort and certify
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.terms.size() != b.first.terms.size())
            return a.first.terms.size() < b.first.terms.size();
        return a.first.terms < b.first.terms;
    });
    MPoly check = out.expand_prim();
    // p.prim is primitive with positive lex-leading term; the expansion can
    // differ from it by a rational constant only, which we move to the unit
    if (!(check == p.prim)) {
        Int cc = check.int_content();
        if (check.terms.rbegin()->second < 0) cc = -cc;
        MPoly cp = mp_exact_div(check, MPoly::constant(2, cc));
        if (!(cp == p.prim)) throw std::logic_error("factor_bipoly: certification failed");
        out.unit *= Rat(cc);
        // restate the unit so that unit * prod(factors) = unit_in * prim_in
        out.unit = p.unit * Rat(1) / Rat(cc) * Rat(cc); // unchanged; kept for clarity
        out.unit = p.unit / Rat(cc);
        out.unit = p.unit; // factors expand to cc * prim, so unit must divide by cc
        out.unit = p.unit / Rat(cc);
    }
    return out;
}

// ---- elimination ----

struct EliminateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Magnitude scale of p at the point (sum of |coeff| * |point|^e).
inline Real eval_scale(const MPoly& p, const std::vector<Cplx>& pt) {
    Real s = 0;
    for (const auto& [e, c] : p.terms) {
        Real t = abs(Real(c));
        for (int i = 0; i < p.nvars; ++i)
            if (e[i]) t *= pow(abs(pt[i]), e[i]);
        s += t;
    }
    return s;
}

/// Eliminates all variables except keep_x, keep_y from the system by
/// successive resultants; factors intermediate results when they involve
/// at most two variables and keeps the factors vanishing at the seed.
inline LaurentPoly2 eliminate(std::vector<MPoly> eqs, int nvars, int keep_x, int keep_y,
                              const std::vector<Cplx>& seed, int prec = 40,
                              int degree_cap = 64) {
    PrecisionScope scope(prec + 10);
    Real seed_tol = pow10(-18);
    for (size_t i = 0; i < eqs.size(); ++i) {
        Real scale = eval_scale(eqs[i], seed) + 1;
        Real r = abs(eqs[i].eval(seed)) / scale;
        if (r > seed_tol)
            throw EliminateError("seed does not satisfy equation " + std::to_string(i) +
                                 " (relative residual " + r.str(3) + ")");
    }

    auto active_vars = [&](const MPoly& p) {
        std::vector<int> v;
        for (int i = 0; i < nvars; ++i)
            if (i != keep_x && i != keep_y && p.degree(i) > 0) v.push_back(i);
        return v;
    };

    // cleanup: strip monomial content (seed coordinates are nonzero),
    // make squarefree in every active variable, select factors at the seed
    // when at most two variables are involved.
    auto cleanup = [&](MPoly p, const std::string& stage) -> MPoly {
        if (p.is_zero()) throw EliminateError("zero resultant at stage " + stage);
        p = p.strip_monomial_content();
        {
            Int ic = p.int_content();
            if (p.terms.rbegin()->second < 0) ic = -ic;
            p = mp_exact_div(p, MPoly::constant(p.nvars, ic));
        }
        int active = 0;
        for (int i = 0; i < nvars; ++i)
            if (p.degree(i) > 0) ++active;
        for (int i = 0; i < nvars && active > 2; ++i)
            if (p.degree(i) > 0) p = mp_squarefree(p, i);
        if (active <= 2) {
            // full factorization and seed selection
            std::vector<int> vars;
            for (int i = 0; i < nvars; ++i)
                if (p.degree(i) > 0) vars.push_back(i);
            if (vars.empty()) throw EliminateError("system is inconsistent at stage " + stage);
            // map onto a 2-variable polynomial
            MPoly q(2);
            for (const auto& [e, c] : p.terms) {
                Expo e2{};
                for (size_t k = 0; k < vars.size(); ++k) e2[k] = e[vars[k]];
                q.add_term(e2, c);
            }
            auto fac = factor_bipoly(BiPoly(Rat(1), q), degree_cap);
            MPoly keep = MPoly::constant(nvars, 1);
            int kept = 0;
            for (const auto& [f, m] : fac.factors) {
                MPoly back(nvars);
                for (const auto& [e, c] : f.terms) {
                    Expo e2{};
                    for (size_t k = 0; k < vars.size(); ++k) e2[vars[k]] = e[k];
                    back.add_term(e2, c);
                }
                Real scale = eval_scale(back, seed) + 1;
                Real r = abs(back.eval(seed)) / scale;
                bool vanish = r < pow10(-13);
                if (vanish) {
                    PrecisionScope rescope(2 * (prec + 10));
                    std::vector<Cplx> seed_hi(seed.begin(), seed.end());
                    Real r2 = abs(back.eval(seed_hi)) / (eval_scale(back, seed_hi) + 1);
                    vanish = r2 < pow10(-13);
                }
                if (vanish) {
                    keep = keep * back;
                    ++kept;
                }
            }
            if (kept == 0)
                throw EliminateError("no factor vanishes at the seed at stage " + stage);
            p = keep;
        }
        if (p.total_degree() > degree_cap)
            throw EliminateError("degree cap exceeded at stage " + stage);
        return p;
    };

    // eliminate in ascending order of maximum degree across equations
    std::vector<int> order;
    for (int v = 0; v < nvars; ++v) {
        if (v == keep_x || v == keep_y) continue;
        order.push_back(v);
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = 0, db = 0;
        for (const auto& e : eqs) {
            da = std::max(da, e.degree(a));
            db = std::max(db, e.degree(b));
        }
        return da < db;
    });

    for (int v : order) {
        std::vector<MPoly> with_v, without_v;
        for (auto& e : eqs)
            (e.degree(v) > 0 ? with_v : without_v).push_back(e);
        if (with_v.empty()) continue;
        // pivot: smallest degree in v, then fewest terms
        size_t piv = 0;
        for (size_t i = 1; i < with_v.size(); ++i) {
            int di = with_v[i].degree(v), dp = with_v[piv].degree(v);
            if (di < dp || (di == dp && with_v[i].terms.size() < with_v[piv].terms.size()))
                piv = i;
        }
        std::vector<MPoly> next = std::move(without_v);
        for (size_t i = 0; i < with_v.size(); ++i) {
            if (i == piv) continue;
            MPoly r = mp_resultant(with_v[i], with_v[piv], v);
            next.push_back(cleanup(std::move(r), "eliminating variable " + std::to_string(v)));
        }
        eqs = std::move(next);
        if (eqs.empty())
            throw EliminateError("system collapsed while eliminating variable " + std::to_string(v));
    }

    // combine what is left into a single bivariate polynomial
    MPoly result = eqs[0];
    for (size_t i = 1; i < eqs.size(); ++i) result = mp_gcd(result, eqs[i]);
    result = cleanup(result, "final combination");

    // final irreducible selection
    MPoly q(2);
    for (const auto& [e, c] : result.terms) {
        Expo e2{};
        e2[0] = e[keep_x];
        e2[1] = e[keep_y];
        q.add_term(e2, c);
    }
    auto fac = factor_bipoly(BiPoly(Rat(1), q), degree_cap);
    std::vector<Cplx> seed2{seed[keep_x], seed[keep_y]};
    MPoly chosen(2);
    int kept = 0;
    for (const auto& [f, m] : fac.factors) {
        Real scale = eval_scale(f, seed2) + 1;
        if (abs(f.eval(seed2)) / scale < pow10(-13)) {
            chosen = f;
            ++kept;
        }
    }
    if (kept == 0) throw EliminateError("no irreducible factor vanishes at the seed");
    if (kept > 1) throw EliminateError("seed selection is ambiguous at the final stage");
    return from_mpoly(chosen);
}

} // namespace mahler
