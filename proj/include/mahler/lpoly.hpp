#pragma once

// Exact two-variable Laurent polynomials with Gaussian-rational
// coefficients: the coefficient-matrix text format, Newton polygons,
// face polynomials, temperedness and reciprocality.

#include <mahler/factor.hpp>
#include <mahler/gaussian.hpp>
#include <mahler/mpoly.hpp>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace mahler {

struct LaurentPoly2 {
    // (m, n) -> coefficient of x^m y^n; no zero coefficients stored
    std::map<std::pair<int, int>, GaussQ> terms;

    bool is_zero() const { return terms.empty(); }
    size_t term_count() const { return terms.size(); }

    void add_term(int m, int n, const GaussQ& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(m, n);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    GaussQ coeff(int m, int n) const {
        auto it = terms.find({m, n});
        return it == terms.end() ? GaussQ() : it->second;
    }

    bool is_monomial() const { return terms.size() == 1; }

    void exponent_range(int& xmin, int& xmax, int& ymin, int& ymax) const {
        if (terms.empty()) { xmin = xmax = ymin = ymax = 0; return; }
        xmin = xmax = terms.begin()->first.first;
        ymin = ymax = terms.begin()->first.second;
        for (const auto& [e, c] : terms) {
            xmin = std::min(xmin, e.first);
            xmax = std::max(xmax, e.first);
            ymin = std::min(ymin, e.second);
            ymax = std::max(ymax, e.second);
        }
    }

    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
        LaurentPoly2 r;
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms)
                r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return r;
    }
    friend LaurentPoly2 operator+(const LaurentPoly2& a, const LaurentPoly2& b) {
        LaurentPoly2 r = a;
        for (const auto& [e, c] : b.terms) r.add_term(e.first, e.second, c);
        return r;
    }
    friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) {
        return a.terms == b.terms;
    }

    bool has_real_coeffs() const {
        for (const auto& [e, c] : terms)
            if (c.im != 0) return false;
        return true;
    }

    /// Coefficients c_j(y) of x^j after shifting exponents minimal-nonnegative.
    std::vector<UPolyG> x_coefficients() const {
        int xmin, xmax, ymin, ymax;
        exponent_range(xmin, xmax, ymin, ymax);
        std::vector<std::vector<GaussQ>> cs(xmax - xmin + 1,
                                            std::vector<GaussQ>(ymax - ymin + 1, GaussQ()));
        for (const auto& [e, c] : terms) cs[e.first - xmin][e.second - ymin] = c;
        std::vector<UPolyG> out;
        out.reserve(cs.size());
        for (auto& v : cs) out.push_back(UPolyG(std::move(v)));
        return out;
    }
};

// ---- coefficient-matrix text format ----
//
// Optional header "offset XOFF YOFF" (defaults 0 0); then rows top to
// bottom = increasing powers of y, whitespace-separated entries, "." or
// "0" for zero; "#" starts a comment.

struct MatrixParseError : std::runtime_error {
    int line;
    MatrixParseError(const std::string& msg, int line_no)
        : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

inline LaurentPoly2 parse_coeff_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int xoff = 0, yoff = 0;
    std::vector<std::vector<std::string>> rows;
    int line_no = 0, first_data_line = 0;
    bool saw_offset = false;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;
        if (!saw_offset && rows.empty() && toks[0] == "offset") {
            if (toks.size() != 3) throw MatrixParseError("offset header needs two integers", line_no);
            xoff = std::stoi(toks[1]);
            yoff = std::stoi(toks[2]);
            saw_offset = true;
            continue;
        }
        if (rows.empty()) first_data_line = line_no;
        rows.push_back(std::move(toks));
    }
    if (rows.empty()) throw MatrixParseError("no matrix rows", line_no);
    size_t width = rows[0].size();
    LaurentPoly2 p;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != width)
            throw MatrixParseError("ragged row: expected " + std::to_string(width) + " entries, got " +
                                       std::to_string(rows[i].size()),
                                   first_data_line + static_cast<int>(i));
        for (size_t j = 0; j < width; ++j) {
            const std::string& tok = rows[i][j];
            if (tok == "." || tok == "0") continue;
            GaussQ c;
            try {
                c = parse_gaussq(tok);
            } catch (const std::invalid_argument& e) {
                throw MatrixParseError(std::string("bad entry '") + tok + "': " + e.what(),
                                       first_data_line + static_cast<int>(i));
            }
            p.add_term(static_cast<int>(j) + xoff, static_cast<int>(i) + yoff, c);
        }
    }
    if (p.is_zero()) throw MatrixParseError("all-zero matrix has no polynomial", first_data_line);
    return p;
}

inline std::string format_coeff_matrix(const LaurentPoly2& p) {
    if (p.is_zero()) throw std::domain_error("cannot format the zero polynomial");
    int xmin, xmax, ymin, ymax;
    p.exponent_range(xmin, xmax, ymin, ymax);
    std::ostringstream os;
    if (xmin != 0 || ymin != 0) os << "offset " << xmin << " " << ymin << "\n";
    for (int n = ymin; n <= ymax; ++n) {
        for (int m = xmin; m <= xmax; ++m) {
            if (m > xmin) os << " ";
            GaussQ c = p.coeff(m, n);
            os << (c.is_zero() ? "." : to_string(c));
        }
        os << "\n";
    }
    return os.str();
}

// ---- Newton polygon ----

struct PolygonEdge {
    std::pair<int, int> from, to;  // counter-clockwise endpoints
    std::pair<int, int> primitive; // coprime direction from->to
    int lattice_length;
};

struct NewtonPolygon {
    std::vector<std::pair<int, int>> vertices; // counter-clockwise extreme points
    std::vector<PolygonEdge> edges;
    enum class Kind { Point, Segment, Polygon } kind = Kind::Polygon;
};

namespace detail {
inline long long cross(const std::pair<int, int>& o, const std::pair<int, int>& a,
                       const std::pair<int, int>& b) {
    long long ax = static_cast<long long>(a.first) - o.first;
    long long ay = static_cast<long long>(a.second) - o.second;
    long long bx = static_cast<long long>(b.first) - o.first;
    long long by = static_cast<long long>(b.second) - o.second;
    return ax * by - ay * bx;
}
inline long long igcd(long long a, long long b) {
    a = std::abs(a);
    b = std::abs(b);
    while (b) { long long t = a % b; a = b; b = t; }
    return a;
}
} // namespace detail

inline NewtonPolygon newton_polygon(const LaurentPoly2& p) {
    if (p.is_zero()) throw std::domain_error("newton_polygon of zero polynomial");
    std::vector<std::pair<int, int>> pts;
    pts.reserve(p.terms.size());
    for (const auto& [e, c] : p.terms) pts.push_back(e);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    NewtonPolygon np;
    if (pts.size() == 1) {
        np.kind = NewtonPolygon::Kind::Point;
        np.vertices = pts;
        return np;
    }
    bool collinear = true;
    for (size_t i = 2; i < pts.size(); ++i)
        if (detail::cross(pts[0], pts[1], pts[i]) != 0) { collinear = false; break; }
    if (collinear) {
        np.kind = NewtonPolygon::Kind::Segment;
        np.vertices = {pts.front(), pts.back()};
    } else {
        // monotone chain, strict turns only (vertices = extreme points)
        std::vector<std::pair<int, int>> hull;
        auto build = [&](auto begin, auto end) {
            size_t base = hull.size();
            for (auto it = begin; it != end; ++it) {
                while (hull.size() >= base + 2 &&
                       detail::cross(hull[hull.size() - 2], hull[hull.size() - 1], *it) <= 0)
                    hull.pop_back();
                hull.push_back(*it);
            }
        };
        build(pts.begin(), pts.end());
        hull.pop_back();
        build(pts.rbegin(), pts.rend());
        hull.pop_back();
        np.kind = NewtonPolygon::Kind::Polygon;
        np.vertices = std::move(hull);
    }
    size_t n = np.vertices.size();
    size_t edge_count = (np.kind == NewtonPolygon::Kind::Segment) ? 1 : n;
    for (size_t i = 0; i < edge_count; ++i) {
        auto a = np.vertices[i], b = np.vertices[(i + 1) % n];
        int dx = b.first - a.first, dy = b.second - a.second;
        int g = static_cast<int>(detail::igcd(dx, dy));
        np.edges.push_back({a, b, {dx / g, dy / g}, g});
    }
    return np;
}

inline bool edge_on_polygon(const NewtonPolygon& np, const PolygonEdge& e) {
    for (const auto& f : np.edges)
        if ((f.from == e.from && f.to == e.to) || (f.from == e.to && f.to == e.from)) return true;
    return false;
}

/// Face polynomial along an edge: the parameter u steps from the
/// lexicographically smaller endpoint along the primitive direction.
inline UPolyG face_polynomial(const LaurentPoly2& p, const PolygonEdge& edge) {
    NewtonPolygon np = newton_polygon(p);
    if (!edge_on_polygon(np, edge)) throw std::domain_error("edge is not on the Newton polygon");
    auto a = edge.from, b = edge.to;
    if (b < a) std::swap(a, b);
    int L = edge.lattice_length;
    std::pair<int, int> step{(b.first - a.first) / L, (b.second - a.second) / L};
    std::vector<GaussQ> coeffs(L + 1);
    for (int t = 0; t <= L; ++t)
        coeffs[t] = p.coeff(a.first + t * step.first, a.second + t * step.second);
    return UPolyG(std::move(coeffs));
}

// ---- temperedness ----

struct FaceCertificate {
    PolygonEdge edge;
    UPolyG face;
    bool cyclotomic = false;
    std::vector<std::pair<int, int>> indices; // (d, multiplicity)
    UPolyZ witness;                           // nonempty iff not cyclotomic
};

struct TemperReport {
    bool tempered = false;
    std::vector<FaceCertificate> faces;
    std::vector<std::pair<std::pair<int, int>, GaussQ>> vertex_coefficients;
};

/// A face with Gaussian coefficients is tested exactly through its norm
/// f * conj(f), which has rational coefficients and is a cyclotomic
/// product iff all roots of f are roots of unity.
inline CyclotomicResult face_cyclotomic_test(const UPolyG& face) {
    bool real = true;
    for (const auto& c : face.c) real &= (c.im == 0);
    if (real) return cyclotomic_test(to_rat_poly(face));
    UPolyG conj_face = face;
    for (auto& c : conj_face.c) c = c.conj();
    return cyclotomic_test(to_rat_poly(face * conj_face));
}

inline TemperReport is_tempered(const LaurentPoly2& p) {
    if (p.is_zero() || p.is_monomial())
        throw std::domain_error("temperedness needs a non-monomial polynomial");
    NewtonPolygon np = newton_polygon(p);
    TemperReport rep;
    rep.tempered = true;
    for (const auto& v : np.vertices)
        rep.vertex_coefficients.push_back({v, p.coeff(v.first, v.second)});
    for (const auto& e : np.edges) {
        FaceCertificate cert;
        cert.edge = e;
        cert.face = face_polynomial(p, e);
        auto cyc = face_cyclotomic_test(cert.face);
        cert.cyclotomic = cyc.is_cyclotomic;
        cert.indices = cyc.indices;
        if (!cyc.is_cyclotomic) {
            cert.witness = cyc.witness;
            rep.tempered = false;
        }
        rep.faces.push_back(std::move(cert));
    }
    return rep;
}

// ---- reciprocality and transforms ----

/// P(1/x, 1/y) times the unique monomial making all exponents
/// minimal-nonnegative.  Coefficients are untouched.
inline LaurentPoly2 reciprocal_conjugate(const LaurentPoly2& p) {
    if (p.is_zero()) throw std::domain_error("reciprocal of zero polynomial");
    int xmin, xmax, ymin, ymax;
    p.exponent_range(xmin, xmax, ymin, ymax);
    LaurentPoly2 r;
    for (const auto& [e, c] : p.terms)
        r.terms.emplace(std::make_pair(xmax - e.first, ymax - e.second), c);
    return r;
}

/// Same reflection with complex-conjugated coefficients; this is the
/// polynomial whose zero set meets A's on the unit torus.
inline LaurentPoly2 conj_reciprocal(const LaurentPoly2& p) {
    LaurentPoly2 r = reciprocal_conjugate(p);
    for (auto& [e, c] : r.terms) c = c.conj();
    return r;
}

struct ReciprocalWitness {
    bool reciprocal = false;
    int sign = 0;   // P(1/x,1/y) = sign * x^a y^b P(x,y)
    int a = 0, b = 0;
};

inline ReciprocalWitness is_reciprocal(const LaurentPoly2& p) {
    if (p.is_zero()) throw std::domain_error("is_reciprocal of zero polynomial");
    int xmin, xmax, ymin, ymax;
    p.exponent_range(xmin, xmax, ymin, ymax);
    ReciprocalWitness w;
    w.a = -(xmin + xmax);
    w.b = -(ymin + ymax);
    // require coeff(-m-a, -n-b) = sign * coeff(m, n) for all terms
    auto first = p.terms.begin();
    GaussQ partner = p.coeff(-first->first.first - w.a, -first->first.second - w.b);
    if (partner.is_zero()) return w;
    GaussQ ratio = partner / first->second;
    if (!(ratio == GaussQ(1) || ratio == GaussQ(-1))) return w;
    for (const auto& [e, c] : p.terms) {
        GaussQ q = p.coeff(-e.first - w.a, -e.second - w.b);
        if (!(q == ratio * c)) return w;
    }
    w.reciprocal = true;
    w.sign = (ratio == GaussQ(1)) ? 1 : -1;
    return w;
}

/// Exact root-of-unity twist values: restricted to {1, -1, i, -i}.
inline GaussQ fourth_root_unit(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return GaussQ(1);
        case 1: return GaussQ(Rat(0), Rat(1));
        case 2: return GaussQ(-1);
        default: return GaussQ(Rat(0), Rat(-1));
    }
}

/// x -> z1 x^g00 y^g01, y -> z2 x^g10 y^g11 with |det g| = 1 and the
/// twists z1, z2 in {1, -1, i, -i} (as powers of i).  Mahler measure is
/// preserved.
inline LaurentPoly2 monomial_transform(const LaurentPoly2& p, const std::array<int, 4>& g,
                                       int twist_x_ipow = 0, int twist_y_ipow = 0) {
    long det = static_cast<long>(g[0]) * g[3] - static_cast<long>(g[1]) * g[2];
    if (det != 1 && det != -1) throw std::domain_error("monomial_transform: matrix not unimodular");
    LaurentPoly2 r;
    for (const auto& [e, c] : p.terms) {
        int m = e.first, n = e.second;
        GaussQ tw = c;
        // i^(tx*m + ty*n)
        long ip = static_cast<long>(twist_x_ipow) * m + static_cast<long>(twist_y_ipow) * n;
        tw *= fourth_root_unit(static_cast<int>(((ip % 4) + 4) % 4));
        r.add_term(g[0] * m + g[2] * n, g[1] * m + g[3] * n, tw);
    }
    return r;
}

/// Horner-free direct evaluation; zero base with negative exponent throws.
inline Cplx evaluate(const LaurentPoly2& p, const Cplx& x, const Cplx& y) {
    int xmin, xmax, ymin, ymax;
    p.exponent_range(xmin, xmax, ymin, ymax);
    if ((xmin < 0 && x.is_zero()) || (ymin < 0 && y.is_zero()))
        throw std::domain_error("evaluate: zero base with negative exponent");
    Cplx acc;
    for (const auto& [e, c] : p.terms)
        acc += Cplx(c) * powi(x, e.first) * powi(y, e.second);
    return acc;
}

// ---- conversion to the exact integer bivariate world ----

/// Canonical polynomialization of a real-coefficient Laurent polynomial:
/// returns (unit, primitive integer MPoly in vars (0, 1) = (x, y)) with
/// exponents shifted minimal-nonnegative.
inline std::pair<Rat, MPoly> to_mpoly(const LaurentPoly2& p) {
    if (!p.has_real_coeffs())
        throw std::domain_error("exact bivariate algebra requires rational coefficients");
    if (p.is_zero()) return {Rat(0), MPoly(2)};
    int xmin, xmax, ymin, ymax;
    p.exponent_range(xmin, xmax, ymin, ymax);
    Int den = 1;
    for (const auto& [e, c] : p.terms) den = den / gcd(den, denominator(c.re)) * denominator(c.re);
    MPoly m(2);
    for (const auto& [e, c] : p.terms) {
        Expo ex{};
        ex[0] = e.first - xmin;
        ex[1] = e.second - ymin;
        m.terms.emplace(ex, numerator(c.re) * (den / denominator(c.re)));
    }
    Int cont = m.int_content();
    if (m.terms.rbegin()->second < 0) cont = -cont;
    m = mp_exact_div(m, MPoly::constant(2, cont));
    return {Rat(cont) / Rat(den), m};
}

inline LaurentPoly2 from_mpoly(const MPoly& m, const Rat& unit = Rat(1)) {
    LaurentPoly2 p;
    for (const auto& [e, c] : m.terms) p.add_term(e[0], e[1], GaussQ(unit * Rat(c)));
    return p;
}

} // namespace mahler
