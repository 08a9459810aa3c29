#pragma once

// Gaussian rationals a + bi with exact rational components: the
// coefficient field for Laurent polynomials.

#include <mahler/bigfloat.hpp>
#include <iosfwd>
#include <sstream>

namespace mahler {

struct GaussQ {
    Rat re, im;

    GaussQ() : re(0), im(0) {}
    GaussQ(long n) : re(n), im(0) {}
    GaussQ(const Rat& r) : re(r), im(0) {}
    GaussQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    GaussQ conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; } // |z|^2

    friend GaussQ operator+(const GaussQ& a, const GaussQ& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussQ operator-(const GaussQ& a, const GaussQ& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussQ operator-(const GaussQ& a) { return {-a.re, -a.im}; }
    friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussQ operator/(const GaussQ& a, const GaussQ& b) {
        Rat n = b.norm();
        if (n == 0) throw std::domain_error("GaussQ division by zero");
        GaussQ c = a * b.conj();
        return {c.re / n, c.im / n};
    }
    GaussQ& operator+=(const GaussQ& b) { *this = *this + b; return *this; }
    GaussQ& operator-=(const GaussQ& b) { *this = *this - b; return *this; }
    GaussQ& operator*=(const GaussQ& b) { *this = *this * b; return *this; }
    GaussQ& operator/=(const GaussQ& b) { *this = *this / b; return *this; }

    friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussQ& a, const GaussQ& b) { return !(a == b); }
};

inline std::string to_string(const Rat& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
}

/// Text form matching the coefficient-matrix grammar: "p/q", "p/q+r/si",
/// with pure-imaginary values written as "i", "-i", "r/si".
inline std::string to_string(const GaussQ& z) {
    if (z.im == 0) return to_string(z.re);
    std::string im_part;
    if (z.im == 1) im_part = "i";
    else if (z.im == -1) im_part = "-i";
    else im_part = to_string(z.im) + "i";
    if (z.re == 0) return im_part;
    if (z.im > 0 && im_part[0] != '-') return to_string(z.re) + "+" + im_part;
    return to_string(z.re) + im_part;
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num) / Rat(den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

/// Parses "p/q", "p/q+r/si", "i", "-i", "3i", "1-2i", ...
inline GaussQ parse_gaussq(const std::string& tok) {
    if (tok.empty()) throw std::invalid_argument("empty coefficient");
    if (tok.back() != 'i') return GaussQ(parse_rat(tok));
    std::string body = tok.substr(0, tok.size() - 1);
    // split at the last +/- that is not the leading sign
    size_t split = std::string::npos;
    for (size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') { split = k; break; }
    }
    std::string re_part, im_part;
    if (split == std::string::npos) {
        re_part = "0";
        im_part = body;
    } else {
        re_part = body.substr(0, split);
        im_part = body.substr(split);          // keeps the sign
    }
    if (im_part.empty() || im_part == "+") im_part = "1";
    else if (im_part == "-") im_part = "-1";
    return {parse_rat(re_part), parse_rat(im_part)};
}

inline std::ostream& operator<<(std::ostream& os, const GaussQ& z) { return os << to_string(z); }

} // namespace mahler
