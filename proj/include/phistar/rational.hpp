#pragma once

// Exact rational scalars used throughout the symbolic layers, plus the
// Gaussian-rational extension Q(i) needed for oscillation phases.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace phistar {

using BigInt = boost::multiprecision::cpp_int;
using Rat    = boost::multiprecision::cpp_rational;

inline BigInt num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Rat rat(long long n, long long d = 1) { return Rat(BigInt(n), BigInt(d)); }

inline Rat pow_rat(const Rat& base, long exp) {
    if (exp == 0) return Rat(1);
    Rat b = exp > 0 ? base : Rat(1) / base;
    long e = exp > 0 ? exp : -exp;
    Rat acc(1);
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline std::string rat_to_string(const Rat& r) { return r.str(); }

// Parses "a", "-a", "a/b".
inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt n(s.substr(0, slash));
    BigInt d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rat(n, d);
}

// Gaussian rational a + b*i.  Field operations only; no ordering.
struct GaussRat {
    Rat re{0};
    Rat im{0};

    GaussRat() = default;
    GaussRat(Rat r) : re(std::move(r)) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return {re, -im}; }
    Rat norm2() const { return re * re + im * im; }

    GaussRat operator-() const { return {-re, -im}; }
    GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
    GaussRat& operator*=(const GaussRat& o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o) {
        Rat n2 = o.norm2();
        if (n2 == 0) throw std::domain_error("division by zero GaussRat");
        GaussRat t = *this;
        t *= o.conj();
        re = t.re / n2;
        im = t.im / n2;
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

inline GaussRat gauss_i() { return GaussRat(Rat(0), Rat(1)); }

inline std::ostream& operator<<(std::ostream& os, const GaussRat& z) {
    os << z.re.str();
    if (z.im != 0) os << (z.im > 0 ? "+" : "") << z.im.str() << "i";
    return os;
}

}  // namespace phistar
