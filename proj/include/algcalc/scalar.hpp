#pragma once

#include <string>

#include "rational.hpp"

namespace algcalc {

/// Element of Q(i): a Gaussian rational re + im*i with exact components.
///
/// Serialized form: "p/q" when im = 0, otherwise "p/q+r/s*i" (or "-r/s*i"
/// with the sign folded into the printed numerator).
struct Scalar {
    Rational re, im;

    Scalar() = default;
    Scalar(long n) : re(n) {}  // NOLINT: implicit by design
    Scalar(Rational r) : re(std::move(r)) {}  // NOLINT
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    Scalar(long n, long d) : re(n, d) {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    Scalar conj() const { return Scalar(re, -im); }

    /// re^2 + im^2, the (rational) square modulus.
    Rational norm2() const { return re * re + im * im; }

    Scalar operator-() const { return Scalar(-re, -im); }
    Scalar& operator+=(const Scalar& o) { re += o.re; im += o.im; return *this; }
    Scalar& operator-=(const Scalar& o) { re -= o.re; im -= o.im; return *this; }
    Scalar& operator*=(const Scalar& o) {
        Rational r = re * o.re - im * o.im;
        Rational i2 = re * o.im + im * o.re;
        re = r;
        im = i2;
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        Rational n2 = o.norm2();
        if (n2.is_zero()) throw Error("division by zero");
        Rational r = (re * o.re + im * o.im) / n2;
        Rational i2 = (im * o.re - re * o.im) / n2;
        re = r;
        im = i2;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    /// Lexicographic order; used only for deterministic container ordering.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    Scalar inv() const {
        Rational n2 = norm2();
        if (n2.is_zero()) throw Error("inverse of zero");
        return Scalar(re / n2, -im / n2);
    }

    Scalar pow(long e) const {
        if (e < 0) return inv().pow(-e);
        Scalar acc = one(), base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) acc *= base;
            base *= base;
        }
        return acc;
    }

    std::string str() const {
        if (im.is_zero()) return re.str();
        std::string s = re.str();
        s += (im.sign() < 0) ? "-" : "+";
        s += im.abs().str() + "*i";
        return s;
    }

    /// Accepts "p/q", "p/q+r/s*i", "p/q-r/s*i", "r/s*i" (integers allowed
    /// wherever a fraction may appear).
    static Scalar parse(const std::string& s) {
        if (s.empty()) throw IOError("empty scalar literal");
        auto star = s.rfind("*i");
        if (star == std::string::npos || star + 2 != s.size()) {
            return Scalar(Rational::parse(s));
        }
        std::string head = s.substr(0, star);
        // Split head into real part and imaginary coefficient at the last
        // '+'/'-' that is not the leading sign.
        std::size_t split = std::string::npos;
        for (std::size_t p = head.size(); p-- > 1;) {
            if (head[p] == '+' || head[p] == '-') {
                if (head[p - 1] == '/' ) continue;  // not expected, defensive
                split = p;
                break;
            }
        }
        if (split == std::string::npos) {
            return Scalar(Rational(0), Rational::parse(head));
        }
        Rational re = Rational::parse(head.substr(0, split));
        Rational imabs = Rational::parse(head.substr(split + 1));
        Rational im = (head[split] == '-') ? -imabs : imabs;
        return Scalar(re, im);
    }
};

}  // namespace algcalc
