#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace algcalc {

/// Error type for all mathematical failures (invalid input, broken invariant).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Error type for file / parse problems. The CLI maps it to exit code 2.
class IOError : public std::runtime_error {
public:
    explicit IOError(const std::string& what) : std::runtime_error(what) {}
};

/// Arbitrary-precision rational number.
///
/// Invariants: numerator and denominator coprime, denominator strictly
/// positive. Both are enforced on every construction path (GMP keeps
/// arithmetic results canonical; explicit constructors canonicalize).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw Error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational inv() const {
        if (is_zero()) throw Error("inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    /// Canonical form "p/q" (denominator always printed, sign on numerator).
    std::string str() const {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    /// Accepts "p" or "p/q" with optional sign; whitespace not allowed.
    static Rational parse(const std::string& s) {
        if (s.empty()) throw IOError("empty rational literal");
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                mpq_class v(s, 10);
                v.canonicalize();
                return Rational(v);
            }
            std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
            if (ns.empty() || ds.empty()) throw IOError("bad rational literal '" + s + "'");
            mpq_class v(mpz_class(ns, 10), mpz_class(ds, 10));
            if (v.get_den() == 0) throw IOError("zero denominator in '" + s + "'");
            v.canonicalize();
            return Rational(v);
        } catch (const std::invalid_argument&) {
            throw IOError("bad rational literal '" + s + "'");
        }
    }

private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

}  // namespace algcalc
