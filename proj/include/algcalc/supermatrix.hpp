#pragma once

#include <string>
#include <vector>

#include "grassmann.hpp"

namespace algcalc {

/// Block matrix over a Grassmann algebra in (n|m) block form
///
///     [ L1  L2 ]   L1: n x n,  L2: n x m
///     [ L3  L4 ]   L3: m x n,  L4: m x m
///
/// with a declared parity: an even supermatrix has even entries in L1, L4 and
/// odd entries in L2, L3; an odd one the reverse. The invariant is checked on
/// construction and after every product.
class Supermatrix {
public:
    Supermatrix(std::size_t n, std::size_t m, std::size_t grassmann_rank, int parity)
        : n_(n), m_(m), rank_(grassmann_rank), parity_(parity),
          a_((n + m) * (n + m), GrassmannElement(grassmann_rank)) {
        if (parity != 0 && parity != 1) throw Error("supermatrix: parity must be 0 or 1");
    }

    static Supermatrix identity(std::size_t n, std::size_t m, std::size_t grassmann_rank) {
        Supermatrix s(n, m, grassmann_rank, 0);
        for (std::size_t i = 0; i < n + m; ++i)
            s.a_[i * (n + m) + i] = GrassmannElement::scalar(grassmann_rank, Scalar::one());
        return s;
    }

    std::size_t block_rows() const { return n_; }
    std::size_t block_cols() const { return m_; }
    std::size_t size() const { return n_ + m_; }
    std::size_t grassmann_rank() const { return rank_; }
    int parity() const { return parity_; }

    const GrassmannElement& at(std::size_t i, std::size_t j) const {
        if (i >= size() || j >= size()) throw Error("supermatrix: index out of range");
        return a_[i * size() + j];
    }

    /// Entry parity demanded by the block structure and declared parity.
    int required_entry_parity(std::size_t i, std::size_t j) const {
        const int rb = i < n_ ? 0 : 1, cb = j < n_ ? 0 : 1;
        return (rb + cb + parity_) % 2;
    }

    /// Sets an entry; rejects values inhomogeneous or of the wrong parity.
    void set(std::size_t i, std::size_t j, GrassmannElement v) {
        if (i >= size() || j >= size()) throw Error("supermatrix: index out of range");
        if (v.rank() != rank_) throw Error("supermatrix: grassmann rank mismatch");
        check_entry(i, j, v);
        a_[i * size() + j] = std::move(v);
    }

    friend Supermatrix operator+(const Supermatrix& a, const Supermatrix& b) {
        a.require_same_shape(b);
        if (a.parity_ != b.parity_)
            throw Error("supermatrix: cannot add matrices of different parity");
        Supermatrix r(a.n_, a.m_, a.rank_, a.parity_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
        return r;
    }

    friend Supermatrix operator-(const Supermatrix& a, const Supermatrix& b) {
        a.require_same_shape(b);
        if (a.parity_ != b.parity_)
            throw Error("supermatrix: cannot subtract matrices of different parity");
        Supermatrix r(a.n_, a.m_, a.rank_, a.parity_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
        return r;
    }

    friend Supermatrix operator*(const Scalar& c, const Supermatrix& a) {
        Supermatrix r(a.n_, a.m_, a.rank_, a.parity_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = c * a.a_[k];
        return r;
    }

    /// Product; the result's parity is the mod-2 sum, and the parity
    /// invariant of the result is re-verified entry by entry.
    friend Supermatrix operator*(const Supermatrix& a, const Supermatrix& b) {
        a.require_same_shape(b);
        Supermatrix r(a.n_, a.m_, a.rank_, (a.parity_ + b.parity_) % 2);
        const std::size_t d = a.size();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                GrassmannElement sum(a.rank_);
                for (std::size_t k = 0; k < d; ++k)
                    sum = sum + a.a_[i * d + k] * b.a_[k * d + j];
                r.check_entry(i, j, sum);
                r.a_[i * d + j] = std::move(sum);
            }
        return r;
    }

    friend bool operator==(const Supermatrix& a, const Supermatrix& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.rank_ == b.rank_ &&
               a.parity_ == b.parity_ && a.a_ == b.a_;
    }

    /// Superbracket [A,B] = AB - (-1)^{[A][B]} BA.
    friend Supermatrix superbracket(const Supermatrix& a, const Supermatrix& b) {
        Supermatrix ab = a * b, ba = b * a;
        if (a.parity_ == 1 && b.parity_ == 1) {
            Supermatrix r(a.n_, a.m_, a.rank_, 0);
            for (std::size_t k = 0; k < ab.a_.size(); ++k) r.a_[k] = ab.a_[k] + ba.a_[k];
            return r;
        }
        return ab - ba;
    }

private:
    void require_same_shape(const Supermatrix& o) const {
        if (n_ != o.n_ || m_ != o.m_ || rank_ != o.rank_)
            throw Error("supermatrix: block shape or grassmann rank mismatch");
    }

    void check_entry(std::size_t i, std::size_t j, const GrassmannElement& v) const {
        if (v.is_zero()) return;
        const int p = v.parity();
        if (p == -1)
            throw Error("supermatrix: entry (" + std::to_string(i) + "," +
                        std::to_string(j) + ") is not parity-homogeneous");
        if (p != required_entry_parity(i, j))
            throw Error("supermatrix: entry (" + std::to_string(i) + "," +
                        std::to_string(j) + ") violates the block parity pattern");
    }

    std::size_t n_, m_, rank_;
    int parity_;
    std::vector<GrassmannElement> a_;
};

}  // namespace algcalc
