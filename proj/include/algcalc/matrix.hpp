#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

#include "scalar.hpp"

namespace algcalc {

using Vec = std::vector<Scalar>;

inline Vec vec_add(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec vec_scale(const Scalar& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

/// Dense matrix over Q(i) with exact elimination.
///
/// Elimination is fraction-free in Bareiss's one-step form (each division is
/// by the previous pivot and is exact), with the pivot always chosen as the
/// first row holding a nonzero entry in column order. Everything downstream
/// (rank, nullspace, solve) is therefore deterministic.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one();
        return m;
    }

    static ExactMatrix from_rows(const std::vector<Vec>& rows) {
        if (rows.empty()) return ExactMatrix();
        ExactMatrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw Error("ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }
    const Scalar& at(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }

    Vec row(std::size_t i) const {
        Vec r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
        return r;
    }
    Vec col(std::size_t j) const {
        Vec r(rows_);
        for (std::size_t i = 0; i < rows_; ++i) r[i] = at(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    ExactMatrix transpose() const {
        ExactMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("shape mismatch in +");
        ExactMatrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
        return r;
    }
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("shape mismatch in -");
        ExactMatrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
        return r;
    }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols_ != b.rows_) throw Error("shape mismatch in *");
        ExactMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Scalar& bkj = b.at(k, j);
                    if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }
    friend ExactMatrix operator*(const Scalar& c, const ExactMatrix& m) {
        ExactMatrix r(m.rows_, m.cols_);
        for (std::size_t k = 0; k < m.a_.size(); ++k) r.a_[k] = c * m.a_[k];
        return r;
    }
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    Vec apply(const Vec& x) const {
        if (x.size() != cols_) throw Error("shape mismatch in apply");
        Vec y(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !x[j].is_zero()) y[i] += at(i, j) * x[j];
        return y;
    }

    /// Kronecker (tensor) product; index (i1*rows2+i2, j1*cols2+j2).
    ExactMatrix kron(const ExactMatrix& b) const {
        ExactMatrix r(rows_ * b.rows_, cols_ * b.cols_);
        for (std::size_t i1 = 0; i1 < rows_; ++i1)
            for (std::size_t j1 = 0; j1 < cols_; ++j1) {
                const Scalar& v = at(i1, j1);
                if (v.is_zero()) continue;
                for (std::size_t i2 = 0; i2 < b.rows_; ++i2)
                    for (std::size_t j2 = 0; j2 < b.cols_; ++j2)
                        r.at(i1 * b.rows_ + i2, j1 * b.cols_ + j2) = v * b.at(i2, j2);
            }
        return r;
    }

    /// Reduced row echelon form together with its pivot columns.
    struct Rref;

    Rref rref() const;
    std::size_t rank() const;

    /// Deterministic nullspace basis. For each free column f (ascending):
    /// basis vector v with v[f] = -1 and v[pivot_k] = R[k][f].
    std::vector<Vec> nullspace() const;

    /// Particular solution of M x = rhs with free variables set to zero;
    /// std::nullopt when the system is inconsistent.
    std::optional<Vec> solve(const Vec& rhs) const;

    /// Columnwise solve; nullopt if any column is inconsistent.
    std::optional<ExactMatrix> solve(const ExactMatrix& rhs) const;

    /// Flatten row-major into a vector (for treating operators as vectors).
    Vec vectorize() const { return a_.empty() ? Vec{} : Vec(a_.begin(), a_.end()); }

    static ExactMatrix unvectorize(const Vec& v, std::size_t rows, std::size_t cols) {
        if (v.size() != rows * cols) throw Error("shape mismatch in unvectorize");
        ExactMatrix m(rows, cols);
        for (std::size_t k = 0; k < v.size(); ++k) m.a_[k] = v[k];
        return m;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

struct ExactMatrix::Rref {
    ExactMatrix mat;
    std::vector<std::size_t> pivot_cols;
};

inline ExactMatrix::Rref ExactMatrix::rref() const {
    ExactMatrix m = *this;
    std::vector<std::size_t> pivots;
    Scalar prev = Scalar::one();
    std::size_t prow = 0;
    for (std::size_t c = 0; c < cols_ && prow < rows_; ++c) {
        std::size_t r = prow;
        while (r < rows_ && m.at(r, c).is_zero()) ++r;
        if (r == rows_) continue;
        if (r != prow)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(r, j), m.at(prow, j));
        const Scalar piv = m.at(prow, c);
        const bool scale_is_identity = (piv == prev);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == prow) continue;
            const Scalar f = m.at(i, c);
            // Bareiss one-step update: exact division by previous pivot.
            // Zero entries whose update is provably zero (and whole rows
            // whose update is provably the identity) are skipped; the
            // resulting matrix is identical either way.
            if (f.is_zero()) {
                if (scale_is_identity) continue;
                for (std::size_t j = 0; j < cols_; ++j)
                    if (!m.at(i, j).is_zero())
                        m.at(i, j) = piv * m.at(i, j) / prev;
            } else {
                for (std::size_t j = 0; j < cols_; ++j) {
                    if (m.at(i, j).is_zero() && m.at(prow, j).is_zero()) continue;
                    m.at(i, j) = (piv * m.at(i, j) - f * m.at(prow, j)) / prev;
                }
            }
        }
        prev = piv;
        pivots.push_back(c);
        ++prow;
    }
    // Normalize pivot rows.
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        const Scalar piv = m.at(k, pivots[k]);
        for (std::size_t j = 0; j < cols_; ++j) m.at(k, j) = m.at(k, j) / piv;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t ExactMatrix::rank() const { return rref().pivot_cols.size(); }

inline std::vector<Vec> ExactMatrix::nullspace() const {
    Rref r = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : r.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols_);
        v[f] = -Scalar::one();
        for (std::size_t k = 0; k < r.pivot_cols.size(); ++k)
            v[r.pivot_cols[k]] = r.mat.at(k, f);
        basis.push_back(std::move(v));
    }
    // rank-nullity sanity check on every factorization
    if (basis.size() + r.pivot_cols.size() != cols_)
        throw Error("rank-nullity violation (internal)");
    return basis;
}

inline std::optional<Vec> ExactMatrix::solve(const Vec& rhs) const {
    if (rhs.size() != rows_) throw Error("shape mismatch in solve");
    ExactMatrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = rhs[i];
    }
    Rref r = aug.rref();
    for (auto c : r.pivot_cols)
        if (c == cols_) return std::nullopt;
    Vec x(cols_);
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k)
        x[r.pivot_cols[k]] = r.mat.at(k, cols_);
    return x;
}

inline std::optional<ExactMatrix> ExactMatrix::solve(const ExactMatrix& rhs) const {
    if (rhs.rows() != rows_) throw Error("shape mismatch in solve");
    ExactMatrix x(cols_, rhs.cols());
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
        auto xc = solve(rhs.col(j));
        if (!xc) return std::nullopt;
        for (std::size_t i = 0; i < cols_; ++i) x.at(i, j) = (*xc)[i];
    }
    return x;
}

/// A linear subspace of K^n, stored as the canonical RREF basis of its span.
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient) {
        Subspace s(ambient);
        for (const auto& v : vectors) s.add(v);
        return s;
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }

    /// Canonical representative of v modulo the subspace: pivot coordinates
    /// eliminated. reduce(v) == 0 iff v is contained in the subspace.
    Vec reduce(Vec v) const {
        if (v.size() != ambient_) throw Error("shape mismatch in reduce");
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            const Scalar c = v[pivots_[k]];  // copy: the loop below writes v
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < ambient_; ++j) v[j] -= c * basis_[k][j];
        }
        return v;
    }

    bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

    bool contains(const Subspace& other) const {
        for (const auto& b : other.basis_)
            if (!contains(b)) return false;
        return true;
    }

    /// Adds a vector to the span; returns true if the dimension grew.
    bool add(const Vec& v) {
        Vec r = reduce(v);
        std::size_t p = 0;
        while (p < ambient_ && r[p].is_zero()) ++p;
        if (p == ambient_) return false;
        Scalar piv = r[p];
        for (auto& x : r) x /= piv;
        // keep earlier basis rows reduced against the new pivot
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            const Scalar c = basis_[k][p];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < ambient_; ++j) basis_[k][j] -= c * r[j];
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        basis_.insert(basis_.begin() + pos, std::move(r));
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

    Subspace sum(const Subspace& other) const {
        if (ambient_ != other.ambient_) throw Error("ambient mismatch");
        Subspace s = *this;
        for (const auto& b : other.basis_) s.add(b);
        return s;
    }

    /// Intersection via the kernel of [B1^T | -B2^T].
    Subspace intersect(const Subspace& other) const {
        if (ambient_ != other.ambient_) throw Error("ambient mismatch");
        const std::size_t d1 = dim(), d2 = other.dim();
        Subspace out(ambient_);
        if (d1 == 0 || d2 == 0) return out;
        ExactMatrix m(ambient_, d1 + d2);
        for (std::size_t k = 0; k < d1; ++k)
            for (std::size_t j = 0; j < ambient_; ++j) m.at(j, k) = basis_[k][j];
        for (std::size_t k = 0; k < d2; ++k)
            for (std::size_t j = 0; j < ambient_; ++j)
                m.at(j, d1 + k) = -other.basis_[k][j];
        for (const auto& ker : m.nullspace()) {
            Vec v(ambient_);
            for (std::size_t k = 0; k < d1; ++k)
                if (!ker[k].is_zero())
                    for (std::size_t j = 0; j < ambient_; ++j)
                        v[j] += ker[k] * basis_[k][j];
            out.add(v);
        }
        return out;
    }

    const std::vector<std::size_t>& pivots() const { return pivots_; }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_;
    std::vector<Vec> basis_;           // RREF rows
    std::vector<std::size_t> pivots_;  // ascending
};

/// K^n modulo a subspace, with explicit coordinates on the free columns.
class QuotientSpace {
public:
    QuotientSpace(Subspace rels) : rels_(std::move(rels)) {
        std::vector<bool> is_pivot(rels_.ambient(), false);
        for (auto p : rels_.pivots()) is_pivot[p] = true;
        for (std::size_t j = 0; j < rels_.ambient(); ++j)
            if (!is_pivot[j]) free_cols_.push_back(j);
    }

    std::size_t ambient() const { return rels_.ambient(); }
    std::size_t dim() const { return free_cols_.size(); }
    const Subspace& relations() const { return rels_; }

    /// Quotient coordinates of (the class of) v.
    Vec project(const Vec& v) const {
        Vec r = rels_.reduce(v);
        Vec q(free_cols_.size());
        for (std::size_t k = 0; k < free_cols_.size(); ++k) q[k] = r[free_cols_[k]];
        return q;
    }

    /// Canonical ambient representative of quotient coordinates.
    Vec lift(const Vec& q) const {
        if (q.size() != free_cols_.size()) throw Error("shape mismatch in lift");
        Vec v(rels_.ambient());
        for (std::size_t k = 0; k < free_cols_.size(); ++k) v[free_cols_[k]] = q[k];
        return v;
    }

    /// Matrix of a quotient-descending linear map given on ambient space.
    /// f must map the relation subspace into itself (caller's obligation;
    /// checked here on the relation basis).
    ExactMatrix induced_map(const ExactMatrix& f) const {
        if (f.rows() != ambient() || f.cols() != ambient())
            throw Error("shape mismatch in induced_map");
        for (const auto& b : rels_.basis())
            if (!rels_.contains(f.apply(b)))
                throw Error("map does not descend to the quotient");
        ExactMatrix m(dim(), dim());
        for (std::size_t k = 0; k < dim(); ++k) {
            Vec img = project(f.apply(lift(unit(k))));
            for (std::size_t i = 0; i < dim(); ++i) m.at(i, k) = img[i];
        }
        return m;
    }

private:
    static Vec unit_of(std::size_t n, std::size_t k) {
        Vec v(n);
        v[k] = Scalar::one();
        return v;
    }
    Vec unit(std::size_t k) const { return unit_of(dim(), k); }

    Subspace rels_;
    std::vector<std::size_t> free_cols_;
};

}  // namespace algcalc
