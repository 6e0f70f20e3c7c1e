#pragma once

#include <algcalc/algebra.hpp>
#include <algcalc/matrix.hpp>

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace algcalc {

/// A degree-k universal form over a unital algebra A, stored in the normal
/// form A (x) Abar^{(x)k}, where Abar = A / K*1.  A monomial
/// a0 da1 ... dak corresponds to a0 (x) bar(a1) (x) ... (x) bar(ak); the
/// reduction (da)b = d(ab) - a db is applied eagerly by the product, so two
/// forms are equal iff their coordinate vectors are equal.
struct UniversalForm {
    unsigned degree = 0;
    Vec coords;  // dim(A) * dim(Abar)^degree entries, first factor major

    bool is_zero() const { return vec_is_zero(coords); }
    bool operator==(const UniversalForm& o) const {
        return degree == o.degree && coords == o.coords;
    }
    bool operator!=(const UniversalForm& o) const { return !(*this == o); }
};

/// Universal differential calculus Omega*(A) over a unital finite-dimensional
/// algebra, with degrees capped (the coordinate dimension grows as
/// dim * (dim-1)^k).
class UniversalCalculus {
public:
    explicit UniversalCalculus(const FDAlgebra& alg, unsigned degree_cap = 4)
        : alg_(&alg), cap_(degree_cap) {
        Subspace unit_line = Subspace::span({alg.unit()}, alg.dim());
        if (unit_line.dim() != 1) throw Error("universal: degenerate unit");
        bar_ = std::make_shared<QuotientSpace>(std::move(unit_line));
    }

    const FDAlgebra& algebra() const { return *alg_; }
    unsigned degree_cap() const { return cap_; }
    std::size_t bar_dim() const { return bar_->dim(); }

    std::size_t form_dim(unsigned k) const {
        std::size_t d = alg_->dim();
        for (unsigned i = 0; i < k; ++i) d *= bar_dim();
        return d;
    }

    UniversalForm zero(unsigned k) const {
        require_degree(k);
        return UniversalForm{k, Vec(form_dim(k))};
    }

    /// Degree-0 form from an algebra element.
    UniversalForm embed(const Vec& a) const {
        if (a.size() != alg_->dim()) throw Error("universal: element shape");
        return UniversalForm{0, a};
    }

    UniversalForm unit_form() const { return embed(alg_->unit()); }

    /// d(a0 (x) t) = 1 (x) bar(a0) (x) t; in particular d kills constants
    /// and d of a degree-0 element a is 1 (x) bar(a), i.e. "da".
    UniversalForm d(const UniversalForm& w) const {
        require_degree(w.degree + 1);
        check_shape(w);
        UniversalForm out = zero(w.degree + 1);
        const std::size_t tail = form_dim(w.degree) / alg_->dim();
        const std::size_t B = bar_dim();
        const Vec& one = alg_->unit();
        for (std::size_t idx = 0; idx < w.coords.size(); ++idx) {
            const Scalar& c = w.coords[idx];
            if (c.is_zero()) continue;
            const std::size_t i0 = idx / tail, t = idx % tail;
            Vec bi = bar_->project(alg_->basis_element(i0));
            for (std::size_t u = 0; u < alg_->dim(); ++u) {
                if (one[u].is_zero()) continue;
                for (std::size_t j = 0; j < B; ++j) {
                    if (bi[j].is_zero()) continue;
                    out.coords[(u * B + j) * tail + t] += c * one[u] * bi[j];
                }
            }
        }
        return out;
    }

    /// Right action of an algebra element on a form, via the recursion
    ///   (X (x) bar(v)) . b = X (x) bar(v b) - (X . v) (x) bar(b),
    /// the coordinate form of (da)b = d(ab) - a db.  The result does not
    /// depend on the chosen lift of bar(v): shifting v by a constant changes
    /// both terms by cancelling amounts.
    UniversalForm act_right(const UniversalForm& w, const Vec& b) const {
        check_shape(w);
        if (b.size() != alg_->dim()) throw Error("universal: element shape");
        return UniversalForm{w.degree, act_right_coords(w.degree, w.coords, b)};
    }

    /// Juxtaposition product: (a0 da1..dak)(b0 db1..dbl) appends the d-tail
    /// of the right factor after absorbing b0 into the left factor.
    UniversalForm mul(const UniversalForm& x, const UniversalForm& y) const {
        require_degree(x.degree + y.degree);
        check_shape(x);
        check_shape(y);
        UniversalForm out = zero(x.degree + y.degree);
        const std::size_t ytail = form_dim(y.degree) / alg_->dim();
        for (std::size_t yi = 0; yi < y.coords.size(); ++yi) {
            const Scalar& c = y.coords[yi];
            if (c.is_zero()) continue;
            const std::size_t i0 = yi / ytail, t = yi % ytail;
            Vec left = act_right_coords(x.degree, x.coords, alg_->basis_element(i0));
            for (std::size_t p = 0; p < left.size(); ++p)
                if (!left[p].is_zero()) out.coords[p * ytail + t] += c * left[p];
        }
        return out;
    }

    UniversalForm add(const UniversalForm& x, const UniversalForm& y) const {
        if (x.degree != y.degree) throw Error("universal: degree mismatch in add");
        return UniversalForm{x.degree, vec_add(x.coords, y.coords)};
    }

    UniversalForm scale(const Scalar& c, const UniversalForm& x) const {
        return UniversalForm{x.degree, vec_scale(c, x.coords)};
    }

    /// Matrix of d restricted to degree k (columns = coordinate basis forms).
    ExactMatrix d_matrix(unsigned k) const {
        require_degree(k + 1);
        ExactMatrix m(form_dim(k + 1), form_dim(k));
        for (std::size_t j = 0; j < form_dim(k); ++j) {
            UniversalForm w = zero(k);
            w.coords[j] = Scalar::one();
            Vec img = d(w).coords;
            for (std::size_t i = 0; i < img.size(); ++i) m.at(i, j) = img[i];
        }
        return m;
    }

    /// dim H^k of the complex (kernel of d_k modulo image of d_{k-1}).
    std::size_t cohomology_dim(unsigned k) const {
        const std::size_t ker = form_dim(k) - d_matrix(k).rank();
        if (k == 0) return ker;
        return ker - d_matrix(k - 1).rank();
    }

private:
    void require_degree(unsigned k) const {
        if (k > cap_)
            throw Error("universal: degree " + std::to_string(k) +
                        " exceeds cap " + std::to_string(cap_));
    }
    void check_shape(const UniversalForm& w) const {
        require_degree(w.degree);
        if (w.coords.size() != form_dim(w.degree))
            throw Error("universal: form shape mismatch");
    }

    Vec act_right_coords(unsigned degree, const Vec& w, const Vec& b) const {
        if (degree == 0) return alg_->mul(w, b);
        const std::size_t B = bar_dim();
        const std::size_t pre = w.size() / B;
        Vec out(w.size());
        Vec bbar = bar_->project(b);
        for (std::size_t j = 0; j < B; ++j) {
            Vec X(pre);
            bool nz = false;
            for (std::size_t p = 0; p < pre; ++p) {
                X[p] = w[p * B + j];
                if (!X[p].is_zero()) nz = true;
            }
            if (!nz) continue;
            Vec vj = bar_->lift(unit_vec(B, j));
            Vec t1 = bar_->project(alg_->mul(vj, b));
            for (std::size_t p = 0; p < pre; ++p) {
                if (X[p].is_zero()) continue;
                for (std::size_t jj = 0; jj < B; ++jj)
                    if (!t1[jj].is_zero()) out[p * B + jj] += X[p] * t1[jj];
            }
            Vec Xv = act_right_coords(degree - 1, X, vj);
            for (std::size_t p = 0; p < pre; ++p) {
                if (Xv[p].is_zero()) continue;
                for (std::size_t jj = 0; jj < B; ++jj)
                    if (!bbar[jj].is_zero()) out[p * B + jj] -= Xv[p] * bbar[jj];
            }
        }
        return out;
    }

    static Vec unit_vec(std::size_t n, std::size_t k) {
        Vec v(n);
        v[k] = Scalar::one();
        return v;
    }

    const FDAlgebra* alg_;
    unsigned cap_;
    std::shared_ptr<QuotientSpace> bar_;
};

}  // namespace algcalc
