#pragma once

#include <algcalc/algebra.hpp>
#include <algcalc/matrix.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace algcalc {

/// First-order jet module J1(P) of a free module P = A^rank over a
/// commutative algebra A, realized as the quotient of A (x) P by the
/// submodule spanned by all delta^{b0} delta^{b1} (a (x) p) with
/// delta^b(a (x) p) = ba (x) p - a (x) bp.
///
/// Coordinates: P has basis (i, t) -> i*rank + t over the ground field
/// (i = algebra basis, t = free-module slot); the ambient A (x) P has basis
/// (j, p) -> j*dimP + p.  All maps are returned as exact matrices in the
/// quotient coordinates.
class JetModule1 {
public:
    JetModule1(const FDAlgebra& alg, std::size_t rank)
        : alg_(&alg), rank_(rank), quot_(build_relations(alg, rank)) {
        build_maps();
    }

    const FDAlgebra& algebra() const { return *alg_; }
    std::size_t rank() const { return rank_; }
    std::size_t module_dim() const { return alg_->dim() * rank_; }
    std::size_t dim() const { return quot_.dim(); }
    const QuotientSpace& carrier() const { return quot_; }

    /// J1: P -> J1(P), p |-> class(1 (x) p).
    const ExactMatrix& J1() const { return j1_; }
    /// pi^1_0: J1(P) -> P, class(a (x) p) |-> a p.
    const ExactMatrix& pi10() const { return pi10_; }
    /// i1: P -> J1(P), the zero-order inclusion splitting pi^1_0.
    const ExactMatrix& i1() const { return i1_; }
    /// h1 = Id - i1 pi^1_0, projecting onto the O^1 (x) P summand.
    const ExactMatrix& h1() const { return h1_; }
    /// d1 = h1 J1: P -> J1(P); for P = A this is b |-> class(1(x)b - b(x)1).
    const ExactMatrix& d1() const { return d1_; }

    /// dim of O^1 (x) P = ker pi^1_0.
    std::size_t o1_dim() const { return dim() - pi10_.rank(); }

    /// Left action of an algebra element on the carrier (b: class(a (x) p)
    /// |-> class(ba (x) p)).
    ExactMatrix left_action(const Vec& b) const {
        return quot_.induced_map(ambient_left(b));
    }

    /// The second module action (b-bullet: class(a (x) p) |-> class(a (x) bp)).
    ExactMatrix bullet_action(const Vec& b) const {
        return quot_.induced_map(ambient_bullet(b));
    }

private:
    static std::size_t pdim(const FDAlgebra& alg, std::size_t rank) {
        return alg.dim() * rank;
    }

    // delta^{e_b}(e_a (x) e_p) as an ambient vector.
    static Vec delta_elem(const FDAlgebra& alg, std::size_t rank, std::size_t b,
                          const Vec& a_coords, const Vec& p_coords) {
        const std::size_t n = alg.dim(), m = pdim(alg, rank);
        Vec out(n * m);
        Vec ba = alg.mul(alg.basis_element(b), a_coords);
        for (std::size_t j = 0; j < n; ++j) {
            if (ba[j].is_zero()) continue;
            for (std::size_t p = 0; p < m; ++p)
                if (!p_coords[p].is_zero()) out[j * m + p] += ba[j] * p_coords[p];
        }
        Vec bp = module_action(alg, rank, b, p_coords);
        for (std::size_t j = 0; j < n; ++j) {
            if (a_coords[j].is_zero()) continue;
            for (std::size_t p = 0; p < m; ++p)
                if (!bp[p].is_zero()) out[j * m + p] -= a_coords[j] * bp[p];
        }
        return out;
    }

    // delta^{e_b} applied to a general ambient vector.
    static Vec delta_ambient(const FDAlgebra& alg, std::size_t rank, std::size_t b,
                             const Vec& v) {
        const std::size_t n = alg.dim(), m = pdim(alg, rank);
        Vec out(n * m);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t p = 0; p < m; ++p) {
                const Scalar& c = v[j * m + p];
                if (c.is_zero()) continue;
                Vec term = delta_elem(alg, rank, b, alg.basis_element(j),
                                      unit_vec(m, p));
                for (std::size_t x = 0; x < out.size(); ++x)
                    if (!term[x].is_zero()) out[x] += c * term[x];
            }
        return out;
    }

    // e_b acting on the free module A^rank, coordinates (i,t) -> i*rank+t.
    static Vec module_action(const FDAlgebra& alg, std::size_t rank, std::size_t b,
                             const Vec& p_coords) {
        const std::size_t n = alg.dim();
        Vec out(p_coords.size());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t t = 0; t < rank; ++t) {
                const Scalar& c = p_coords[i * rank + t];
                if (c.is_zero()) continue;
                const Vec& prod = alg.basis_product(b, i);
                for (std::size_t k = 0; k < n; ++k)
                    if (!prod[k].is_zero()) out[k * rank + t] += c * prod[k];
            }
        return out;
    }

    static QuotientSpace build_relations(const FDAlgebra& alg, std::size_t rank) {
        if (!alg.is_commutative())
            throw Error("jet module: algebra must be commutative");
        const std::size_t n = alg.dim(), m = pdim(alg, rank);
        std::vector<Vec> gens;
        for (std::size_t b0 = 0; b0 < n; ++b0)
            for (std::size_t b1 = 0; b1 < n; ++b1)
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t p = 0; p < m; ++p) {
                        Vec inner = delta_elem(alg, rank, b1, alg.basis_element(a),
                                               unit_vec(m, p));
                        gens.push_back(delta_ambient(alg, rank, b0, inner));
                    }
        return QuotientSpace(Subspace::span(gens, n * m));
    }

    ExactMatrix ambient_left(const Vec& b) const {
        const std::size_t n = alg_->dim(), m = module_dim();
        ExactMatrix mat(n * m, n * m);
        ExactMatrix lm = alg_->left_mult(b);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (lm.at(k, j).is_zero()) continue;
                for (std::size_t p = 0; p < m; ++p)
                    mat.at(k * m + p, j * m + p) = lm.at(k, j);
            }
        return mat;
    }

    ExactMatrix ambient_bullet(const Vec& b) const {
        const std::size_t n = alg_->dim(), m = module_dim();
        ExactMatrix mat(n * m, n * m);
        for (std::size_t i = 0; i < n; ++i) {
            ExactMatrix bm(m, m);
            for (std::size_t p = 0; p < m; ++p) {
                Vec img(m);
                for (std::size_t kidx = 0; kidx < alg_->dim(); ++kidx) {
                    if (b[kidx].is_zero()) continue;
                    Vec t = module_action(*alg_, rank_, kidx, unit_vec(m, p));
                    for (std::size_t x = 0; x < m; ++x)
                        if (!t[x].is_zero()) img[x] += b[kidx] * t[x];
                }
                for (std::size_t q = 0; q < m; ++q) bm.at(q, p) = img[q];
            }
            for (std::size_t p = 0; p < m; ++p)
                for (std::size_t q = 0; q < m; ++q)
                    if (!bm.at(q, p).is_zero()) mat.at(i * m + q, i * m + p) = bm.at(q, p);
        }
        return mat;
    }

    void build_maps() {
        const std::size_t n = alg_->dim(), m = module_dim();
        const Vec& one = alg_->unit();
        // J1(e_p) = class(1 (x) e_p)
        j1_ = ExactMatrix(dim(), m);
        for (std::size_t p = 0; p < m; ++p) {
            Vec amb(n * m);
            for (std::size_t j = 0; j < n; ++j)
                if (!one[j].is_zero()) amb[j * m + p] = one[j];
            Vec q = quot_.project(amb);
            for (std::size_t i = 0; i < dim(); ++i) j1_.at(i, p) = q[i];
        }
        // pi^1_0(class(e_j (x) e_p)) = e_j . e_p, computed on lifts.
        pi10_ = ExactMatrix(m, dim());
        for (std::size_t k = 0; k < dim(); ++k) {
            Vec amb = quot_.lift(unit_vec(dim(), k));
            Vec img(m);
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t p = 0; p < m; ++p) {
                    const Scalar& c = amb[j * m + p];
                    if (c.is_zero()) continue;
                    Vec t = module_action(*alg_, rank_, j, unit_vec(m, p));
                    for (std::size_t x = 0; x < m; ++x)
                        if (!t[x].is_zero()) img[x] += c * t[x];
                }
            for (std::size_t x = 0; x < m; ++x) pi10_.at(x, k) = img[x];
        }
        // i1(e_{(i,t)}) = class(e_i (x) (1 f_t)).
        i1_ = ExactMatrix(dim(), m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t t = 0; t < rank_; ++t) {
                Vec amb(n * m);
                for (std::size_t j = 0; j < n; ++j)
                    if (!one[j].is_zero()) amb[i * m + (j * rank_ + t)] = one[j];
                Vec q = quot_.project(amb);
                for (std::size_t x = 0; x < dim(); ++x) i1_.at(x, i * rank_ + t) = q[x];
            }
        h1_ = ExactMatrix::identity(dim()) - i1_ * pi10_;
        d1_ = h1_ * j1_;
    }

    static Vec unit_vec(std::size_t sz, std::size_t k) {
        Vec v(sz);
        v[k] = Scalar::one();
        return v;
    }

    const FDAlgebra* alg_;
    std::size_t rank_;
    QuotientSpace quot_;
    ExactMatrix j1_, pi10_, i1_, h1_, d1_;
};

}  // namespace algcalc
