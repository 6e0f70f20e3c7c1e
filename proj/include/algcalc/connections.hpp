#pragma once

#include <algcalc/algebra.hpp>
#include <algcalc/diffops.hpp>
#include <algcalc/matrix.hpp>
#include <algcalc/matrix_geometry.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace algcalc {

/// Covariant derivative on the free module A^rank over a commutative algebra,
/// given by a list of pairwise independent derivations u_alpha and Christoffel
/// arrays Gamma[alpha][t][s] in A:
///   (nabla_alpha p)_t = u_alpha(p_t) + sum_s Gamma[alpha][t][s] * p_s.
/// Module coordinates are (i, t) -> i*rank + t (algebra index major).
class KoszulConnection {
public:
    KoszulConnection(const FDAlgebra& alg, std::size_t rank,
                     std::vector<ExactMatrix> derivs,
                     std::vector<std::vector<std::vector<Vec>>> gamma)
        : alg_(&alg), rank_(rank), derivs_(std::move(derivs)),
          gamma_(std::move(gamma)) {
        if (!alg.is_commutative())
            throw Error("koszul connection: algebra must be commutative");
        const std::size_t n = alg.dim();
        if (gamma_.size() != derivs_.size())
            throw Error("koszul connection: one Christoffel array per derivation");
        std::vector<Vec> flat;
        for (const auto& u : derivs_) {
            if (u.rows() != n || u.cols() != n || !alg.is_derivation(u))
                throw Error("koszul connection: not a derivation");
            flat.push_back(u.vectorize());
        }
        if (Subspace::span(flat, n * n).dim() != derivs_.size())
            throw Error("koszul connection: derivations not linearly independent");
        for (const auto& g : gamma_) {
            if (g.size() != rank_) throw Error("koszul connection: Gamma shape");
            for (const auto& row : g) {
                if (row.size() != rank_) throw Error("koszul connection: Gamma shape");
                for (const auto& entry : row)
                    if (entry.size() != n) throw Error("koszul connection: Gamma entry");
            }
        }
        for (std::size_t al = 0; al < derivs_.size(); ++al)
            nabla_.push_back(build_nabla(derivs_[al], gamma_[al]));
    }

    const FDAlgebra& algebra() const { return *alg_; }
    std::size_t rank() const { return rank_; }
    std::size_t num_derivations() const { return derivs_.size(); }
    const ExactMatrix& derivation(std::size_t al) const { return derivs_[al]; }
    const ExactMatrix& nabla(std::size_t al) const { return nabla_[al]; }

    /// Leibniz law nabla_alpha(a p) = u_alpha(a) p + a nabla_alpha(p),
    /// checked exactly on all basis pairs.
    bool leibniz_check(std::string* witness = nullptr) const {
        const std::size_t n = alg_->dim();
        for (std::size_t al = 0; al < derivs_.size(); ++al)
            for (std::size_t a = 0; a < n; ++a) {
                ExactMatrix la = free_module_action(*alg_, rank_, a);
                ExactMatrix lua = module_left(derivs_[al].col(a));
                ExactMatrix res = nabla_[al] * la - lua - la * nabla_[al];
                if (!res.is_zero()) {
                    if (witness)
                        *witness = "Leibniz fails for derivation " + std::to_string(al) +
                                   " at a = " + alg_->name(a);
                    return false;
                }
            }
        return true;
    }

    /// Curvature R(u_alpha, u_beta) = [nabla_alpha, nabla_beta] -
    /// nabla_{[u_alpha, u_beta]}.  The bracket of the two derivations must lie
    /// in the span of the given family; the connection extends linearly.
    ExactMatrix curvature(std::size_t al, std::size_t be) const {
        ExactMatrix br = derivs_[al] * derivs_[be] - derivs_[be] * derivs_[al];
        Vec coeffs = bracket_coeffs(br);
        ExactMatrix nbr(rank_ * alg_->dim(), rank_ * alg_->dim());
        for (std::size_t g = 0; g < derivs_.size(); ++g)
            if (!coeffs[g].is_zero()) nbr = nbr + coeffs[g] * nabla_[g];
        return nabla_[al] * nabla_[be] - nabla_[be] * nabla_[al] - nbr;
    }

private:
    ExactMatrix module_left(const Vec& a) const {
        ExactMatrix l = alg_->left_mult(a);
        return l.kron(ExactMatrix::identity(rank_));
    }

    ExactMatrix build_nabla(const ExactMatrix& u,
                            const std::vector<std::vector<Vec>>& g) const {
        ExactMatrix m = u.kron(ExactMatrix::identity(rank_));
        for (std::size_t t = 0; t < rank_; ++t)
            for (std::size_t s = 0; s < rank_; ++s) {
                if (vec_is_zero(g[t][s])) continue;
                ExactMatrix e(rank_, rank_);
                e.at(t, s) = Scalar::one();
                m = m + alg_->left_mult(g[t][s]).kron(e);
            }
        return m;
    }

    Vec bracket_coeffs(const ExactMatrix& br) const {
        const std::size_t n = alg_->dim();
        ExactMatrix span_mat(n * n, derivs_.size());
        for (std::size_t g = 0; g < derivs_.size(); ++g) {
            Vec v = derivs_[g].vectorize();
            for (std::size_t x = 0; x < n * n; ++x) span_mat.at(x, g) = v[x];
        }
        auto sol = span_mat.solve(br.vectorize());
        if (!sol)
            throw Error("koszul connection: derivation bracket leaves the family");
        return *sol;
    }

    const FDAlgebra* alg_;
    std::size_t rank_;
    std::vector<ExactMatrix> derivs_;
    std::vector<std::vector<std::vector<Vec>>> gamma_;
    std::vector<ExactMatrix> nabla_;
};

/// Connection on a bimodule with the two-sided Leibniz law
///   nabla_u(a p b) = u(a) p b + a nabla_u(p) b + a p u(b),
/// given for a linearly independent family of derivations.
class DVConnection {
public:
    DVConnection(const FDAlgebra& alg, Bimodule mod, std::vector<ExactMatrix> derivs,
                 std::vector<ExactMatrix> nablas)
        : alg_(&alg), mod_(std::move(mod)), derivs_(std::move(derivs)),
          nabla_(std::move(nablas)) {
        const std::size_t n = alg.dim();
        if (nabla_.size() != derivs_.size())
            throw Error("dv connection: one nabla per derivation");
        std::vector<Vec> flat;
        for (const auto& u : derivs_) {
            if (u.rows() != n || u.cols() != n || !alg.is_derivation(u))
                throw Error("dv connection: not a derivation");
            flat.push_back(u.vectorize());
        }
        if (Subspace::span(flat, n * n).dim() != derivs_.size())
            throw Error("dv connection: derivations not linearly independent");
        for (const auto& m : nabla_)
            if (m.rows() != mod_.dim || m.cols() != mod_.dim)
                throw Error("dv connection: nabla shape mismatch");
    }

    /// nabla_u = u itself on the regular bimodule.
    static DVConnection canonical(const FDAlgebra& alg,
                                  std::vector<ExactMatrix> derivs) {
        std::vector<ExactMatrix> nablas = derivs;
        return DVConnection(alg, Bimodule::regular(alg), std::move(derivs),
                            std::move(nablas));
    }

    /// For inner derivations u_gamma = [b_gamma, .] on the algebra, the
    /// connection nabla_gamma(p) = b_gamma p - p b_gamma on any bimodule.
    static DVConnection inner(const FDAlgebra& alg, Bimodule mod,
                              const std::vector<Vec>& bs) {
        std::vector<ExactMatrix> derivs, nablas;
        for (const auto& b : bs) {
            derivs.push_back(alg.inner_derivation(b));
            nablas.push_back(mod.left_of(b) - mod.right_of(b));
        }
        return DVConnection(alg, std::move(mod), std::move(derivs),
                            std::move(nablas));
    }

    const FDAlgebra& algebra() const { return *alg_; }
    const Bimodule& module() const { return mod_; }
    std::size_t num_derivations() const { return derivs_.size(); }
    const ExactMatrix& derivation(std::size_t al) const { return derivs_[al]; }
    const ExactMatrix& nabla(std::size_t al) const { return nabla_[al]; }

    /// Two-sided Leibniz law, checked exactly on all basis pairs (a, b).
    bool check_leibniz(std::string* witness = nullptr) const {
        for (std::size_t al = 0; al < derivs_.size(); ++al)
            for (std::size_t a = 0; a < alg_->dim(); ++a)
                for (std::size_t b = 0; b < alg_->dim(); ++b) {
                    const ExactMatrix& la = mod_.left[a];
                    const ExactMatrix& rb = mod_.right[b];
                    ExactMatrix lua = mod_.left_of(derivs_[al].col(a));
                    ExactMatrix rub = mod_.right_of(derivs_[al].col(b));
                    ExactMatrix res = nabla_[al] * la * rb - lua * rb -
                                      la * rb * nabla_[al] - la * rub;
                    if (!res.is_zero()) {
                        if (witness)
                            *witness = "two-sided Leibniz fails for derivation " +
                                       std::to_string(al) + " at (a,b) = (" +
                                       alg_->name(a) + "," + alg_->name(b) + ")";
                        return false;
                    }
                }
        return true;
    }

    /// R(u_alpha, u_beta) = [nabla_alpha, nabla_beta] - nabla_{[u_alpha,u_beta]}.
    ExactMatrix curvature(std::size_t al, std::size_t be) const {
        ExactMatrix br = derivs_[al] * derivs_[be] - derivs_[be] * derivs_[al];
        const std::size_t n = alg_->dim();
        ExactMatrix span_mat(n * n, derivs_.size());
        for (std::size_t g = 0; g < derivs_.size(); ++g) {
            Vec v = derivs_[g].vectorize();
            for (std::size_t x = 0; x < n * n; ++x) span_mat.at(x, g) = v[x];
        }
        auto sol = span_mat.solve(br.vectorize());
        if (!sol) throw Error("dv connection: derivation bracket leaves the family");
        ExactMatrix nbr(mod_.dim, mod_.dim);
        for (std::size_t g = 0; g < derivs_.size(); ++g)
            if (!(*sol)[g].is_zero()) nbr = nbr + (*sol)[g] * nabla_[g];
        return nabla_[al] * nabla_[be] - nabla_[be] * nabla_[al] - nbr;
    }

private:
    const FDAlgebra* alg_;
    Bimodule mod_;
    std::vector<ExactMatrix> derivs_;
    std::vector<ExactMatrix> nabla_;
};

/// Linear connection on the 1-forms of a matrix geometry, determined by
/// constant coefficients: nabla_{u_r} theta^p = omega[p][r][q] theta^q.
struct LinearConnectionMn {
    const MatrixGeometry* geo;
    // omega[p][r][q], all indices in 0..basis_size-1
    std::vector<std::vector<std::vector<Scalar>>> omega;

    LinearConnectionMn(const MatrixGeometry& g,
                       std::vector<std::vector<std::vector<Scalar>>> om)
        : geo(&g), omega(std::move(om)) {
        const std::size_t m = g.basis_size();
        if (omega.size() != m) throw Error("linear connection: omega shape");
        for (const auto& plane : omega) {
            if (plane.size() != m) throw Error("linear connection: omega shape");
            for (const auto& row : plane)
                if (row.size() != m) throw Error("linear connection: omega shape");
        }
    }

    static LinearConnectionMn flat(const MatrixGeometry& g) {
        const std::size_t m = g.basis_size();
        return LinearConnectionMn(
            g, std::vector<std::vector<std::vector<Scalar>>>(
                   m, std::vector<std::vector<Scalar>>(m, std::vector<Scalar>(m))));
    }

    /// omega^p_{rq} = -c^p_{rq}, the unique torsion-free choice.
    static LinearConnectionMn torsion_free(const MatrixGeometry& g) {
        const std::size_t m = g.basis_size();
        std::vector<std::vector<std::vector<Scalar>>> om(
            m, std::vector<std::vector<Scalar>>(m, std::vector<Scalar>(m)));
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t q = 0; q < m; ++q)
                    om[p][r][q] = Scalar(-1) * g.c(p, r, q);
        return LinearConnectionMn(g, std::move(om));
    }
};

/// Torsion coefficients T[p][r][q] = T^p(u_r, u_q), from
///   T^p(u_r, u_q) = d theta^p (u_r, u_q) - (nabla_{u_r} theta^p)(u_q)
///                 + u_q(theta^p(u_r)).
/// The last term vanishes because theta^p(u_r) is a multiple of the unit,
/// and d theta^p (u_r, u_q) = -c^p_{rq}, so T^p_{rq} = -c^p_{rq} - omega^p_{rq}.
inline std::vector<std::vector<std::vector<Scalar>>> mn_torsion(
    const LinearConnectionMn& conn) {
    const MatrixGeometry& g = *conn.geo;
    const std::size_t m = g.basis_size();
    std::vector<std::vector<std::vector<Scalar>>> t(
        m, std::vector<std::vector<Scalar>>(m, std::vector<Scalar>(m)));
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t q = 0; q < m; ++q)
                t[p][r][q] = Scalar(-1) * g.c(p, r, q) - conn.omega[p][r][q];
    return t;
}

inline bool mn_tensor_is_zero(
    const std::vector<std::vector<std::vector<Scalar>>>& t) {
    for (const auto& plane : t)
        for (const auto& row : plane)
            for (const auto& x : row)
                if (!x.is_zero()) return false;
    return true;
}

/// Dimension of the affine solution space of T = 0 in the omega coefficients,
/// computed generically: evaluate the torsion at omega = 0 for the constant
/// part and at each coordinate unit for the columns, then take the nullity of
/// the linear part restricted to the solvable system.  Returns the dimension
/// (0 means the torsion-free connection is unique).
inline std::size_t mn_torsion_zero_solution_dim(const MatrixGeometry& g) {
    const std::size_t m = g.basis_size();
    const std::size_t unknowns = m * m * m;
    LinearConnectionMn zero = LinearConnectionMn::flat(g);
    auto t0 = mn_torsion(zero);
    Vec constant(unknowns);
    std::size_t idx = 0;
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t q = 0; q < m; ++q) constant[idx++] = t0[p][r][q];
    ExactMatrix lin(unknowns, unknowns);
    for (std::size_t up = 0; up < m; ++up)
        for (std::size_t ur = 0; ur < m; ++ur)
            for (std::size_t uq = 0; uq < m; ++uq) {
                LinearConnectionMn e = LinearConnectionMn::flat(g);
                e.omega[up][ur][uq] = Scalar::one();
                auto te = mn_torsion(e);
                std::size_t row = 0, colidx = (up * m + ur) * m + uq;
                for (std::size_t p = 0; p < m; ++p)
                    for (std::size_t r = 0; r < m; ++r)
                        for (std::size_t q = 0; q < m; ++q) {
                            lin.at(row, colidx) = te[p][r][q] - constant[row];
                            ++row;
                        }
            }
    Vec rhs(unknowns);
    for (std::size_t x = 0; x < unknowns; ++x) rhs[x] = Scalar(-1) * constant[x];
    if (!lin.solve(rhs)) throw Error("torsion-free system is infeasible");
    return lin.nullspace().size();
}

/// Curvature coefficients R[p][r][q][t]: the coefficient of theta^t in
/// R(u_r, u_q) theta^p, where R(u, v) = [nabla_u, nabla_v] - nabla_{[u,v]}:
///   R^p_{rq,t} = sum_s (omega^p_{qs} omega^s_{rt} - omega^p_{rs} omega^s_{qt})
///              - sum_s c^s_{rq} omega^p_{st}.
inline std::vector<std::vector<std::vector<std::vector<Scalar>>>> mn_curvature(
    const LinearConnectionMn& conn) {
    const MatrixGeometry& g = *conn.geo;
    const std::size_t m = g.basis_size();
    const auto& om = conn.omega;
    std::vector<std::vector<std::vector<std::vector<Scalar>>>> rr(
        m, std::vector<std::vector<std::vector<Scalar>>>(
               m, std::vector<std::vector<Scalar>>(m, std::vector<Scalar>(m))));
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t q = 0; q < m; ++q)
                for (std::size_t t = 0; t < m; ++t) {
                    Scalar acc = Scalar::zero();
                    for (std::size_t s = 0; s < m; ++s) {
                        acc = acc + om[p][q][s] * om[s][r][t] -
                              om[p][r][s] * om[s][q][t] - g.c(s, r, q) * om[p][s][t];
                    }
                    rr[p][r][q][t] = acc;
                }
    return rr;
}

}  // namespace algcalc
