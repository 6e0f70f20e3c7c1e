#pragma once

#include <algcalc/algebra.hpp>
#include <algcalc/ceforms.hpp>
#include <algcalc/lie.hpp>
#include <algcalc/matrix.hpp>

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace algcalc {

/// Derivation-based differential calculus over the matrix algebra M_n.  The
/// input is an anti-Hermitian traceless basis {eps_r} (r = 1..n^2-1); all
/// derivations of M_n are inner and u_r = ad eps_r span them.  The structure
/// constants c^s_{rq} with [eps_r, eps_q] = c^s_{rq} eps_s are solved for
/// exactly, and the dual 1-form basis theta^r satisfies theta^r(u_q) =
/// delta^r_q * 1.
class MatrixGeometry {
public:
    MatrixGeometry(std::size_t n, std::vector<Vec> eps, std::string note = "")
        : n_(n), note_(std::move(note)),
          alg_(std::make_shared<FDAlgebra>(FDAlgebra::matrix_algebra(n))) {
        const std::size_t d = n * n, m = d - 1;
        if (eps.size() != m)
            throw Error("matrix geometry: need n^2-1 basis elements");
        for (const auto& e : eps) {
            if (e.size() != d) throw Error("matrix geometry: basis element shape");
            Scalar tr;
            for (std::size_t r = 0; r < n; ++r) tr += e[r * n + r];
            if (!tr.is_zero()) throw Error("matrix geometry: basis element has trace");
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c2 = 0; c2 < n; ++c2)
                    if (e[c2 * n + r] != -e[r * n + c2].conj())
                        throw Error("matrix geometry: basis element not anti-Hermitian");
        }
        if (Subspace::span(eps, d).dim() != m)
            throw Error("matrix geometry: basis not linearly independent");
        eps_ = std::move(eps);

        // Solve [eps_r, eps_q] = c^s_{rq} eps_s exactly.
        ExactMatrix span_mat(d, m);
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t r = 0; r < d; ++r) span_mat.at(r, j) = eps_[j][r];
        std::vector<std::vector<Vec>> c(m, std::vector<Vec>(m, Vec(m)));
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t q = r + 1; q < m; ++q) {
                auto sol = span_mat.solve(alg_->commutator(eps_[r], eps_[q]));
                if (!sol)
                    throw Error("matrix geometry: basis not closed under commutator");
                c[r][q] = *sol;
                for (std::size_t s = 0; s < m; ++s) c[q][r][s] = -(*sol)[s];
            }
        std::vector<std::string> names(m);
        for (std::size_t i = 0; i < m; ++i) names[i] = "u" + std::to_string(i + 1);
        lie_ = std::make_shared<LieAlgebra>(m, std::move(names), std::move(c),
                                            "su" + std::to_string(n) + ":ad");
        std::vector<ExactMatrix> rho;
        for (const auto& e : eps_) rho.push_back(alg_->inner_derivation(e));
        rep_ = std::make_shared<Representation>(*lie_, d, std::move(rho));
    }

    /// n = 2: eps_r = -(i/2) * (Pauli matrix r); structure constants are the
    /// Levi-Civita symbol.
    static MatrixGeometry su2() {
        const Scalar mi2(Rational(0), Rational(-1, 2));  // -i/2
        std::vector<Vec> eps(3, Vec(4));
        eps[0][1] = mi2; eps[0][2] = mi2;                  // -(i/2)(E12+E21)
        eps[1][1] = Scalar(Rational(-1, 2), Rational(0));  // -(i/2)(-i E12)
        eps[1][2] = Scalar(Rational(1, 2), Rational(0));   // -(i/2)(+i E21)
        eps[2][0] = mi2; eps[2][3] = -mi2;                 // -(i/2)(E11-E22)
        return MatrixGeometry(2, std::move(eps), "pauli/2 basis");
    }

    /// n = 3: eps_r = -(i/2) * (Gell-Mann matrix r) for r = 1..7; the eighth
    /// basis vector uses diag(1,1,-2) (the usual diag(1,1,-2)/sqrt(3)
    /// rescaled by sqrt(3) to keep entries rational, with correspondingly
    /// rescaled structure constants).
    static MatrixGeometry su3() {
        const Scalar one = Scalar::one();
        const Scalar i = Scalar::i();
        auto unit = [](std::size_t r, std::size_t c) { return r * 3 + c; };
        std::vector<Vec> lam(8, Vec(9));
        lam[0][unit(0, 1)] = one;  lam[0][unit(1, 0)] = one;   // E12+E21
        lam[1][unit(0, 1)] = -i;   lam[1][unit(1, 0)] = i;     // -iE12+iE21
        lam[2][unit(0, 0)] = one;  lam[2][unit(1, 1)] = -one;  // E11-E22
        lam[3][unit(0, 2)] = one;  lam[3][unit(2, 0)] = one;   // E13+E31
        lam[4][unit(0, 2)] = -i;   lam[4][unit(2, 0)] = i;     // -iE13+iE31
        lam[5][unit(1, 2)] = one;  lam[5][unit(2, 1)] = one;   // E23+E32
        lam[6][unit(1, 2)] = -i;   lam[6][unit(2, 1)] = i;     // -iE23+iE32
        lam[7][unit(0, 0)] = one;  lam[7][unit(1, 1)] = one;   // diag(1,1,-2)
        lam[7][unit(2, 2)] = Scalar(Rational(-2), Rational(0));
        const Scalar mi2(Rational(0), Rational(-1, 2));
        std::vector<Vec> eps;
        for (auto& l : lam) eps.push_back(vec_scale(mi2, l));
        return MatrixGeometry(3, std::move(eps),
                              "gell-mann/2 basis, eighth vector rescaled rational");
    }

    std::size_t n() const { return n_; }
    const std::string& note() const { return note_; }
    const FDAlgebra& algebra() const { return *alg_; }
    const LieAlgebra& lie() const { return *lie_; }
    const Representation& rep() const { return *rep_; }
    std::size_t basis_size() const { return lie_->dim(); }
    const Vec& eps(std::size_t r) const { return eps_[r]; }

    /// Structure constant c^s_{rq}.
    const Scalar& c(std::size_t s, std::size_t r, std::size_t q) const {
        return lie_->basis_bracket(r, q)[s];
    }

    /// u_r applied to an algebra element: ad eps_r.
    Vec apply(std::size_t r, const Vec& a) const { return rep_->act(r, a); }

    /// Dual basis 1-form theta^r, with theta^r(u_q) = delta^r_q * 1.
    CEForm theta(std::size_t r) const {
        Cochain t(*rep_, 1);
        t.set({static_cast<int>(r)}, alg_->unit());
        return t;
    }

    /// The canonical generator theta = -sum_r eps_r theta^r, for which
    /// da = a theta - theta a.
    CEForm canonical_theta() const {
        Cochain t(*rep_, 1);
        for (std::size_t r = 0; r < basis_size(); ++r)
            t.set({static_cast<int>(r)}, vec_scale(Scalar(-1), eps_[r]));
        return t;
    }

    CEForm embed(const Vec& a) const {
        Cochain c0(*rep_, 0);
        c0.set({}, a);
        return c0;
    }

    CEForm d(const CEForm& phi) const { return ce_coboundary(phi); }

    CEForm wedge(const CEForm& a, const CEForm& b) const {
        const FDAlgebra* alg = alg_.get();
        return cup_product(a, b, *rep_,
                           [alg](const Vec& x, const Vec& y) { return alg->mul(x, y); });
    }

    /// Residual of da - (a theta - theta a); zero for every a.
    CEForm da_residual(const Vec& a) const {
        CEForm a0 = embed(a);
        CEForm th = canonical_theta();
        CEForm rhs = wedge(a0, th) + (Scalar(-1) * wedge(th, a0));
        return d(a0) + (Scalar(-1) * rhs);
    }

    /// Residual of d eps_r = c^s_{qr} eps_s theta^q, componentwise.
    CEForm d_eps_residual(std::size_t r) const {
        CEForm lhs = d(embed(eps_[r]));
        Cochain rhs(*rep_, 1);
        for (std::size_t q = 0; q < basis_size(); ++q) {
            Vec val(alg_->dim());
            for (std::size_t s = 0; s < basis_size(); ++s) {
                const Scalar& cs = c(s, q, r);
                if (!cs.is_zero()) val = vec_add(val, vec_scale(cs, eps_[s]));
            }
            if (!vec_is_zero(val)) rhs.set({static_cast<int>(q)}, std::move(val));
        }
        return lhs + (Scalar(-1) * rhs);
    }

    /// Residuals of the Maurer-Cartan equations
    /// d theta^r = -1/2 c^r_{qs} theta^q wedge theta^s, one per r; all must
    /// be zero.
    std::vector<CEForm> maurer_cartan_residuals() const {
        std::vector<CEForm> out;
        const Scalar mhalf(Rational(-1, 2), Rational(0));
        for (std::size_t r = 0; r < basis_size(); ++r) {
            CEForm lhs = d(theta(r));
            Cochain rhs(*rep_, 2);
            for (std::size_t q = 0; q < basis_size(); ++q)
                for (std::size_t s = 0; s < basis_size(); ++s) {
                    const Scalar& crqs = c(r, q, s);
                    if (crqs.is_zero()) continue;
                    rhs = rhs + ((mhalf * crqs) * wedge(theta(q), theta(s)));
                }
            out.push_back(lhs + (Scalar(-1) * rhs));
        }
        return out;
    }

private:
    std::size_t n_;
    std::string note_;
    std::shared_ptr<FDAlgebra> alg_;
    std::vector<Vec> eps_;
    std::shared_ptr<LieAlgebra> lie_;
    std::shared_ptr<Representation> rep_;
};

}  // namespace algcalc
