#pragma once

#include <algcalc/algebra.hpp>
#include <algcalc/lie.hpp>
#include <algcalc/matrix.hpp>

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace algcalc {

/// An algebra-valued alternating form on tuples of a derivation basis: an
/// ordinary cochain over the derivation Lie algebra whose module is the
/// algebra's coordinate space.
using CEForm = Cochain;

/// Derivation-based differential calculus over a finite-dimensional algebra:
/// degree-k forms are alternating maps on k-tuples of a chosen derivation
/// basis with values in the algebra.  The supplied derivations must be
/// linearly independent and closed under the commutator bracket; the induced
/// Lie algebra and its action on the algebra's coordinate space drive the
/// coboundary.  Forms are plain algebra-valued cochains, so the coboundary,
/// Betti tables and the shuffle wedge reuse the cochain machinery.
///
/// The theta-dual-basis constructions downstream additionally assume the
/// algebra's center is spanned by the unit; the complex itself only needs
/// ground-field multilinearity and is built for any bracket-closed basis.
class CEDifferentialCalculus {
public:
    CEDifferentialCalculus(const FDAlgebra& alg, std::vector<ExactMatrix> derivs,
                           std::vector<std::string> names = {})
        : alg_(&alg) {
        const std::size_t n = alg.dim(), m = derivs.size();
        for (const auto& d : derivs)
            if (!alg.is_derivation(d))
                throw Error("ce calculus: supplied map is not a derivation");
        // linear independence
        std::vector<Vec> flat;
        for (const auto& d : derivs) flat.push_back(d.vectorize());
        if (Subspace::span(flat, n * n).dim() != m)
            throw Error("ce calculus: derivations not linearly independent");
        // bracket closure: solve [d_i, d_j] = c^k_{ij} d_k exactly
        ExactMatrix span_mat(n * n, m);
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t r = 0; r < n * n; ++r) span_mat.at(r, j) = flat[j][r];
        }
        std::vector<std::vector<Vec>> c(m, std::vector<Vec>(m, Vec(m)));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                ExactMatrix br = derivs[i] * derivs[j] - derivs[j] * derivs[i];
                auto sol = span_mat.solve(br.vectorize());
                if (!sol)
                    throw Error("ce calculus: derivation basis not bracket-closed at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
                c[i][j] = *sol;
                for (std::size_t k = 0; k < m; ++k) c[j][i][k] = -(*sol)[k];
            }
        if (names.empty()) {
            names.resize(m);
            for (std::size_t i = 0; i < m; ++i) names[i] = "u" + std::to_string(i + 1);
        }
        lie_ = std::make_shared<LieAlgebra>(m, std::move(names), std::move(c),
                                            alg.label() + ":der");
        rep_ = std::make_shared<Representation>(*lie_, n, std::move(derivs));
    }

    const FDAlgebra& algebra() const { return *alg_; }
    const LieAlgebra& lie() const { return *lie_; }
    const Representation& rep() const { return *rep_; }
    std::size_t basis_size() const { return lie_->dim(); }

    /// u_i applied to an algebra element.
    Vec apply(std::size_t i, const Vec& a) const { return rep_->act(i, a); }

    CEForm zero(unsigned degree) const { return Cochain(*rep_, degree); }

    /// Degree-0 form wrapping an algebra element.
    CEForm embed(const Vec& a) const {
        Cochain c(*rep_, 0);
        c.set({}, a);
        return c;
    }

    CEForm unit_form() const { return embed(alg_->unit()); }

    /// Coboundary of an algebra-valued form; at degree 0 this is
    /// (da)(u_i) = u_i(a).
    CEForm d(const CEForm& phi) const { return ce_coboundary(phi); }

    /// Signed-shuffle wedge with coefficient multiplication in the algebra
    /// (order preserved: no graded commutativity is assumed).
    CEForm wedge(const CEForm& a, const CEForm& b) const {
        const FDAlgebra* alg = alg_;
        return cup_product(a, b, *rep_,
                           [alg](const Vec& x, const Vec& y) { return alg->mul(x, y); });
    }

private:
    const FDAlgebra* alg_;
    std::shared_ptr<LieAlgebra> lie_;
    std::shared_ptr<Representation> rep_;
};

}  // namespace algcalc
