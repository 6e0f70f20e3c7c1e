#pragma once

#include <algcalc/algebra.hpp>
#include <algcalc/matrix.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace algcalc {

/// Left action of algebra basis element b on the free module A^rank,
/// coordinates (i, t) -> i*rank + t, as an exact matrix.
inline ExactMatrix free_module_action(const FDAlgebra& alg, std::size_t rank,
                                      std::size_t b) {
    const std::size_t n = alg.dim(), m = n * rank;
    ExactMatrix mat(m, m);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec& prod = alg.basis_product(b, i);
        for (std::size_t k = 0; k < n; ++k) {
            if (prod[k].is_zero()) continue;
            for (std::size_t t = 0; t < rank; ++t)
                mat.at(k * rank + t, i * rank + t) = prod[k];
        }
    }
    return mat;
}

/// Order classifier for operators between free modules over a commutative
/// algebra: the least s such that every (s+1)-fold composition
/// delta_{a_0} ... delta_{a_s} (op) vanishes, where
/// delta_a(Phi) = (a.) Phi - Phi (a.).  The deltas are linear in a and
/// commute pairwise (the algebra is commutative), so weakly increasing basis
/// tuples suffice.  Returns nullopt when no s <= max_order certifies.
inline std::optional<unsigned> classify_order(const FDAlgebra& alg,
                                              std::size_t rank_p, std::size_t rank_q,
                                              const ExactMatrix& op,
                                              unsigned max_order = 4) {
    if (!alg.is_commutative())
        throw Error("classify_order: algebra must be commutative");
    const std::size_t n = alg.dim();
    if (op.rows() != n * rank_q || op.cols() != n * rank_p)
        throw Error("classify_order: operator shape mismatch");
    std::vector<ExactMatrix> actP, actQ;
    for (std::size_t b = 0; b < n; ++b) {
        actP.push_back(free_module_action(alg, rank_p, b));
        actQ.push_back(free_module_action(alg, rank_q, b));
    }
    // level[k] holds delta_{a_1}..delta_{a_k}(op) for weakly increasing
    // tuples, tagged with the last index used.
    struct Node {
        ExactMatrix mat;
        std::size_t min_next;
    };
    std::vector<Node> level{{op, 0}};
    for (unsigned s = 0; s <= max_order; ++s) {
        std::vector<Node> next;
        bool all_zero = true;
        for (const auto& nd : level)
            for (std::size_t a = nd.min_next; a < n; ++a) {
                ExactMatrix d = actQ[a] * nd.mat - nd.mat * actP[a];
                if (!d.is_zero()) all_zero = false;
                next.push_back({std::move(d), a});
            }
        if (all_zero) return s;
        level = std::move(next);
    }
    return std::nullopt;
}

/// A bimodule over an algebra, given by commuting left and right actions of
/// the basis elements.
struct Bimodule {
    std::size_t dim = 0;
    std::vector<ExactMatrix> left, right;

    Bimodule() = default;
    Bimodule(std::size_t d, std::vector<ExactMatrix> l, std::vector<ExactMatrix> r,
             const FDAlgebra& alg)
        : dim(d), left(std::move(l)), right(std::move(r)) {
        const std::size_t n = alg.dim();
        if (left.size() != n || right.size() != n)
            throw Error("bimodule: need one action matrix per basis element");
        for (const auto& m : left)
            if (m.rows() != dim || m.cols() != dim) throw Error("bimodule: shape");
        for (const auto& m : right)
            if (m.rows() != dim || m.cols() != dim) throw Error("bimodule: shape");
        // left is an algebra action, right a right action, and they commute
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                ExactMatrix lhs = left[i] * left[j];
                ExactMatrix rhs = combo(alg, left, alg.basis_product(i, j));
                if (!(lhs == rhs)) throw Error("bimodule: left action law fails");
                lhs = right[i] * right[j];
                rhs = combo(alg, right, alg.basis_product(j, i));
                if (!(lhs == rhs)) throw Error("bimodule: right action law fails");
                lhs = left[i] * right[j];
                ExactMatrix rhs2 = right[j] * left[i];
                if (!(lhs == rhs2)) throw Error("bimodule: actions do not commute");
            }
        // the unit acts as the identity on both sides
        if (!(combo(alg, left, alg.unit()) == ExactMatrix::identity(dim)) ||
            !(combo(alg, right, alg.unit()) == ExactMatrix::identity(dim)))
            throw Error("bimodule: unit does not act as identity");
    }

    /// A as a bimodule over itself.
    static Bimodule regular(const FDAlgebra& alg) {
        std::vector<ExactMatrix> l, r;
        for (std::size_t b = 0; b < alg.dim(); ++b) {
            l.push_back(alg.left_mult(alg.basis_element(b)));
            r.push_back(alg.right_mult(alg.basis_element(b)));
        }
        return Bimodule(alg.dim(), std::move(l), std::move(r), alg);
    }

    ExactMatrix left_of(const Vec& a) const { return combo_raw(left, a); }
    ExactMatrix right_of(const Vec& a) const { return combo_raw(right, a); }

private:
    static ExactMatrix combo(const FDAlgebra&, const std::vector<ExactMatrix>& acts,
                             const Vec& coeffs) {
        return combo_raw(acts, coeffs);
    }
    static ExactMatrix combo_raw(const std::vector<ExactMatrix>& acts,
                                 const Vec& coeffs) {
        ExactMatrix out(acts.empty() ? 0 : acts[0].rows(),
                        acts.empty() ? 0 : acts[0].cols());
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (!coeffs[i].is_zero()) out = out + coeffs[i] * acts[i];
        return out;
    }
};

/// Two-sided first-order test for bimodule operators:
///   a op(p) b - a op(pb) - op(ap) b + op(apb) = 0  for all basis a, b.
/// Returns true when the condition holds; on failure *witness names the
/// violating pair when requested.
inline bool nc_first_order(const FDAlgebra& alg, const Bimodule& P, const Bimodule& Q,
                           const ExactMatrix& op, std::string* witness = nullptr) {
    if (op.rows() != Q.dim || op.cols() != P.dim)
        throw Error("nc_first_order: operator shape mismatch");
    for (std::size_t a = 0; a < alg.dim(); ++a)
        for (std::size_t b = 0; b < alg.dim(); ++b) {
            ExactMatrix res = Q.left[a] * Q.right[b] * op - Q.left[a] * op * P.right[b] -
                              Q.right[b] * op * P.left[a] + op * P.left[a] * P.right[b];
            if (!res.is_zero()) {
                if (witness)
                    *witness = "fails at (a,b) = (" + alg.name(a) + "," + alg.name(b) + ")";
                return false;
            }
        }
    return true;
}

/// Decomposition of a first-order operator on a commutative algebra into its
/// zero-order part a |-> a op(1) and the derivation op - (zero-order part).
struct Diff1Split {
    ExactMatrix zero_order;  // multiplication by op(1)
    ExactMatrix derivation;
};

inline Diff1Split diff1_decompose(const FDAlgebra& alg, const ExactMatrix& op) {
    if (!alg.is_commutative())
        throw Error("diff1_decompose: algebra must be commutative");
    if (op.rows() != alg.dim() || op.cols() != alg.dim())
        throw Error("diff1_decompose: operator shape mismatch");
    Vec at_one = op.apply(alg.unit());
    ExactMatrix zero = alg.left_mult(at_one);
    ExactMatrix der = op - zero;
    if (!alg.is_derivation(der))
        throw Error("diff1_decompose: operator is not first order");
    return {std::move(zero), std::move(der)};
}

/// Iterated-center order filtration on Hom_K(P, Q) for LEFT module
/// structures: Z_0 = {Phi : a Phi = Phi (a.)}, I_0 = the submodule it
/// generates, and inductively Z_r = preimage of the center of Hom/I_{r-1},
/// I_r = I_{r-1} + submodule generated by Z_r.  Returns the least r with
/// op in I_r, or nullopt if r > max_order (also when the filtration
/// stabilizes below op).
///
/// Over a simple algebra such as M_n the filtration collapses immediately:
/// Z_0 consists of the right multiplications and the submodule they generate
/// is all of Hom_K(P, Q), so every operator gets order 0.  The filtration is
/// discriminating over non-simple (e.g. truncated polynomial) algebras.
inline std::optional<unsigned> lunts_order(const FDAlgebra& alg,
                                           const std::vector<ExactMatrix>& leftP,
                                           const std::vector<ExactMatrix>& leftQ,
                                           const ExactMatrix& op,
                                           unsigned max_order = 4) {
    const std::size_t n = alg.dim();
    if (leftP.size() != n || leftQ.size() != n)
        throw Error("lunts_order: need one action matrix per basis element");
    const std::size_t dp = leftP.empty() ? 0 : leftP[0].cols();
    const std::size_t dq = leftQ.empty() ? 0 : leftQ[0].cols();
    const std::size_t hom = dp * dq;
    if (op.rows() != dq || op.cols() != dp)
        throw Error("lunts_order: operator shape mismatch");

    // delta_a as an operator on vectorized Hom: columns = images of the
    // matrix units.
    auto delta_op = [&](std::size_t a) {
        ExactMatrix d(hom, hom);
        for (std::size_t r = 0; r < dq; ++r)
            for (std::size_t c = 0; c < dp; ++c) {
                ExactMatrix e(dq, dp);
                e.at(r, c) = Scalar::one();
                Vec img = (leftQ[a] * e - e * leftP[a]).vectorize();
                for (std::size_t x = 0; x < hom; ++x) d.at(x, r * dp + c) = img[x];
            }
        return d;
    };
    std::vector<ExactMatrix> deltas;
    for (std::size_t a = 0; a < n; ++a) deltas.push_back(delta_op(a));

    // Submodule generated by a set of vectorized homs: span of
    // leftQ[a] * Z * leftP[b] over basis pairs (plus Z itself).
    auto generate = [&](const std::vector<Vec>& zs) {
        std::vector<Vec> gens = zs;
        for (const auto& z : zs) {
            ExactMatrix Z = ExactMatrix::unvectorize(z, dq, dp);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    gens.push_back((leftQ[a] * Z * leftP[b]).vectorize());
        }
        return Subspace::span(gens, hom);
    };

    // Z relative to a current submodule I: {Phi : delta_a Phi in I for all a}.
    auto center_mod = [&](const Subspace& I) {
        QuotientSpace q(I);
        ExactMatrix proj(q.dim(), hom);
        for (std::size_t c = 0; c < hom; ++c) {
            Vec col(hom);
            col[c] = Scalar::one();
            Vec img = q.project(col);
            for (std::size_t r = 0; r < q.dim(); ++r) proj.at(r, c) = img[r];
        }
        ExactMatrix sys(n * q.dim(), hom);
        for (std::size_t a = 0; a < n; ++a) {
            ExactMatrix pd = proj * deltas[a];
            for (std::size_t r = 0; r < q.dim(); ++r)
                for (std::size_t c = 0; c < hom; ++c)
                    sys.at(a * q.dim() + r, c) = pd.at(r, c);
        }
        return sys.nullspace();
    };

    Vec target = op.vectorize();
    Subspace I = generate(center_mod(Subspace::span({}, hom)));
    for (unsigned r = 0; r <= max_order; ++r) {
        if (I.contains(target)) return r;
        Subspace nextI = I.sum(generate(center_mod(I)));
        if (nextI.dim() == I.dim()) return std::nullopt;  // stabilized below op
        I = std::move(nextI);
    }
    return std::nullopt;
}

}  // namespace algcalc
