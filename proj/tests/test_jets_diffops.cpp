#include <catch2/catch_amalgamated.hpp>

#include <algcalc/diffops.hpp>
#include <algcalc/jets.hpp>
#include <algcalc/rng.hpp>

#include "oracles.hpp"

using namespace algcalc;

namespace {

using oracles::jet_relations_oracle;
using oracles::poly_derivation;

/// The formal derivative d/dx as a linear map (NOT a derivation of the
/// truncated algebra, and not a two-sided first-order operator either).
ExactMatrix formal_ddx(const FDAlgebra& alg) {
    const std::size_t n = alg.dim();
    ExactMatrix d(n, n);
    for (std::size_t i = 1; i < n; ++i)
        d.at(i - 1, i) = Scalar(static_cast<long>(i));
    return d;
}

}  // namespace

// --------------------------------------------------------------------- jets

TEST_CASE("jets: relations match the independent presentation oracle") {
    for (std::size_t n = 2; n <= 4; ++n) {
        FDAlgebra alg = FDAlgebra::truncated_polynomial(n);
        for (std::size_t rank : {std::size_t{1}, std::size_t{2}}) {
            JetModule1 jm(alg, rank);
            Subspace oracle = jet_relations_oracle(alg, rank);
            REQUIRE(jm.carrier().relations().dim() == oracle.dim());
            REQUIRE(jm.dim() == alg.dim() * alg.dim() * rank - oracle.dim());
        }
    }
}

TEST_CASE("jets: first-order forms of truncated polynomial algebras") {
    // dim O^1(Q[x]/(x^n)) = n - 1
    for (std::size_t n = 2; n <= 5; ++n) {
        FDAlgebra alg = FDAlgebra::truncated_polynomial(n);
        JetModule1 jm(alg, 1);
        REQUIRE(jm.o1_dim() == n - 1);
        REQUIRE(jm.dim() == alg.dim() + jm.o1_dim());
    }
    // over the ground field there are no first-order forms
    JetModule1 base(FDAlgebra::truncated_polynomial(1), 1);
    REQUIRE(base.o1_dim() == 0);
    REQUIRE(base.dim() == 1);
}

TEST_CASE("jets: dimensions for rank two") {
    FDAlgebra qx3 = FDAlgebra::truncated_polynomial(3);
    JetModule1 jm(qx3, 2);
    REQUIRE(jm.module_dim() == 6);
    REQUIRE(jm.dim() == 10);       // (dim A + dim O^1) * rank
    REQUIRE(jm.o1_dim() == 4);     // (n - 1) * rank
}

TEST_CASE("jets: projection and inclusion split") {
    for (std::size_t n = 2; n <= 4; ++n) {
        FDAlgebra alg = FDAlgebra::truncated_polynomial(n);
        JetModule1 jm(alg, 1);
        // pi^1_0 is surjective
        REQUIRE(jm.pi10().rank() == jm.module_dim());
        // pi^1_0 i1 = Id
        REQUIRE(jm.pi10() * jm.i1() == ExactMatrix::identity(jm.module_dim()));
        // direct-sum decomposition: i1(P) + ker(pi10) spans the carrier
        std::vector<Vec> cols;
        for (std::size_t j = 0; j < jm.module_dim(); ++j) cols.push_back(jm.i1().col(j));
        for (const auto& v : jm.pi10().nullspace()) cols.push_back(v);
        REQUIRE(Subspace::span(cols, jm.dim()).dim() == jm.dim());
        // h1 projects onto ker(pi10): pi10 h1 = 0 and h1 i1 = 0
        REQUIRE((jm.pi10() * jm.h1()).is_zero());
        REQUIRE((jm.h1() * jm.i1()).is_zero());
    }
}

TEST_CASE("jets: d1 obeys the Leibniz rule through the two actions") {
    Rng rng(120);
    FDAlgebra qx4 = FDAlgebra::truncated_polynomial(4);
    JetModule1 jm(qx4, 1);
    for (int t = 0; t < 6; ++t) {
        Vec a = rng.vec(qx4.dim()), b = rng.vec(qx4.dim());
        // d1(ab) = a . d1(b) + d1(a) . b  (left action, bullet action)
        Vec lhs = jm.d1().apply(qx4.mul(a, b));
        Vec rhs = vec_add(jm.left_action(a).apply(jm.d1().apply(b)),
                          jm.bullet_action(b).apply(jm.d1().apply(a)));
        REQUIRE(lhs == rhs);
    }
    // d1 of the unit vanishes; d1 x is nonzero
    REQUIRE(vec_is_zero(jm.d1().apply(qx4.unit())));
    REQUIRE_FALSE(vec_is_zero(jm.d1().apply(qx4.basis_element(1))));
}

TEST_CASE("jets: the two actions agree on first-order forms") {
    FDAlgebra qx3 = FDAlgebra::truncated_polynomial(3);
    JetModule1 jm(qx3, 1);
    for (std::size_t a = 0; a < qx3.dim(); ++a) {
        Vec e = qx3.basis_element(a);
        REQUIRE(jm.left_action(e) * jm.d1() == jm.bullet_action(e) * jm.d1());
    }
    // ... but differ on the full jet module (J1 splits off a copy of A)
    Vec x = qx3.basis_element(1);
    REQUIRE_FALSE(jm.left_action(x) == jm.bullet_action(x));
}

TEST_CASE("jets: actions descend consistently") {
    FDAlgebra qx3 = FDAlgebra::truncated_polynomial(3);
    JetModule1 jm(qx3, 2);
    Rng rng(121);
    for (int t = 0; t < 4; ++t) {
        Vec a = rng.vec(qx3.dim()), b = rng.vec(qx3.dim());
        // module laws on the quotient
        REQUIRE(jm.left_action(qx3.mul(a, b)) ==
                jm.left_action(a) * jm.left_action(b));
        REQUIRE(jm.bullet_action(qx3.mul(a, b)) ==
                jm.bullet_action(a) * jm.bullet_action(b));
        REQUIRE(jm.left_action(a) * jm.bullet_action(b) ==
                jm.bullet_action(b) * jm.left_action(a));
    }
    // pi10 intertwines the bullet action with multiplication on P
    Vec x = qx3.basis_element(1);
    ExactMatrix mult_on_p = free_module_action(qx3, 2, 1);
    REQUIRE(jm.pi10() * jm.bullet_action(x) == mult_on_p * jm.pi10());
}

TEST_CASE("jets: non-commutative algebras are rejected") {
    FDAlgebra m2 = FDAlgebra::matrix_algebra(2);
    REQUIRE_THROWS_AS(JetModule1(m2, 1), Error);
}

// ----------------------------------------------------------- order filtration

TEST_CASE("diffops: classify_order distinguishes 0, 1, 2") {
    FDAlgebra qx3 = FDAlgebra::truncated_polynomial(3);
    FDAlgebra qx4 = FDAlgebra::truncated_polynomial(4);
    // multiplication operators are order 0
    REQUIRE(classify_order(qx3, 1, 1, qx3.left_mult(qx3.basis_element(1))) == 0u);
    // derivations are order 1 exactly
    ExactMatrix u1 = poly_derivation(qx3, 1);
    REQUIRE(classify_order(qx3, 1, 1, u1) == 1u);
    // a composition of two derivations is order 2 exactly
    ExactMatrix u1sq = u1 * u1;
    REQUIRE(classify_order(qx3, 1, 1, u1sq) == 2u);
    REQUIRE(classify_order(qx4, 1, 1,
                           poly_derivation(qx4, 1) * poly_derivation(qx4, 2)) == 2u);
    // order is capped: with max_order 1 the square is not certified
    REQUIRE_FALSE(classify_order(qx3, 1, 1, u1sq, 1).has_value());
    // sums take the maximum of the orders
    REQUIRE(classify_order(qx3, 1, 1, u1 + qx3.left_mult(qx3.basis_element(2))) == 1u);
    // non-commutative algebras are rejected
    REQUIRE_THROWS_AS(
        classify_order(FDAlgebra::matrix_algebra(2), 1, 1,
                       ExactMatrix::identity(4)),
        Error);
}

TEST_CASE("diffops: classify_order on free modules of higher rank") {
    FDAlgebra qx3 = FDAlgebra::truncated_polynomial(3);
    // block operator on A^2: module morphism blocks give order 0
    ExactMatrix op(6, 6);
    ExactMatrix lx = qx3.left_mult(qx3.basis_element(1));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            op.at(i * 2 + 0, j * 2 + 1) = lx.at(i, j);       // slot 1 -> slot 0
            op.at(i * 2 + 1, j * 2 + 0) = (i == j) ? Scalar(1) : Scalar(0);
        }
    REQUIRE(classify_order(qx3, 2, 2, op) == 0u);
    // mixing in a derivation on one slot raises the order to 1
    ExactMatrix u1 = poly_derivation(qx3, 1);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) op.at(i * 2, j * 2) = u1.at(i, j);
    REQUIRE(classify_order(qx3, 2, 2, op) == 1u);
}

TEST_CASE("diffops: truncation raises the order of the formal derivative") {
    // d/dx maps x^i to i x^{i-1} on the basis, but x * x^{n-1} = 0 breaks the
    // calculus relation [x, d/dx] = -1 at the top degree: the operator is not
    // a derivation and its order grows with the truncation.
    for (std::size_t n = 2; n <= 4; ++n) {
        FDAlgebra qx = FDAlgebra::truncated_polynomial(n);
        ExactMatrix ddx = formal_ddx(qx);
        REQUIRE_FALSE(qx.is_derivation(ddx));
        REQUIRE(classify_order(qx, 1, 1, ddx, 8) == static_cast<unsigned>(n));
    }
    FDAlgebra qx3 = FDAlgebra::truncated_polynomial(3);
    ExactMatrix ddx = formal_ddx(qx3);
    // the two-sided bimodule condition rejects it as first order
    Bimodule reg = Bimodule::regular(qx3);
    std::string witness;
    REQUIRE_FALSE(nc_first_order(qx3, reg, reg, ddx, &witness));
    REQUIRE_FALSE(witness.empty());
    // and it does not split as multiplication + derivation
    REQUIRE_THROWS_AS(diff1_decompose(qx3, ddx), Error);
}

TEST_CASE("diffops: first-order splitting recovers its parts") {
    FDAlgebra qx4 = FDAlgebra::truncated_polynomial(4);
    ExactMatrix u = poly_derivation(qx4, 2);
    ExactMatrix mult = qx4.left_mult(qx4.basis_element(1));
    Diff1Split split = diff1_decompose(qx4, u + mult);
    REQUIRE(split.zero_order == mult);
    REQUIRE(split.derivation == u);
    // order-2 operators are rejected
    ExactMatrix u1 = poly_derivation(qx4, 1);
    REQUIRE_THROWS_AS(diff1_decompose(qx4, u1 * u1), Error);
}

TEST_CASE("diffops: two-sided first-order condition on M2") {
    FDAlgebra m2 = FDAlgebra::matrix_algebra(2);
    Bimodule reg = Bimodule::regular(m2);
    // inner derivations, left and right multiplications all pass
    for (std::size_t b = 0; b < 4; ++b) {
        Vec e = m2.basis_element(b);
        REQUIRE(nc_first_order(m2, reg, reg, m2.inner_derivation(e)));
        REQUIRE(nc_first_order(m2, reg, reg, m2.left_mult(e)));
        REQUIRE(nc_first_order(m2, reg, reg, m2.right_mult(e)));
    }
    // a composition of two inner derivations fails with a witness
    ExactMatrix d1 = m2.inner_derivation(m2.basis_element(1));
    ExactMatrix d2 = m2.inner_derivation(m2.basis_element(2));
    std::string witness;
    REQUIRE_FALSE(nc_first_order(m2, reg, reg, d1 * d2, &witness));
    REQUIRE_FALSE(witness.empty());
}

TEST_CASE("diffops: bimodule constructor validates the action laws") {
    FDAlgebra m2 = FDAlgebra::matrix_algebra(2);
    std::vector<ExactMatrix> left, right;
    for (std::size_t b = 0; b < 4; ++b) {
        left.push_back(m2.left_mult(m2.basis_element(b)));
        right.push_back(m2.right_mult(m2.basis_element(b)));
    }
    REQUIRE_NOTHROW(Bimodule(4, left, right, m2));
    // swapping the roles breaks the right-action law
    REQUIRE_THROWS_AS(Bimodule(4, right, left, m2), Error);
}

TEST_CASE("diffops: iterated-center filtration on the truncated line") {
    FDAlgebra qx3 = FDAlgebra::truncated_polynomial(3);
    std::vector<ExactMatrix> leftacts;
    for (std::size_t b = 0; b < qx3.dim(); ++b)
        leftacts.push_back(qx3.left_mult(qx3.basis_element(b)));
    // module morphisms have order 0
    REQUIRE(lunts_order(qx3, leftacts, leftacts,
                        qx3.left_mult(qx3.basis_element(2))) == 0u);
    // derivations have order 1
    ExactMatrix u1 = poly_derivation(qx3, 1);
    REQUIRE(lunts_order(qx3, leftacts, leftacts, u1) == 1u);
    // compositions have order 2
    REQUIRE(lunts_order(qx3, leftacts, leftacts, u1 * u1) == 2u);
    // the truncated formal derivative lands at order 3, same as the
    // commutator-based classifier
    REQUIRE(lunts_order(qx3, leftacts, leftacts, formal_ddx(qx3)) == 3u);
    // the top corner operator x^2 -> 1 realizes the maximal order 4
    ExactMatrix top(3, 3);
    top.at(0, 2) = Scalar(1);
    REQUIRE(lunts_order(qx3, leftacts, leftacts, top) == 4u);
    REQUIRE(classify_order(qx3, 1, 1, top) == 4u);
    // the filtration agrees with the delta-criterion classifier on samples
    Rng rng(122);
    for (int t = 0; t < 5; ++t) {
        ExactMatrix op = oracles::random_matrix(rng, 3, 3);
        auto a = classify_order(qx3, 1, 1, op, 4);
        auto b = lunts_order(qx3, leftacts, leftacts, op, 4);
        REQUIRE(a == b);
    }
}

TEST_CASE("diffops: the filtration collapses over a simple algebra") {
    // Over M_n the module-morphism commutant already generates the whole
    // Hom space, so every operator is assigned order 0.
    FDAlgebra m2 = FDAlgebra::matrix_algebra(2);
    std::vector<ExactMatrix> leftacts;
    for (std::size_t b = 0; b < m2.dim(); ++b)
        leftacts.push_back(m2.left_mult(m2.basis_element(b)));
    Rng rng(123);
    ExactMatrix random_op = oracles::random_matrix(rng, 4, 4);
    REQUIRE(lunts_order(m2, leftacts, leftacts, random_op) == 0u);
    ExactMatrix inner = m2.inner_derivation(m2.basis_element(1));
    REQUIRE(lunts_order(m2, leftacts, leftacts, inner) == 0u);
}
