#include <catch2/catch_amalgamated.hpp>

#include <algcalc/algebra.hpp>
#include <algcalc/rng.hpp>

using namespace algcalc;

TEST_CASE("matrix algebra M_2") {
    FDAlgebra m2 = FDAlgebra::matrix_algebra(2);
    REQUIRE(m2.dim() == 4);
    REQUIRE_FALSE(m2.is_commutative());
    // E11*E12 = E12, E12*E11 = 0
    Vec e11 = m2.basis_element(0), e12 = m2.basis_element(1);
    REQUIRE(m2.mul(e11, e12) == e12);
    REQUIRE(vec_is_zero(m2.mul(e12, e11)));
    REQUIRE(m2.center().dim() == 1);
    REQUIRE(m2.center().contains(m2.unit()));
    REQUIRE(m2.derivations().size() == 3);
}

TEST_CASE("inner derivations: ad b(a) = ba - ab") {
    FDAlgebra m2 = FDAlgebra::matrix_algebra(2);
    Vec e11 = m2.basis_element(0), e12 = m2.basis_element(1);
    ExactMatrix ad = m2.inner_derivation(e11);
    REQUIRE(ad.apply(e12) == e12);  // E11 E12 - E12 E11 = E12
    REQUIRE(m2.is_derivation(ad));
    // derivations of M_2 are exactly the inner ones
    std::vector<Vec> inner;
    for (std::size_t i = 0; i < 4; ++i)
        inner.push_back(m2.inner_derivation(m2.basis_element(i)).vectorize());
    Subspace inner_span = Subspace::span(inner, 16);
    REQUIRE(inner_span.dim() == 3);
    for (const auto& d : m2.derivations())
        REQUIRE(inner_span.contains(d.vectorize()));
}

TEST_CASE("truncated polynomial algebras") {
    FDAlgebra q1 = FDAlgebra::truncated_polynomial(1);
    REQUIRE(q1.derivations().empty());

    FDAlgebra q2 = FDAlgebra::truncated_polynomial(2);
    REQUIRE(q2.is_commutative());
    auto ders = q2.derivations();
    REQUIRE(ders.size() == 1);
    // the derivation space is spanned by x d/dx: 1 -> 0, x -> x
    REQUIRE(vec_is_zero(ders[0].apply(q2.basis_element(0))));
    Vec dx = ders[0].apply(q2.basis_element(1));
    REQUIRE(dx[0].is_zero());
    REQUIRE_FALSE(dx[1].is_zero());

    FDAlgebra q3 = FDAlgebra::truncated_polynomial(3);
    REQUIRE(q3.derivations().size() == 2);
    REQUIRE(q3.center().dim() == 3);
}

TEST_CASE("group algebras") {
    FDAlgebra cz3 = FDAlgebra::group_algebra(groups::cyclic(3), {}, "cz3");
    REQUIRE(cz3.is_commutative());
    REQUIRE(cz3.center().dim() == 3);

    FDAlgebra cs3 = FDAlgebra::group_algebra(groups::s3(), groups::s3_names(), "cs3");
    REQUIRE_FALSE(cs3.is_commutative());
    REQUIRE(cs3.center().dim() == 3);  // one per conjugacy class
    // inverses per Cayley table
    for (std::size_t g = 0; g < 6; ++g) {
        std::size_t h = groups::inverse_of(groups::s3(), g);
        REQUIRE(cs3.mul(cs3.basis_element(g), cs3.basis_element(h)) == cs3.unit());
    }
}

TEST_CASE("rejects non-associative tables") {
    // dim 2, e1 = unit, e2*e2 = e2 basis-swap broken on purpose:
    // set e2*e2 = e1 but e2*(e2*e2) vs (e2*e2)*e2 mismatch via unit tweak
    std::vector<std::vector<Vec>> mult(2, std::vector<Vec>(2, Vec(2)));
    mult[0][0][0] = Scalar(1);
    mult[0][1][1] = Scalar(1);
    mult[1][0][1] = Scalar(1);
    // e2*e2 = e1 + e2 gives an associative table (quadratic ring), so break
    // associativity by an asymmetric entry instead:
    mult[1][1][0] = Scalar(1);
    mult[1][1][1] = Scalar(1);
    REQUIRE_NOTHROW(FDAlgebra(2, {"1", "x"}, Vec{Scalar(1), Scalar(0)}, mult));
    mult[1][0][1] = Scalar(2);  // breaks the unit axiom
    REQUIRE_THROWS_AS(FDAlgebra(2, {"1", "x"}, Vec{Scalar(1), Scalar(0)}, mult), Error);
}

TEST_CASE("direct products") {
    FDAlgebra qq = FDAlgebra::direct_product(FDAlgebra::truncated_polynomial(1),
                                             FDAlgebra::truncated_polynomial(1), "qxq");
    REQUIRE(qq.dim() == 2);
    REQUIRE(qq.is_commutative());
    REQUIRE(qq.center().dim() == 2);
    // idempotents multiply componentwise
    REQUIRE(qq.mul(qq.basis_element(0), qq.basis_element(1)) == Vec(2));
    REQUIRE(qq.mul(qq.basis_element(0), qq.basis_element(0)) == qq.basis_element(0));
}

TEST_CASE("unital extension") {
    FDAlgebra q2 = FDAlgebra::truncated_polynomial(2);
    FDAlgebra ext = FDAlgebra::unital_extension(q2);
    REQUIRE(ext.dim() == 3);
    REQUIRE(ext.unit() == ext.basis_element(0));
    // the old unit is now an idempotent, not the unit
    Vec old_unit = ext.basis_element(1);
    REQUIRE(ext.mul(old_unit, old_unit) == old_unit);
    REQUIRE(ext.center().dim() == 3);
}

TEST_CASE("left and right multiplication matrices") {
    Rng rng(5);
    FDAlgebra m2 = FDAlgebra::matrix_algebra(2);
    for (int t = 0; t < 10; ++t) {
        Vec a = rng.vec(4), b = rng.vec(4);
        REQUIRE(m2.left_mult(a).apply(b) == m2.mul(a, b));
        REQUIRE(m2.right_mult(a).apply(b) == m2.mul(b, a));
        // L and R commute: L_a R_b = R_b L_a (associativity)
        REQUIRE(m2.left_mult(a) * m2.right_mult(b) ==
                m2.right_mult(b) * m2.left_mult(a));
    }
}
