#include <catch2/catch_amalgamated.hpp>

#include <algcalc/grassmann.hpp>
#include <algcalc/lie.hpp>
#include <algcalc/rng.hpp>
#include <algcalc/superalgebra.hpp>
#include <algcalc/supermatrix.hpp>

#include "oracles.hpp"

using namespace algcalc;

namespace {

GrassmannElement random_grassmann(Rng& rng, std::size_t rank, bool real = false) {
    GrassmannElement g(rank);
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << rank); ++m) {
        Scalar c = real ? Scalar(rng.rational()) : rng.scalar();
        g.set_coeff(GrassmannElement::subset_of(m), c);
    }
    return g;
}

}  // namespace

TEST_CASE("grassmann generators square to zero and anticommute") {
    const std::size_t n = 3;
    auto c1 = GrassmannElement::generator(n, 1);
    auto c2 = GrassmannElement::generator(n, 2);
    REQUIRE((c1 * c1).is_zero());
    REQUIRE(c1 * c2 == -(c2 * c1));
    auto one = GrassmannElement::scalar(n, Scalar::one());
    REQUIRE((one + c1) * (one - c1) == one);
}

TEST_CASE("grassmann ring laws on random elements") {
    Rng rng(61);
    const std::size_t n = 4;
    for (int t = 0; t < 10; ++t) {
        auto a = random_grassmann(rng, n);
        auto b = random_grassmann(rng, n);
        auto c = random_grassmann(rng, n);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        // graded commutativity on homogeneous parts
        for (auto pa : {a.even_part(), a.odd_part()})
            for (auto pb : {b.even_part(), b.odd_part()}) {
                Scalar sgn = (pa.parity() == 1 && pb.parity() == 1) ? Scalar(-1)
                                                                    : Scalar(1);
                REQUIRE(pa * pb == sgn * (pb * pa));
            }
    }
}

TEST_CASE("body and soul") {
    const std::size_t n = 3;
    auto c1 = GrassmannElement::generator(n, 1);
    auto c2 = GrassmannElement::generator(n, 2);
    auto a = GrassmannElement::scalar(n, Scalar(3)) + Scalar(2) * (c1 * c2);
    auto [body, soul] = body_soul(a);
    REQUIRE(body == Scalar(3));
    REQUIRE(soul == Scalar(2) * (c1 * c2));
    REQUIRE(GrassmannElement::scalar(n, body) + soul == a);

    auto pure = Scalar(5) * c1;
    REQUIRE(body_soul(pure).first == Scalar(0));
    REQUIRE(body_soul(pure).second == pure);

    // body is a ring morphism
    Rng rng(67);
    for (int t = 0; t < 20; ++t) {
        auto x = random_grassmann(rng, n);
        auto y = random_grassmann(rng, n);
        REQUIRE((x * y).body() == x.body() * y.body());
        REQUIRE((x + y).body() == x.body() + y.body());
    }
    auto one = GrassmannElement::scalar(n, Scalar::one());
    REQUIRE(((one + c1) * (one + c2)).body() == Scalar::one());
}

TEST_CASE("soul is nilpotent") {
    Rng rng(71);
    for (std::size_t n = 1; n <= 4; ++n)
        for (int t = 0; t < 5; ++t) {
            auto s = random_grassmann(rng, n).soul();
            GrassmannElement p = GrassmannElement::scalar(n, Scalar::one());
            for (std::size_t k = 0; k <= n; ++k) p = p * s;
            REQUIRE(p.is_zero());
        }
}

TEST_CASE("grassmann norm") {
    const std::size_t n = 3;
    auto c1 = GrassmannElement::generator(n, 1);
    auto c2 = GrassmannElement::generator(n, 2);
    auto a = GrassmannElement::scalar(n, Scalar::one()) + c1 + Scalar(2) * (c1 * c2);
    REQUIRE(a.norm1() == Rational(4));
    REQUIRE(GrassmannElement(n).norm1() == Rational(0));

    Rng rng(73);
    for (int t = 0; t < 20; ++t) {
        auto x = random_grassmann(rng, n, /*real=*/true);
        auto y = random_grassmann(rng, n, /*real=*/true);
        // additivity over the even/odd split (disjoint monomial sets)
        REQUIRE(x.norm1() == x.even_part().norm1() + x.odd_part().norm1());
        // submultiplicative
        REQUIRE((x * y).norm1() <= x.norm1() * y.norm1());
        // and a triangle inequality for good measure
        REQUIRE((x + y).norm1() <= x.norm1() + y.norm1());
    }

    auto complex_elt = GrassmannElement::scalar(n, Scalar::i());
    REQUIRE_THROWS_AS(complex_elt.norm1(), Error);
}

TEST_CASE("grassmann guardrails") {
    REQUIRE_THROWS_AS(GrassmannElement(13), Error);
    auto a = GrassmannElement::scalar(2, Scalar::one());
    auto b = GrassmannElement::scalar(3, Scalar::one());
    REQUIRE_THROWS_AS(a * b, Error);
    REQUIRE_THROWS_AS(a + b, Error);
    REQUIRE_THROWS_AS(GrassmannElement::generator(2, 3), Error);
    GrassmannElement g(3);
    REQUIRE_THROWS_AS(g.set_coeff({2, 1}, Scalar::one()), Error);
}

TEST_CASE("supermatrix parity bookkeeping") {
    const std::size_t rank = 2;
    auto c1 = GrassmannElement::generator(rank, 1);
    auto c2 = GrassmannElement::generator(rank, 2);
    auto even_val = GrassmannElement::scalar(rank, Scalar(3)) + Scalar(2) * (c1 * c2);

    // (1|1) even supermatrix: diagonal entries even, off-diagonal odd
    Supermatrix a(1, 1, rank, 0);
    a.set(0, 0, even_val);
    a.set(1, 1, GrassmannElement::scalar(rank, Scalar(5)));
    a.set(0, 1, c1);
    REQUIRE_THROWS_AS(a.set(0, 1, even_val), Error);   // wrong parity
    REQUIRE_THROWS_AS(a.set(0, 0, even_val + c1), Error);  // inhomogeneous

    Supermatrix id = Supermatrix::identity(1, 1, rank);
    REQUIRE(id * a == a);
    REQUIRE(a * id == a);

    // parities compose additively under multiplication
    Supermatrix odd(1, 1, rank, 1);
    odd.set(0, 1, GrassmannElement::scalar(rank, Scalar::one()));
    odd.set(1, 0, GrassmannElement::scalar(rank, Scalar(2)));
    odd.set(0, 0, c2);
    REQUIRE((a * a).parity() == 0);
    REQUIRE((a * odd).parity() == 1);
    REQUIRE((odd * odd).parity() == 0);
    REQUIRE_THROWS_AS(a + odd, Error);
}

TEST_CASE("diagonal even times off-diagonal odd-entry supermatrix") {
    // 1|1 blocks, diagonal matrix with even entries against the matrix whose
    // off-diagonal entries are the generator c1: the product has entries
    // c1 * (even entry), placed off-diagonal.
    const std::size_t rank = 2;
    auto c1 = GrassmannElement::generator(rank, 1);
    auto c2 = GrassmannElement::generator(rank, 2);
    auto d1 = GrassmannElement::scalar(rank, Scalar(3)) + Scalar(2) * (c1 * c2);
    auto d2 = GrassmannElement::scalar(rank, Scalar(7));

    Supermatrix diag(1, 1, rank, 0);
    diag.set(0, 0, d1);
    diag.set(1, 1, d2);
    Supermatrix off(1, 1, rank, 0);
    off.set(0, 1, c1);
    off.set(1, 0, c1);

    Supermatrix prod = diag * off;
    REQUIRE(prod.at(0, 0).is_zero());
    REQUIRE(prod.at(1, 1).is_zero());
    REQUIRE(prod.at(0, 1) == d1 * c1);  // = 3*c1 (the c1c2 part dies on c1)
    REQUIRE(prod.at(1, 0) == d2 * c1);
    REQUIRE(prod.at(0, 1) == Scalar(3) * c1);
    REQUIRE(prod.at(1, 0) == Scalar(7) * c1);

    // superbracket consistency: [diag, off] = diag*off - off*diag (even/even)
    REQUIRE(superbracket(diag, off) == diag * off - off * diag);
}

TEST_CASE("lie superalgebra constructors validate") {
    REQUIRE_NOTHROW(LieSuperalgebra::super11());
    REQUIRE_NOTHROW(LieSuperalgebra::abelian(2, 2));
    REQUIRE_NOTHROW(LieSuperalgebra::gl(1, 1));
    REQUIRE_NOTHROW(LieSuperalgebra::gl(2, 1));

    // parity violation: [eps,eps] = eps is odd = even product
    {
        std::vector<std::vector<Vec>> c(2, std::vector<Vec>(2, Vec(2)));
        c[1][1][1] = Scalar(1);
        REQUIRE_THROWS_AS(LieSuperalgebra(1, 1, {"e", "eps"}, c), Error);
    }
    // graded antisymmetry violation: [e,eps] = eps but [eps,e] = eps too
    {
        std::vector<std::vector<Vec>> c(2, std::vector<Vec>(2, Vec(2)));
        c[0][1][1] = Scalar(1);
        c[1][0][1] = Scalar(1);
        REQUIRE_THROWS_AS(LieSuperalgebra(1, 1, {"e", "eps"}, c), Error);
    }
    // graded Jacobi violation: [e1,eps] = eps, [eps,eps] = e2 central
    {
        std::vector<std::vector<Vec>> c(3, std::vector<Vec>(3, Vec(3)));
        c[0][2][2] = Scalar(1);
        c[2][0][2] = Scalar(-1);
        c[2][2][1] = Scalar(1);
        REQUIRE_THROWS_AS(LieSuperalgebra(2, 1, {"e1", "e2", "eps"}, c), Error);
    }
    // same shape but with the weight that fixes Jacobi: [e1,eps] = eps,
    // [eps,eps] = e2, [e1,e2] = 2 e2
    {
        std::vector<std::vector<Vec>> c(3, std::vector<Vec>(3, Vec(3)));
        c[0][2][2] = Scalar(1);
        c[2][0][2] = Scalar(-1);
        c[2][2][1] = Scalar(1);
        c[0][1][1] = Scalar(2);
        c[1][0][1] = Scalar(-2);
        REQUIRE_NOTHROW(LieSuperalgebra(2, 1, {"e1", "e2", "eps"}, c));
    }
}

TEST_CASE("gl(1|1) superbracket sanity") {
    // even units E11, E22; odd units E12, E21; [E12, E21] = E11 + E22
    LieSuperalgebra g = LieSuperalgebra::gl(1, 1);
    REQUIRE(g.dim() == 4);
    REQUIRE(g.even_dim() == 2);
    std::size_t e12 = 2, e21 = 3;  // odd units follow the even ones
    REQUIRE(g.name(e12) == "E12");
    Vec br = g.basis_bracket(e12, e21);
    REQUIRE(br[0] == Scalar(1));
    REQUIRE(br[1] == Scalar(1));
    // anticommutator symmetry for odd-odd: [E21, E12] = +[E12, E21]
    REQUIRE(g.basis_bracket(e21, e12) == br);
    // odd units square to zero under the superbracket: [E12,E12] = 2 E12^2 = 0
    REQUIRE(vec_is_zero(g.basis_bracket(e12, e12)));
}

TEST_CASE("super representation validation") {
    LieSuperalgebra g = LieSuperalgebra::super11();
    REQUIRE_NOTHROW(SuperRepresentation::trivial(g));
    REQUIRE_NOTHROW(SuperRepresentation::adjoint(g));
    REQUIRE_NOTHROW(SuperRepresentation::adjoint(LieSuperalgebra::gl(1, 1)));

    // rho(eps) with a parity-preserving block is rejected
    {
        std::vector<ExactMatrix> rho(2, ExactMatrix(2, 2));
        rho[1].at(0, 0) = Scalar(1);
        REQUIRE_THROWS_AS(SuperRepresentation(g, 1, 1, rho), Error);
    }
    // block-parity fine but [eps,eps] = e incompatible: rho(e) != 2 rho(eps)^2
    {
        std::vector<ExactMatrix> rho(2, ExactMatrix(2, 2));
        rho[0].at(0, 0) = Scalar(1);
        rho[0].at(1, 1) = Scalar(1);
        rho[1].at(0, 1) = Scalar(1);
        REQUIRE_THROWS_AS(SuperRepresentation(g, 1, 1, rho), Error);
    }
    // a genuine (1|1)-dimensional module: rho(eps) = [[0,1],[0,0]], rho(e) = 0
    {
        std::vector<ExactMatrix> rho(2, ExactMatrix(2, 2));
        rho[1].at(0, 1) = Scalar(1);
        REQUIRE_NOTHROW(SuperRepresentation(g, 1, 1, rho));
    }
}

TEST_CASE("super cochain storage and graded evaluation") {
    LieSuperalgebra g = LieSuperalgebra::super11();
    SuperRepresentation triv = SuperRepresentation::trivial(g);

    SuperCochain c(triv, 2);
    c.set({0, 1}, Vec{Scalar(5)});  // (e, eps)
    c.set({1, 1}, Vec{Scalar(7)});  // (eps, eps): legitimate diagonal component
    // swapping even with odd flips the sign
    REQUIRE(c.eval({1, 0}) == Vec{Scalar(-5)});
    // odd slots are symmetric
    REQUIRE(c.eval({1, 1}) == Vec{Scalar(7)});
    // repeated even index evaluates to zero and is rejected as storage
    REQUIRE(c.eval({0, 0}) == Vec{Scalar(0)});
    REQUIRE_THROWS_AS(c.set({0, 0}, Vec{Scalar(1)}), Error);
    REQUIRE_THROWS_AS(c.set({1, 0}, Vec{Scalar(1)}), Error);

    // canonical tuple enumeration: (1|1) degree 2 has exactly (0,1) and (1,1)
    auto tuples = super_tuples(1, 1, 2);
    REQUIRE(tuples == std::vector<std::vector<int>>{{0, 1}, {1, 1}});
}

TEST_CASE("pinned coboundary value on the (1|1) superalgebra") {
    // [eps,eps] = e, trivial coefficients; the dual of e has
    // (d e*)(eps, eps) = -e*([eps,eps]) = -1.
    LieSuperalgebra g = LieSuperalgebra::super11();
    SuperRepresentation triv = SuperRepresentation::trivial(g);
    SuperCochain estar(triv, 1);
    estar.set({0}, Vec{Scalar(1)});
    SuperCochain d = super_ce_coboundary(estar);
    REQUIRE(d.eval({1, 1}) == Vec{Scalar(-1)});
    // and nothing else: (e,eps) component vanishes
    REQUIRE(d.eval({0, 1}) == Vec{Scalar(0)});
}

TEST_CASE("purely even superalgebra reduces to the classical coboundary") {
    // su(2) viewed as a (3|0) superalgebra: matrices must agree entrywise
    LieAlgebra su2 = LieAlgebra::su2();
    std::vector<std::vector<Vec>> table(3, std::vector<Vec>(3, Vec(3)));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) table[i][j] = su2.basis_bracket(i, j);
    LieSuperalgebra s(3, 0, {"e1", "e2", "e3"}, table, "su2-as-super");

    Representation ad = Representation::adjoint(su2);
    SuperRepresentation sad = SuperRepresentation::adjoint(s);
    Representation triv = Representation::trivial(su2);
    SuperRepresentation striv = SuperRepresentation::trivial(s);
    for (unsigned k = 0; k <= 2; ++k) {
        REQUIRE(super_coboundary_matrix(sad, k) == coboundary_matrix(ad, k));
        REQUIRE(super_coboundary_matrix(striv, k) == coboundary_matrix(triv, k));
    }
}

TEST_CASE("super coboundary squares to zero") {
    Rng rng(79);
    LieSuperalgebra s11 = LieSuperalgebra::super11();
    LieSuperalgebra gl11 = LieSuperalgebra::gl(1, 1);
    LieSuperalgebra ab = LieSuperalgebra::abelian(1, 2);

    std::vector<SuperRepresentation> reps;
    reps.push_back(SuperRepresentation::trivial(s11));
    reps.push_back(SuperRepresentation::adjoint(s11));
    reps.push_back(SuperRepresentation::adjoint(gl11));
    reps.push_back(SuperRepresentation::trivial(ab, 1, 1));
    {
        std::vector<ExactMatrix> rho(2, ExactMatrix(2, 2));
        rho[1].at(0, 1) = Scalar(1);
        reps.push_back(SuperRepresentation(s11, 1, 1, rho));
    }

    for (const auto& rep : reps)
        for (unsigned k = 0; k <= 2; ++k)
            for (int t = 0; t < 3; ++t) {
                SuperCochain c = oracles::random_super_cochain(rng, rep, k);
                REQUIRE(super_ce_coboundary(super_ce_coboundary(c)).is_zero());
            }

    // the (1|1) abelian case called out separately: [eps,eps] = 0 brackets
    LieSuperalgebra flat = LieSuperalgebra::abelian(1, 1);
    SuperRepresentation ftriv = SuperRepresentation::trivial(flat);
    for (unsigned k = 0; k <= 3; ++k)
        for (int t = 0; t < 3; ++t) {
            SuperCochain c = oracles::random_super_cochain(rng, ftriv, k);
            REQUIRE(super_ce_coboundary(super_ce_coboundary(c)).is_zero());
        }
}

TEST_CASE("super betti table on the abelian (1|1) superalgebra") {
    // trivial coefficients, zero brackets: every coboundary map vanishes, so
    // betti_k = dim C^k = #{canonical tuples} = 2 for k >= 1 (one even slot
    // at most, odd slots weakly increasing on one index).
    LieSuperalgebra g = LieSuperalgebra::abelian(1, 1);
    auto table = super_betti_table(SuperRepresentation::trivial(g), 3);
    REQUIRE(table[0].betti == 1);
    for (unsigned k = 1; k <= 3; ++k) REQUIRE(table[k].betti == 2);
}
