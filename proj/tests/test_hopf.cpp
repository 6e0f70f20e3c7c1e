#include <catch2/catch_amalgamated.hpp>

#include <algcalc/hopf.hpp>
#include <algcalc/rng.hpp>

#include "oracles.hpp"

using namespace algcalc;

namespace {

Scalar ev(const Vec& f, const Vec& a) {
    Scalar s;
    for (std::size_t i = 0; i < a.size(); ++i) s += f[i] * a[i];
    return s;
}

void require_all_pass(const CheckReport& rep) {
    for (const auto& it : rep.items) {
        INFO(it.law << " " << it.witness);
        REQUIRE(it.pass);
    }
}

}  // namespace

TEST_CASE("group: construction and validation") {
    Group z4 = Group::cyclic(4);
    REQUIRE(z4.size() == 4);
    REQUIRE(z4.inverse[1] == 3);
    REQUIRE(z4.inverse[2] == 2);
    Group s3 = Group::symmetric(3);
    REQUIRE(s3.size() == 6);
    // S3 is not abelian
    bool abelian = true;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            if (s3.table[i][j] != s3.table[j][i]) abelian = false;
    REQUIRE_FALSE(abelian);
    // every element composed with its inverse gives the identity
    for (std::size_t i = 0; i < 6; ++i) REQUIRE(s3.table[i][s3.inverse[i]] == 0);
    // identity must sit at index 0
    std::vector<std::vector<std::size_t>> bad{{1, 0}, {0, 1}};
    REQUIRE_THROWS_AS(Group(bad, {"x", "y"}), Error);
}

TEST_CASE("hopf: all laws pass on group and function Hopf algebras") {
    std::vector<HopfAlgebra> instances;
    instances.push_back(HopfAlgebra::group_hopf(Group::cyclic(2), "CZ2"));
    instances.push_back(HopfAlgebra::group_hopf(Group::cyclic(3), "CZ3"));
    instances.push_back(HopfAlgebra::group_hopf(Group::cyclic(4), "CZ4"));
    instances.push_back(HopfAlgebra::group_hopf(Group::symmetric(3), "CS3"));
    instances.push_back(HopfAlgebra::function_hopf(Group::cyclic(2), "C(Z2)"));
    instances.push_back(HopfAlgebra::function_hopf(Group::cyclic(3), "C(Z3)"));
    instances.push_back(HopfAlgebra::function_hopf(Group::symmetric(3), "C(S3)"));
    for (const auto& h : instances) {
        CheckReport rep = verify_hopf(h);
        REQUIRE(rep.items.size() == 10);
        require_all_pass(rep);
    }
}

TEST_CASE("hopf: antipode of the order-two generator is itself") {
    HopfAlgebra h = HopfAlgebra::group_hopf(Group::cyclic(2), "CZ2");
    REQUIRE(h.antipode_of(h.algebra().basis_element(1)) ==
            h.algebra().basis_element(1));
}

TEST_CASE("hopf: cocommutativity and S^2 = Id") {
    HopfAlgebra cz3 = HopfAlgebra::group_hopf(Group::cyclic(3), "CZ3");
    HopfAlgebra cs3 = HopfAlgebra::group_hopf(Group::symmetric(3), "CS3");
    HopfAlgebra fz3 = HopfAlgebra::function_hopf(Group::cyclic(3), "C(Z3)");
    HopfAlgebra fs3 = HopfAlgebra::function_hopf(Group::symmetric(3), "C(S3)");
    REQUIRE(cz3.cocommutative());
    REQUIRE(cs3.cocommutative());
    REQUIRE(fz3.cocommutative());   // abelian group: function algebra cocommutative
    REQUIRE_FALSE(fs3.cocommutative());
    REQUIRE(fs3.algebra().is_commutative());  // but the algebra is commutative
    // commutative or cocommutative implies S^2 = Id
    for (const auto* h : {&cz3, &cs3, &fz3, &fs3}) {
        ExactMatrix s2 = h->antipode() * h->antipode();
        REQUIRE(s2 == ExactMatrix::identity(h->dim()));
    }
}

TEST_CASE("hopf: corrupted comultiplication fails coassociativity with witness") {
    Group z3 = Group::cyclic(3);
    HopfAlgebra good = HopfAlgebra::function_hopf(z3, "C(Z3)");
    ExactMatrix delta = good.delta();
    // drop the d2 (x) d1 term of Delta(d0)
    REQUIRE(delta.at(2 * 3 + 1, 0) == Scalar::one());
    delta.at(2 * 3 + 1, 0) = Scalar::zero();
    HopfAlgebra bad(good.algebra(), delta, good.counit(), good.antipode());
    CheckReport rep = verify_hopf(bad);
    REQUIRE_FALSE(rep.all_pass());
    const CheckReport::Item* co = rep.find("coassociativity");
    REQUIRE(co != nullptr);
    REQUIRE_FALSE(co->pass);
    REQUIRE(co->witness == "at basis element d_g0");
}

TEST_CASE("hopf: function Hopf comultiplication is the group law, bit-exact") {
    for (const Group& grp : {Group::cyclic(4), Group::symmetric(3)}) {
        HopfAlgebra h = HopfAlgebra::function_hopf(grp, "C(G)");
        const std::size_t n = grp.size();
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    Scalar expect = grp.table[a][b] == g ? Scalar::one()
                                                         : Scalar::zero();
                    REQUIRE(h.delta().at(a * n + b, g) == expect);
                }
    }
}

TEST_CASE("hopf: convolution algebra on forms") {
    Rng rng(7);
    HopfAlgebra h = HopfAlgebra::group_hopf(Group::cyclic(3), "CZ3");
    const Vec eps = h.counit();
    for (int t = 0; t < 10; ++t) {
        Vec f = rng.vec(3), g = rng.vec(3), k = rng.vec(3);
        // the counit is the convolution unit
        REQUIRE(convolution(h, eps, f) == f);
        REQUIRE(convolution(h, f, eps) == f);
        // associativity
        REQUIRE(convolution(h, convolution(h, f, g), k) ==
                convolution(h, f, convolution(h, g, k)));
        // (f * g)(a) = g(a * f) = f(g * a)
        Vec a = rng.vec(3);
        Scalar direct = ev(convolution(h, f, g), a);
        REQUIRE(direct == ev(g, element_star_form(h, a, f)));
        REQUIRE(direct == ev(f, form_star_element(h, g, a)));
    }
}

TEST_CASE("hopf: the antipode is the convolution inverse of the identity") {
    // m (S (x) Id) Delta = eta . epsilon holds in End(A) under convolution;
    // on a group Hopf algebra this is g^{-1} g = 1 on the basis.
    HopfAlgebra h = HopfAlgebra::group_hopf(Group::symmetric(3), "CS3");
    const FDAlgebra& alg = h.algebra();
    for (std::size_t g = 0; g < 6; ++g) {
        Vec prod = alg.mul(h.antipode().col(g), alg.basis_element(g));
        REQUIRE(prod == alg.unit());
    }
}

TEST_CASE("hopf: adjoint action of a group Hopf algebra is conjugation") {
    Group s3 = Group::symmetric(3);
    HopfAlgebra h = HopfAlgebra::group_hopf(s3, "CS3");
    const FDAlgebra& alg = h.algebra();
    for (std::size_t g = 0; g < 6; ++g)
        for (std::size_t x = 0; x < 6; ++x) {
            std::size_t conj = s3.table[s3.table[g][x]][s3.inverse[g]];
            REQUIRE(adjoint_left(h, alg.basis_element(g), alg.basis_element(x)) ==
                    alg.basis_element(conj));
            std::size_t rconj = s3.table[s3.table[s3.inverse[g]][x]][g];
            REQUIRE(adjoint_right(h, alg.basis_element(x), alg.basis_element(g)) ==
                    alg.basis_element(rconj));
        }
    // the unit acts as the identity
    Rng rng(11);
    Vec y = rng.vec(6);
    REQUIRE(adjoint_left(h, alg.unit(), y) == y);
}

TEST_CASE("hopf: adjoint action respects products and the unit") {
    HopfAlgebra h = HopfAlgebra::group_hopf(Group::symmetric(3), "CS3");
    const FDAlgebra& alg = h.algebra();
    const std::size_t n = 6;
    for (std::size_t g = 0; g < n; ++g) {
        // h |> 1 = eps(h) 1
        REQUIRE(adjoint_left(h, alg.basis_element(g), alg.unit()) ==
                vec_scale(h.counit()[g], alg.unit()));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                Vec lhs = adjoint_left(h, alg.basis_element(g),
                                       alg.basis_product(a, b));
                // sum over Delta(g) of (g1 |> a)(g2 |> b)
                Vec rhs(n);
                const Vec dg = h.delta().col(g);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t k = 0; k < n; ++k) {
                        const Scalar& c = dg[i * n + k];
                        if (c.is_zero()) continue;
                        Vec left = adjoint_left(h, alg.basis_element(i),
                                                alg.basis_element(a));
                        Vec right = adjoint_left(h, alg.basis_element(k),
                                                 alg.basis_element(b));
                        rhs = vec_add(rhs, vec_scale(c, alg.mul(left, right)));
                    }
                REQUIRE(lhs == rhs);
            }
    }
}

TEST_CASE("hopf: adjoint action of a function Hopf algebra is trivial") {
    HopfAlgebra h = HopfAlgebra::function_hopf(Group::symmetric(3), "C(S3)");
    const FDAlgebra& alg = h.algebra();
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            Vec expect = vec_scale(h.counit()[a], alg.basis_element(b));
            REQUIRE(adjoint_left(h, alg.basis_element(a), alg.basis_element(b)) ==
                    expect);
            REQUIRE(adjoint_right(h, alg.basis_element(b), alg.basis_element(a)) ==
                    expect);
        }
}

TEST_CASE("hopf: evaluation pairing is a non-degenerate dual pairing") {
    // <g, f> = f(g): the pairing matrix in the indicator bases is the identity
    for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
        Group grp = n == 2 ? Group::cyclic(2) : Group::symmetric(3);
        HopfAlgebra cg = HopfAlgebra::group_hopf(grp, "CG");
        HopfAlgebra fg = HopfAlgebra::function_hopf(grp, "C(G)");
        ExactMatrix pm = ExactMatrix::identity(grp.size());
        CheckReport rep = dual_pairing_check(cg, fg, pm);
        REQUIRE(rep.items.size() == 5);
        require_all_pass(rep);
    }
}

TEST_CASE("hopf: zeroed pairing entry is reported as degenerate") {
    Group z2 = Group::cyclic(2);
    HopfAlgebra cg = HopfAlgebra::group_hopf(z2, "CZ2");
    HopfAlgebra fg = HopfAlgebra::function_hopf(z2, "C(Z2)");
    ExactMatrix pm = ExactMatrix::identity(2);
    pm.at(1, 1) = Scalar::zero();
    CheckReport rep = dual_pairing_check(cg, fg, pm);
    REQUIRE_FALSE(rep.all_pass());
    const CheckReport::Item* nd = rep.find("non-degeneracy");
    REQUIRE(nd != nullptr);
    REQUIRE_FALSE(nd->pass);
}

TEST_CASE("hopf: identity R-matrix is quasi-triangular on cocommutative algebras") {
    for (const auto& h :
         {HopfAlgebra::group_hopf(Group::cyclic(3), "CZ3"),
          HopfAlgebra::group_hopf(Group::symmetric(3), "CS3"),
          HopfAlgebra::function_hopf(Group::cyclic(3), "C(Z3)")}) {
        RMatrix r = RMatrix::identity(h);
        CheckReport rep = qybe_check(h, r);
        REQUIRE(rep.items.size() == 4);
        require_all_pass(rep);
    }
}

TEST_CASE("hopf: identity R-matrix on C(S3) passes QYBE but not intertwining") {
    HopfAlgebra h = HopfAlgebra::function_hopf(Group::symmetric(3), "C(S3)");
    CheckReport rep = qybe_check(h, RMatrix::identity(h));
    REQUIRE(rep.find("quantum Yang-Baxter equation")->pass);
    REQUIRE(rep.find("coproduct in the first slot")->pass);
    REQUIRE(rep.find("coproduct in the second slot")->pass);
    const CheckReport::Item* tw = rep.find("coproduct intertwined with its opposite");
    REQUIRE(tw != nullptr);
    REQUIRE_FALSE(tw->pass);
    REQUIRE_FALSE(tw->witness.empty());
}

TEST_CASE("hopf: non-invertible R-matrix is rejected at construction") {
    HopfAlgebra h = HopfAlgebra::function_hopf(Group::cyclic(2), "C(Z2)");
    // d0 (x) d0 is a zero divisor in C(Z2) (x) C(Z2)
    Vec r = tensor_product(h.algebra().basis_element(0),
                           h.algebra().basis_element(0));
    REQUIRE_THROWS_AS(RMatrix(h, r), Error);
}

TEST_CASE("hopf: scaled identity R-matrix has a solved two-sided inverse") {
    HopfAlgebra h = HopfAlgebra::group_hopf(Group::cyclic(2), "CZ2");
    Vec r = tensor_product(h.algebra().unit(), h.algebra().unit());
    for (auto& c : r) c = Scalar(2) * c;
    RMatrix rm(h, r);
    REQUIRE(rm.inverse() ==
            vec_scale(Scalar(1, 2),
                      tensor_product(h.algebra().unit(), h.algebra().unit())));
    CheckReport rep = qybe_check(h, rm);
    // QYBE holds (both sides are 8 * unit), the coproduct laws fail by scale
    REQUIRE(rep.find("quantum Yang-Baxter equation")->pass);
    REQUIRE_FALSE(rep.find("coproduct in the first slot")->pass);
    REQUIRE_FALSE(rep.find("coproduct in the second slot")->pass);
}
