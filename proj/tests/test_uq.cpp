#include <catch2/catch_amalgamated.hpp>

#include <algcalc/uqbplus.hpp>

using namespace algcalc;

namespace {

// independent q-factorial: [m]_q! = prod_{j=1..m} (1 + q + ... + q^{j-1})
Scalar qfact(const Scalar& q, long m) {
    Scalar out = Scalar::one();
    for (long j = 1; j <= m; ++j) {
        Scalar qj;
        for (long t = 0; t < j; ++t) qj += q.pow(t);
        out = out * qj;
    }
    return out;
}

}  // namespace

TEST_CASE("uq: constructor validation") {
    REQUIRE_THROWS_AS(UqBPlus(Scalar::zero(), 4), Error);
    REQUIRE_THROWS_AS(UqBPlus(Scalar(2), 0), Error);
}

TEST_CASE("uq: normal form and defining relations") {
    UqBPlus uq(Scalar(2), 6);
    const Scalar q(2);
    // g a = q a g
    REQUIRE(uq.mul(UqBPlus::g(), UqBPlus::a()) ==
            q * uq.mul(UqBPlus::a(), UqBPlus::g()));
    // g g^{-1} = g^{-1} g = 1
    REQUIRE(uq.mul(UqBPlus::g(), UqBPlus::g(-1)) == UqBPlus::one());
    REQUIRE(uq.mul(UqBPlus::g(-1), UqBPlus::g()) == UqBPlus::one());
    // (a g^2)(a g^{-1}) = q^2 a^2 g
    UqElement lhs = uq.mul(UqElement(UqMono{1, 2}), UqElement(UqMono{1, -1}));
    REQUIRE(lhs == q.pow(2) * UqElement(UqMono{2, 1}));
    // associativity on monomials with negative powers
    UqElement x(UqMono{1, -2}), y(UqMono{2, 1}), z(UqMono{0, 3});
    REQUIRE(uq.mul(uq.mul(x, y), z) == uq.mul(x, uq.mul(y, z)));
    // powers
    REQUIRE(uq.power(UqElement(UqMono{0, 1}), 3) == UqElement(UqMono{0, 3}));
}

TEST_CASE("uq: co-operations on the generators") {
    UqBPlus uq(Scalar(2), 6);
    const Scalar q(2);
    // Delta(a) = a (x) 1 + g (x) a
    using Key = UqTensor<2>::Key;
    UqTensor<2> da = uq.delta(UqElement(UqMono{1, 0}));
    UqTensor<2> expect;
    expect.add(Key{UqMono{1, 0}, UqMono{0, 0}}, Scalar::one());
    expect.add(Key{UqMono{0, 1}, UqMono{1, 0}}, Scalar::one());
    REQUIRE(da == expect);
    // Delta is multiplicative on group-likes
    UqTensor<2> dg = uq.delta(UqElement(UqMono{0, -2}));
    UqTensor<2> gexpect;
    gexpect.add(Key{UqMono{0, -2}, UqMono{0, -2}}, Scalar::one());
    REQUIRE(dg == gexpect);
    // counit
    REQUIRE(UqBPlus::counit(UqElement(UqMono{1, 0})) == Scalar::zero());
    REQUIRE(UqBPlus::counit(UqElement(UqMono{0, 5})) == Scalar::one());
    // S(a) = -g^{-1} a = -q^{-1} a g^{-1}, S(g) = g^{-1}
    REQUIRE(uq.antipode(UqElement(UqMono{1, 0})) ==
            Scalar(-1) * q.inv() * UqElement(UqMono{1, -1}));
    REQUIRE(uq.antipode(UqElement(UqMono{0, 1})) == UqElement(UqMono{0, -1}));
    REQUIRE(uq.antipode(UqBPlus::one()) == UqBPlus::one());
    // S^2 is not the identity here: S^2(a) = q^{-1} a
    REQUIRE(uq.antipode(uq.antipode(UqBPlus::a())) == q.inv() * UqBPlus::a());
}

TEST_CASE("uq: antipode law on the generator by hand") {
    UqBPlus uq(Scalar(2), 6);
    // m (S (x) Id) Delta(a) = S(a) 1 + S(g) a = -g^{-1} a + g^{-1} a = 0 = eps(a) 1
    UqElement acc;
    UqTensor<2> da = uq.delta(UqElement(UqBPlus::a()));
    for (const auto& [key, c] : da.terms()) {
        acc = acc + c * uq.mul(uq.antipode(UqElement(key[0])), UqElement(key[1]));
    }
    REQUIRE(acc.is_zero());
}

TEST_CASE("uq: full law suite at q = 2, degree cap 6") {
    UqBPlus uq(Scalar(2), 6);
    CheckReport rep = uq.verify();
    REQUIRE(rep.context.find("6") != std::string::npos);
    for (const auto& it : rep.items) {
        INFO(it.law << " " << it.witness);
        REQUIRE(it.pass);
    }
    CheckReport prep = uq.pairing_check();
    for (const auto& it : prep.items) {
        INFO(it.law << " " << it.witness);
        REQUIRE(it.pass);
    }
}

TEST_CASE("uq: laws also hold at a fractional parameter") {
    UqBPlus uq(Scalar(1, 3), 4);
    REQUIRE(uq.verify().all_pass());
    REQUIRE(uq.pairing_check().all_pass());
}

TEST_CASE("uq: self-pairing matches the closed form") {
    const Scalar q(2);
    UqBPlus uq(q, 6);
    // <a^m g^k, a^n g^l> = [m = n] [m]_q! q^{k l}
    for (const UqMono& x : uq.monomials_up_to(4))
        for (const UqMono& y : uq.monomials_up_to(4)) {
            Scalar expect = x.m == y.m
                                ? qfact(q, x.m) * q.pow(x.k * y.k)
                                : Scalar::zero();
            INFO(x.str() << " , " << y.str());
            REQUIRE(uq.pairing(x, y) == expect);
        }
    // spot values
    REQUIRE(uq.pairing(UqMono{1, 0}, UqMono{1, 0}) == Scalar::one());
    REQUIRE(uq.pairing(UqMono{0, 1}, UqMono{0, 1}) == q);
    REQUIRE(uq.pairing(UqMono{2, 0}, UqMono{2, 0}) == Scalar::one() + q);
    REQUIRE(uq.pairing(UqMono{0, 2}, UqMono{0, 3}) == q.pow(6));
    REQUIRE(uq.pairing(UqMono{0, 1}, UqMono{0, -1}) == q.inv());
    REQUIRE(uq.pairing(UqMono{1, 0}, UqMono{0, 1}) == Scalar::zero());
}

TEST_CASE("uq: pairing Gram matrix is non-degenerate up to degree 3") {
    const Scalar q(2);
    UqBPlus uq(q, 6);
    std::vector<UqMono> basis = uq.monomials_up_to(3);
    const std::size_t n = basis.size();
    REQUIRE(n == 16);
    ExactMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            gram.at(i, j) = uq.pairing(basis[i], basis[j]);
    REQUIRE(gram.rank() == n);
}
