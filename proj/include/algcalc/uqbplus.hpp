#pragma once
// The Hopf algebra U_q(b+) on a presented, normal-form backend.  The algebra
// is generated by 1, a, g, g^{-1} subject to g g^{-1} = g^{-1} g = 1 and
// g a = q a g; every element is a finite linear combination of normal-form
// monomials a^m g^k (m >= 0, k in Z).  Co-operations on generators:
//   Delta(a) = a (x) 1 + g (x) a,   Delta(g^{+-1}) = g^{+-1} (x) g^{+-1},
//   epsilon(a) = 0,  epsilon(g^{+-1}) = 1,
//   S(a) = -g^{-1} a,  S(g) = g^{-1},  S(g^{-1}) = g,
// extended (anti)multiplicatively.  The algebra is infinite-dimensional, so
// every verification is degree-capped; reports state the cap.  The dual
// pairing of U_q(b+) with itself is specified on generators only
// (<a,a> = 1, <g,g> = q, <a,g> = <g,a> = 0); it is extended here by the
// duality between products and coproducts, and that extension is then
// checked for consistency up to the degree cap.

#include <algcalc/hopf.hpp>
#include <algcalc/scalar.hpp>

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace algcalc {

/// Normal-form monomial a^m g^k.
struct UqMono {
    long m = 0;
    long k = 0;

    auto operator<=>(const UqMono&) const = default;

    long degree() const { return m + (k < 0 ? -k : k); }

    std::string str() const {
        if (m == 0 && k == 0) return "1";
        std::string s;
        if (m == 1) s = "a";
        else if (m > 1) s = "a^" + std::to_string(m);
        if (k != 0) {
            if (!s.empty()) s += " ";
            s += (k == 1) ? "g" : "g^" + std::to_string(k);
        }
        return s;
    }
};

/// Sparse linear combination of normal-form monomials.
class UqElement {
public:
    UqElement() = default;
    explicit UqElement(const UqMono& mono, const Scalar& c = Scalar::one()) {
        add(mono, c);
    }

    void add(const UqMono& mono, const Scalar& c) {
        if (c.is_zero()) return;
        Scalar& slot = terms_[mono];
        slot += c;
        if (slot.is_zero()) terms_.erase(mono);
    }

    const std::map<UqMono, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend UqElement operator+(const UqElement& x, const UqElement& y) {
        UqElement out = x;
        for (const auto& [mono, c] : y.terms_) out.add(mono, c);
        return out;
    }
    friend UqElement operator*(const Scalar& c, const UqElement& x) {
        UqElement out;
        for (const auto& [mono, d] : x.terms_) out.add(mono, c * d);
        return out;
    }
    friend bool operator==(const UqElement& x, const UqElement& y) {
        return x.terms_ == y.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [mono, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += c.str() + "*" + mono.str();
        }
        return s;
    }

private:
    std::map<UqMono, Scalar> terms_;
};

/// Sparse element of the N-fold tensor power.
template <std::size_t N>
class UqTensor {
public:
    using Key = std::array<UqMono, N>;

    void add(const Key& key, const Scalar& c) {
        if (c.is_zero()) return;
        Scalar& slot = terms_[key];
        slot += c;
        if (slot.is_zero()) terms_.erase(key);
    }

    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const UqTensor& x, const UqTensor& y) {
        return x.terms_ == y.terms_;
    }

private:
    std::map<Key, Scalar> terms_;
};

class UqBPlus {
public:
    explicit UqBPlus(const Scalar& q, long degree_cap = 6)
        : q_(q), cap_(degree_cap) {
        if (q_.is_zero()) throw Error("uq: the parameter q must be non-zero");
        if (cap_ < 1) throw Error("uq: degree cap must be positive");
    }

    const Scalar& q() const { return q_; }
    long cap() const { return cap_; }

    static UqElement one() { return UqElement({0, 0}); }
    static UqElement a() { return UqElement({1, 0}); }
    static UqElement g(long power = 1) { return UqElement({0, power}); }

    // ------------------------------------------------------- arithmetic

    /// (a^m1 g^k1)(a^m2 g^k2) = q^{k1 m2} a^{m1+m2} g^{k1+k2}.
    std::pair<UqMono, Scalar> mono_mul(const UqMono& x, const UqMono& y) const {
        return {{x.m + y.m, x.k + y.k}, q_.pow(x.k * y.m)};
    }

    UqElement mul(const UqElement& x, const UqElement& y) const {
        UqElement out;
        for (const auto& [mx, cx] : x.terms())
            for (const auto& [my, cy] : y.terms()) {
                auto [mono, f] = mono_mul(mx, my);
                out.add(mono, cx * cy * f);
            }
        return out;
    }

    UqElement power(const UqElement& x, long e) const {
        UqElement acc = one();
        for (long i = 0; i < e; ++i) acc = mul(acc, x);
        return acc;
    }

    template <std::size_t N>
    UqTensor<N> tensor_mul(const UqTensor<N>& x, const UqTensor<N>& y) const {
        UqTensor<N> out;
        for (const auto& [kx, cx] : x.terms())
            for (const auto& [ky, cy] : y.terms()) {
                typename UqTensor<N>::Key key;
                Scalar c = cx * cy;
                for (std::size_t t = 0; t < N; ++t) {
                    auto [mono, f] = mono_mul(kx[t], ky[t]);
                    key[t] = mono;
                    c *= f;
                }
                out.add(key, c);
            }
        return out;
    }

    static UqTensor<2> outer(const UqElement& x, const UqElement& y) {
        UqTensor<2> out;
        for (const auto& [mx, cx] : x.terms())
            for (const auto& [my, cy] : y.terms()) out.add({mx, my}, cx * cy);
        return out;
    }

    // ----------------------------------------------------- co-operations

    /// Delta(a^m g^k) = (a (x) 1 + g (x) a)^m (g^k (x) g^k), memoized.
    const UqTensor<2>& delta(const UqMono& mono) const {
        auto it = delta_memo_.find(mono);
        if (it != delta_memo_.end()) return it->second;
        using Key = UqTensor<2>::Key;
        UqTensor<2> da;
        da.add(Key{UqMono{1, 0}, UqMono{0, 0}}, Scalar::one());
        da.add(Key{UqMono{0, 1}, UqMono{1, 0}}, Scalar::one());
        UqTensor<2> acc;
        acc.add(Key{UqMono{0, 0}, UqMono{0, 0}}, Scalar::one());
        for (long i = 0; i < mono.m; ++i) acc = tensor_mul(acc, da);
        UqTensor<2> gk;
        gk.add(Key{UqMono{0, mono.k}, UqMono{0, mono.k}}, Scalar::one());
        acc = tensor_mul(acc, gk);
        return delta_memo_.emplace(mono, std::move(acc)).first->second;
    }

    UqTensor<2> delta(const UqElement& x) const {
        UqTensor<2> out;
        for (const auto& [mono, c] : x.terms())
            for (const auto& [key, d] : delta(mono).terms()) out.add(key, c * d);
        return out;
    }

    static Scalar counit(const UqMono& mono) {
        return mono.m == 0 ? Scalar::one() : Scalar::zero();
    }
    static Scalar counit(const UqElement& x) {
        Scalar s;
        for (const auto& [mono, c] : x.terms()) s += c * counit(mono);
        return s;
    }

    /// S(a^m g^k) = S(g)^k S(a)^m = g^{-k} (-g^{-1} a)^m, memoized.
    const UqElement& antipode(const UqMono& mono) const {
        auto it = antipode_memo_.find(mono);
        if (it != antipode_memo_.end()) return it->second;
        UqElement sa({1, -1}, Scalar(-1) * q_.pow(-1));  // -g^{-1}a = -q^{-1}ag^{-1}
        UqElement out = mul(g(-mono.k), power(sa, mono.m));
        return antipode_memo_.emplace(mono, std::move(out)).first->second;
    }

    UqElement antipode(const UqElement& x) const {
        UqElement out;
        for (const auto& [mono, c] : x.terms()) out = out + c * antipode(mono);
        return out;
    }

    // ----------------------------------------------------------- pairing

    /// The dual pairing of U_q(b+) with itself, generated from
    /// <a,a> = 1, <g,g> = q, <a,g> = <g,a> = 0 by peeling one generator at a
    /// time off the second argument through the coproduct of the first.
    Scalar pairing(const UqMono& x, const UqMono& y) const {
        auto key = std::array<long, 4>{x.m, x.k, y.m, y.k};
        auto it = pairing_memo_.find(key);
        if (it != pairing_memo_.end()) return it->second;
        Scalar result;
        if (y.m == 0 && y.k == 0) {
            result = counit(x);
        } else {
            // y = gen * rest with gen one of a, g, g^{-1}
            int gen;  // 0 = a, 1 = g, 2 = g^{-1}
            UqMono rest;
            if (y.m > 0) {
                gen = 0;
                rest = {y.m - 1, y.k};
            } else if (y.k > 0) {
                gen = 1;
                rest = {0, y.k - 1};
            } else {
                gen = 2;
                rest = {0, y.k + 1};
            }
            // Pairings with a single generator in the second slot, obtained
            // by peeling the first argument instead: <a^m g^k, a> = [m = 1],
            // <a^m g^k, g^{+-1}> = 0 for m > 0 and q^{+-k} for m = 0.
            auto base = [&](const UqMono& w) -> Scalar {
                switch (gen) {
                    case 0: return w.m == 1 ? Scalar::one() : Scalar::zero();
                    case 1: return w.m > 0 ? Scalar::zero() : q_.pow(w.k);
                    default: return w.m > 0 ? Scalar::zero() : q_.pow(-w.k);
                }
            };
            for (const auto& [pair_key, c] : delta(x).terms()) {
                Scalar b = base(pair_key[0]);
                if (b.is_zero()) continue;
                result += c * b * pairing(pair_key[1], rest);
            }
        }
        pairing_memo_.emplace(key, result);
        return result;
    }

    Scalar pairing(const UqElement& x, const UqElement& y) const {
        Scalar s;
        for (const auto& [mx, cx] : x.terms())
            for (const auto& [my, cy] : y.terms()) s += cx * cy * pairing(mx, my);
        return s;
    }

    // ----------------------------------------------------- verification

    std::vector<UqMono> monomials_up_to(long cap) const {
        std::vector<UqMono> out;
        for (long m = 0; m <= cap; ++m)
            for (long k = -(cap - m); k <= cap - m; ++k) out.push_back({m, k});
        return out;
    }

    /// Check the defining relations and every Hopf-algebra law on all
    /// normal-form monomials (and pairs) within the degree cap.
    CheckReport verify() const {
        CheckReport rep;
        rep.context = "degree cap " + std::to_string(cap_);
        const std::vector<UqMono> monos = monomials_up_to(cap_);

        {
            bool ok = mul(g(), a()) == q_ * mul(a(), g());
            rep.add("relation g a = q a g", ok);
        }
        {
            bool ok = mul(g(), g(-1)) == one() && mul(g(-1), g()) == one();
            rep.add("relation g g^{-1} = g^{-1} g = 1", ok);
        }
        {
            // Delta(a) = a (x) 1 + g (x) a
            UqTensor<2> expected;
            expected.add({UqMono{1, 0}, UqMono{0, 0}}, Scalar::one());
            expected.add({UqMono{0, 1}, UqMono{1, 0}}, Scalar::one());
            rep.add("coproduct of the generator a", delta(UqMono{1, 0}) == expected);
        }
        {
            bool ok = true;
            std::string wit;
            for (const auto& x : monos) {
                UqTensor<3> lhs, rhs;
                for (const auto& [key, c] : delta(x).terms()) {
                    for (const auto& [k2, c2] : delta(key[0]).terms())
                        lhs.add({k2[0], k2[1], key[1]}, c * c2);
                    for (const auto& [k2, c2] : delta(key[1]).terms())
                        rhs.add({key[0], k2[0], k2[1]}, c * c2);
                }
                if (!(lhs == rhs)) {
                    ok = false;
                    wit = "at " + x.str();
                    break;
                }
            }
            rep.add("coassociativity", ok, wit);
        }
        {
            bool ok = true;
            std::string wit;
            for (const auto& x : monos) {
                UqElement left, right, target(x);
                for (const auto& [key, c] : delta(x).terms()) {
                    left = left + (c * counit(key[0])) * UqElement(key[1]);
                    right = right + (c * counit(key[1])) * UqElement(key[0]);
                }
                if (!(left == target && right == target)) {
                    ok = false;
                    wit = "at " + x.str();
                    break;
                }
            }
            rep.add("counit law", ok, wit);
        }
        {
            bool ok = true;
            std::string wit;
            for (const auto& x : monos) {
                UqElement left, right;
                for (const auto& [key, c] : delta(x).terms()) {
                    left = left + c * mul(antipode(key[0]), UqElement(key[1]));
                    right = right + c * mul(UqElement(key[0]), antipode(key[1]));
                }
                UqElement target = counit(x) * one();
                if (!(left == target && right == target)) {
                    ok = false;
                    wit = "at " + x.str();
                    break;
                }
            }
            rep.add("antipode law", ok, wit);
        }
        {
            bool ok = true;
            std::string wit;
            for (const auto& x : monos) {
                UqTensor<2> lhs = delta(antipode(x));
                UqTensor<2> rhs;
                for (const auto& [key, c] : delta(x).terms()) {
                    UqTensor<2> flip = outer(antipode(key[1]), antipode(key[0]));
                    for (const auto& [k2, c2] : flip.terms()) rhs.add(k2, c * c2);
                }
                if (!(lhs == rhs)) {
                    ok = false;
                    wit = "at " + x.str();
                    break;
                }
            }
            rep.add("comultiplication compatible with antipode", ok, wit);
        }
        {
            bool ok = true;
            std::string wit;
            for (const auto& x : monos) {
                if (!ok) break;
                for (const auto& y : monos) {
                    if (x.degree() + y.degree() > cap_) continue;
                    UqElement xy = mul(UqElement(x), UqElement(y));
                    if (!(delta(xy) == tensor_mul(delta(x), delta(y)))) {
                        ok = false;
                        wit = "at (" + x.str() + ", " + y.str() + ")";
                        break;
                    }
                    if (counit(xy) != counit(x) * counit(y)) {
                        ok = false;
                        wit = "counit at (" + x.str() + ", " + y.str() + ")";
                        break;
                    }
                    if (!(antipode(xy) == mul(antipode(y), antipode(x)))) {
                        ok = false;
                        wit = "antipode at (" + x.str() + ", " + y.str() + ")";
                        break;
                    }
                }
            }
            rep.add("co-operations respect products", ok, wit);
        }
        return rep;
    }

    /// Check the dual-pairing laws up to the degree cap: product/coproduct
    /// duality in both slots, counit and antipode compatibility, and the
    /// generator table.
    CheckReport pairing_check() const {
        CheckReport rep;
        rep.context = "degree cap " + std::to_string(cap_);
        const std::vector<UqMono> monos = monomials_up_to(cap_);

        {
            bool ok = pairing({1, 0}, {1, 0}) == Scalar::one() &&
                      pairing({0, 1}, {0, 1}) == q_ &&
                      pairing({1, 0}, {0, 1}).is_zero() &&
                      pairing({0, 1}, {1, 0}).is_zero();
            rep.add("generator pairing table", ok);
        }
        {
            bool ok = true;
            std::string wit;
            for (const auto& x : monos) {
                if (pairing(UqElement(x), one()) != counit(x) ||
                    pairing(one(), UqElement(x)) != counit(x)) {
                    ok = false;
                    wit = "at " + x.str();
                    break;
                }
            }
            rep.add("pairing compatible with counits", ok, wit);
        }
        {
            bool ok = true;
            std::string wit;
            for (const auto& x : monos) {
                if (!ok) break;
                for (const auto& y : monos) {
                    if (x.degree() + y.degree() > cap_) continue;
                    for (const auto& z : monos) {
                        Scalar lhs = pairing(UqElement(z), mul(UqElement(x), UqElement(y)));
                        Scalar rhs;
                        for (const auto& [key, c] : delta(z).terms())
                            rhs += c * pairing(key[0], x) * pairing(key[1], y);
                        if (lhs != rhs) {
                            ok = false;
                            wit = "at <" + z.str() + ", " + x.str() + " * " +
                                  y.str() + ">";
                            break;
                        }
                    }
                    if (!ok) break;
                }
            }
            rep.add("pairing respects right products", ok, wit);
        }
        {
            bool ok = true;
            std::string wit;
            for (const auto& x : monos) {
                if (!ok) break;
                for (const auto& y : monos) {
                    if (x.degree() + y.degree() > cap_) continue;
                    for (const auto& z : monos) {
                        Scalar lhs = pairing(mul(UqElement(x), UqElement(y)), UqElement(z));
                        Scalar rhs;
                        for (const auto& [key, c] : delta(z).terms())
                            rhs += c * pairing(x, key[0]) * pairing(y, key[1]);
                        if (lhs != rhs) {
                            ok = false;
                            wit = "at <" + x.str() + " * " + y.str() + ", " +
                                  z.str() + ">";
                            break;
                        }
                    }
                    if (!ok) break;
                }
            }
            rep.add("pairing respects left products", ok, wit);
        }
        {
            bool ok = true;
            std::string wit;
            for (const auto& x : monos) {
                if (!ok) break;
                for (const auto& y : monos) {
                    if (pairing(antipode(x), UqElement(y)) !=
                        pairing(UqElement(x), antipode(y))) {
                        ok = false;
                        wit = "at <S(" + x.str() + "), " + y.str() + ">";
                        break;
                    }
                }
            }
            rep.add("pairing compatible with antipodes", ok, wit);
        }
        return rep;
    }

private:
    Scalar q_;
    long cap_;
    mutable std::map<UqMono, UqTensor<2>> delta_memo_;
    mutable std::map<UqMono, UqElement> antipode_memo_;
    mutable std::map<std::array<long, 4>, Scalar> pairing_memo_;
};

}  // namespace algcalc
