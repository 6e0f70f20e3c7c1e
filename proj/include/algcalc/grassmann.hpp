#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace algcalc {

/// Element of the Grassmann algebra on generators c1..cN over Q(i), stored as
/// a map from index subsets (bitmask, bit i-1 <-> generator ci) to nonzero
/// coefficients. N is capped because the term count grows as 2^N.
class GrassmannElement {
public:
    static constexpr std::size_t kMaxRank = 12;

    explicit GrassmannElement(std::size_t rank) : rank_(rank) {
        if (rank > kMaxRank)
            throw Error("grassmann: rank " + std::to_string(rank) + " exceeds cap " +
                        std::to_string(kMaxRank));
    }

    static GrassmannElement scalar(std::size_t rank, const Scalar& c) {
        GrassmannElement g(rank);
        g.set_mask(0, c);
        return g;
    }

    /// The generator c_i, 1-based.
    static GrassmannElement generator(std::size_t rank, std::size_t i) {
        if (i < 1 || i > rank) throw Error("grassmann: generator index out of range");
        GrassmannElement g(rank);
        g.set_mask(std::uint32_t{1} << (i - 1), Scalar::one());
        return g;
    }

    std::size_t rank() const { return rank_; }
    const std::map<std::uint32_t, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of the monomial with 1-based, strictly increasing indices.
    const Scalar& coeff(const std::vector<int>& subset) const {
        static const Scalar kZero{};
        auto it = terms_.find(mask_of(subset));
        return it == terms_.end() ? kZero : it->second;
    }

    void set_coeff(const std::vector<int>& subset, const Scalar& c) {
        set_mask(mask_of(subset), c);
    }

    static std::vector<int> subset_of(std::uint32_t mask) {
        std::vector<int> s;
        for (int b = 0; mask >> b; ++b)
            if ((mask >> b) & 1u) s.push_back(b + 1);
        return s;
    }

    /// -1 for inhomogeneous, otherwise the common degree parity of all terms.
    int parity() const {
        int p = -1;
        for (const auto& [m, c] : terms_) {
            int tp = std::popcount(m) & 1;
            if (p == -1)
                p = tp;
            else if (p != tp)
                return -1;
        }
        return p == -1 ? 0 : p;  // zero counts as even
    }
    bool is_homogeneous() const {
        return parity() != -1 || terms_.empty();
    }

    GrassmannElement even_part() const { return parity_part(0); }
    GrassmannElement odd_part() const { return parity_part(1); }

    /// Scalar part (coefficient of the empty monomial).
    Scalar body() const {
        auto it = terms_.find(0);
        return it == terms_.end() ? Scalar{} : it->second;
    }
    /// Nilpotent part: everything except the empty monomial.
    GrassmannElement soul() const {
        GrassmannElement g(rank_);
        for (const auto& [m, c] : terms_)
            if (m != 0) g.terms_[m] = c;
        return g;
    }

    /// One-norm sum |coefficients|; defined for real coefficients only.
    Rational norm1() const {
        Rational n(0);
        for (const auto& [m, c] : terms_) {
            if (!c.is_real()) throw Error("grassmann: norm requires real coefficients");
            n += c.re.abs();
        }
        return n;
    }

    friend GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b) {
        if (a.rank_ != b.rank_) throw Error("grassmann: rank mismatch");
        GrassmannElement r = a;
        for (const auto& [m, c] : b.terms_) r.set_mask(m, r.get_mask(m) + c);
        return r;
    }
    friend GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b) {
        if (a.rank_ != b.rank_) throw Error("grassmann: rank mismatch");
        GrassmannElement r = a;
        for (const auto& [m, c] : b.terms_) r.set_mask(m, r.get_mask(m) - c);
        return r;
    }
    friend GrassmannElement operator*(const Scalar& c, const GrassmannElement& a) {
        GrassmannElement r(a.rank_);
        if (c.is_zero()) return r;
        for (const auto& [m, v] : a.terms_) r.terms_[m] = c * v;
        return r;
    }
    GrassmannElement operator-() const { return Scalar(-1) * *this; }

    /// Signed exterior product: (I)(J) = 0 when I and J intersect, otherwise
    /// the sign is the parity of #{(i,j) : i in I, j in J, i > j}.
    friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
        if (a.rank_ != b.rank_) throw Error("grassmann: rank mismatch");
        GrassmannElement r(a.rank_);
        for (const auto& [m1, c1] : a.terms_)
            for (const auto& [m2, c2] : b.terms_) {
                if (m1 & m2) continue;
                int inversions = 0;
                for (std::uint32_t rest = m2; rest;) {
                    const int bbit = std::countr_zero(rest);
                    rest &= rest - 1;
                    inversions += std::popcount(m1 >> (bbit + 1));
                }
                Scalar contrib = c1 * c2;
                if (inversions & 1) contrib = -contrib;
                r.set_mask(m1 | m2, r.get_mask(m1 | m2) + contrib);
            }
        return r;
    }

    friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const GrassmannElement& a, const GrassmannElement& b) {
        return !(a == b);
    }

    /// Display form like "3/1 + 2/1*c1c3"; "0" for zero.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += c.str();
            if (m != 0) {
                out += "*";
                for (int i : subset_of(m)) out += "c" + std::to_string(i);
            }
        }
        return out;
    }

private:
    GrassmannElement parity_part(int p) const {
        GrassmannElement g(rank_);
        for (const auto& [m, c] : terms_)
            if ((std::popcount(m) & 1) == p) g.terms_[m] = c;
        return g;
    }

    std::uint32_t mask_of(const std::vector<int>& subset) const {
        std::uint32_t m = 0;
        int prev = 0;
        for (int i : subset) {
            if (i < 1 || static_cast<std::size_t>(i) > rank_ || i <= prev)
                throw Error("grassmann: subset must be strictly increasing in 1..rank");
            m |= std::uint32_t{1} << (i - 1);
            prev = i;
        }
        return m;
    }

    Scalar get_mask(std::uint32_t m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar{} : it->second;
    }
    void set_mask(std::uint32_t m, const Scalar& c) {
        if (c.is_zero())
            terms_.erase(m);
        else
            terms_[m] = c;
    }

    std::size_t rank_;
    std::map<std::uint32_t, Scalar> terms_;
};

/// body(a) as the ring morphism it is; returns (body, soul) with
/// a = body*1 + soul.
inline std::pair<Scalar, GrassmannElement> body_soul(const GrassmannElement& a) {
    return {a.body(), a.soul()};
}

}  // namespace algcalc
