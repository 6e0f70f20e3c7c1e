#pragma once

#include <cstdint>
#include <random>

#include "matrix.hpp"

namespace algcalc {

/// Deterministic source of small exact scalars for property tests and
/// randomized report sections. Same seed, same stream, on every platform
/// (std::mt19937_64 is fully specified by the standard).
class Rng {
public:
    static constexpr std::uint64_t kDefaultSeed = 12345;

    explicit Rng(std::uint64_t seed = kDefaultSeed) : gen_(seed), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen_);
    }

    Rational rational(long max_num = 3, long max_den = 3) {
        long n = integer(-max_num, max_num);
        long d = integer(1, max_den);
        return Rational(n, d);
    }

    /// Gaussian rational with small components; about half are real.
    Scalar scalar(long max_num = 3, long max_den = 3) {
        Rational re = rational(max_num, max_den);
        if (integer(0, 1) == 0) return Scalar(re);
        return Scalar(re, rational(max_num, max_den));
    }

    Vec vec(std::size_t n, long max_num = 3, long max_den = 3) {
        Vec v(n);
        for (auto& x : v) x = scalar(max_num, max_den);
        return v;
    }

private:
    std::mt19937_64 gen_;
    std::uint64_t seed_;
};

}  // namespace algcalc
