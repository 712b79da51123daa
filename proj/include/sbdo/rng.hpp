#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sbdo/scalar.hpp"

namespace sbdo {

// Seeded deterministic sampler. All draws go through raw engine output with
// explicit reduction so runs are reproducible independent of the standard
// library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform integer in [lo, hi] inclusive.
    long int_in(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    // Small nonzero rational with numerator in [-max_num, max_num] and
    // denominator in [1, max_den].
    Scalar rational(long max_num = 5, long max_den = 4, bool allow_zero = true) {
        long num = int_in(-max_num, max_num);
        if (!allow_zero && num == 0) num = 1;
        long den = int_in(1, max_den);
        return Scalar::ratio(num, den);
    }

    // Strictly positive rational in (0, max_num].
    Scalar positive_rational(long max_num = 5, long max_den = 4) {
        long num = int_in(1, max_num);
        long den = int_in(1, max_den);
        return Scalar::ratio(num, den);
    }

    std::vector<Scalar> rational_vector(std::size_t n, long max_num = 5, long max_den = 4) {
        std::vector<Scalar> v(n);
        for (auto& x : v) x = rational(max_num, max_den);
        return v;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace sbdo
