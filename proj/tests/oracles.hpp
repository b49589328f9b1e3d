#pragma once

// Reference checks written independently of the library code paths they test.

#include "pdakit/pda.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracles {

/// Definition check by exhaustive enumeration of all ordered cell pairs.
inline bool brute_force_is_pda(const pdakit::PdaArray& p) {
    const std::size_t f = p.rows();
    const std::size_t k = p.cols();
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t stars = 0;
        for (std::size_t r = 0; r < f; ++r) stars += p.at(r, c).is_star();
        if (stars != p.claimed_z()) return false;
    }
    for (std::uint64_t s = 0; s < p.claimed_s(); ++s) {
        bool seen = false;
        for (std::size_t r = 0; r < f && !seen; ++r) {
            for (std::size_t c = 0; c < k && !seen; ++c) {
                seen = p.at(r, c).is_symbol() && p.at(r, c).value() == s;
            }
        }
        if (!seen) return false;
    }
    for (std::size_t j1 = 0; j1 < f; ++j1) {
        for (std::size_t k1 = 0; k1 < k; ++k1) {
            for (std::size_t j2 = 0; j2 < f; ++j2) {
                for (std::size_t k2 = 0; k2 < k; ++k2) {
                    if (j1 == j2 && k1 == k2) continue;
                    const auto a = p.at(j1, k1);
                    const auto b = p.at(j2, k2);
                    if (a.is_star() || b.is_star() || a.value() != b.value()) continue;
                    if (j1 == j2 || k1 == k2) return false;
                    if (!p.at(j1, k2).is_star() || !p.at(j2, k1).is_star()) return false;
                }
            }
        }
    }
    return true;
}

/// True iff the pair of cells violates the repeated-symbol condition.
inline bool violates_c3(const pdakit::PdaArray& p, pdakit::Cell a, pdakit::Cell b) {
    const auto x = p.at(a.row, a.col);
    const auto y = p.at(b.row, b.col);
    if (x.is_star() || y.is_star() || x.value() != y.value()) return false;
    if (a.row == b.row || a.col == b.col) return true;
    return !p.at(a.row, b.col).is_star() || !p.at(b.row, a.col).is_star();
}

/// Pascal's triangle, independent of the closed-form binomial.
inline std::vector<std::vector<std::uint64_t>> pascal(std::size_t n) {
    std::vector<std::vector<std::uint64_t>> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        c[i].assign(i + 1, 1);
        for (std::size_t j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return c;
}

/// Random F x K array with the given claims; stars with probability `star_p`.
inline pdakit::PdaArray random_array(std::mt19937_64& rng, std::size_t f, std::size_t k,
                                     std::size_t s, double star_p, std::size_t z) {
    std::bernoulli_distribution star(star_p);
    std::uniform_int_distribution<std::uint64_t> sym(0, s == 0 ? 0 : s - 1);
    pdakit::Grid<pdakit::Entry> g(f, k);
    for (std::size_t j = 0; j < f; ++j) {
        for (std::size_t c = 0; c < k; ++c) {
            g(j, c) = (s == 0 || star(rng)) ? pdakit::Entry::star() : pdakit::Entry::symbol(sym(rng));
        }
    }
    return pdakit::PdaArray(std::move(g), z, s);
}

}  // namespace oracles
