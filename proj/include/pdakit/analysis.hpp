#pragma once

#include "pdakit/constructions.hpp"
#include "pdakit/numeric.hpp"
#include "pdakit/scheme.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace pdakit {

/// Binary entropy -l log2 l - (1-l) log2 (1-l) for 0 < l < 1.
double entropy(const Rational& lambda);
double entropy(double lambda);

/// Extended MN scheme on K1 + K2 users versus the plain MN scheme at the same M/N = t/K1.
struct MnComparison {
    std::uint64_t k1 = 0;
    std::uint64_t k2 = 0;
    std::uint64_t t = 0;
    std::uint64_t h1 = 0;
    std::uint64_t h2 = 0;
    /// Cache level of the baseline: t (K1+K2) / K1.
    std::uint64_t mn_t = 0;

    Rational memory_ratio;
    BigInt packets;
    Rational rate;
    BigInt mn_packets;
    Rational mn_rate;

    Rational packet_ratio;
    Rational rate_ratio;
    /// (1 + h2/h1)(1 - h2/((1+t)(h1+h2)))
    Rational rate_ratio_closed_form;
    /// h1 * 2^(-K2 H(t/K1))
    double packet_ratio_approx = 0.0;
};

/// Requires 1 <= t < K1, 1 <= K2 <= K1 and K1 | (K1+K2) t.
MnComparison mn_ratio(std::uint64_t k1, std::uint64_t k2, std::uint64_t t);

/// Convex combination: M/N and R weighted by lambda, packet counts summed.
/// Weights must lie in (0,1] and sum to one; points must be sorted by M/N.
SchemePoint memory_share(std::span<const SchemePoint> points, std::span<const Rational> lambdas);

/// MN points for t = 0..K, including the empty- and full-cache endpoints.
std::vector<SchemePoint> base_points_mn(std::uint64_t k);

/// (q, z, m) family points for every (q, z, m) with (m+1) q = K, q >= 2, m >= 1, 1 <= z < q,
/// stably sorted by M/N.
std::vector<SchemePoint> base_points_lemma2(std::uint64_t k);

/// (q, z, m) family points for fixed (q, m) and z = 1..q-1.
std::vector<SchemePoint> lemma2_family(std::uint64_t q, std::uint64_t m);

/// One member of the memory-sharing candidate set: a single point or a pair.
struct ShareChoice {
    SchemePoint point;
    /// Positions in the input list; one entry for an exact match, two for a pair.
    std::vector<std::size_t> indices;
    std::vector<Rational> lambdas;
};

/// Every single point at exactly `memory_ratio` and every pair (i < j) whose
/// M/N values strictly straddle it, with the unique weights reaching it.
std::vector<ShareChoice> enumerate_shares(std::span<const SchemePoint> points,
                                          const Rational& memory_ratio);

/// The candidate minimizing |R - target_rate|, then F, then the index list.
/// Throws PreconditionError when no candidate exists.
ShareChoice best_share(std::span<const SchemePoint> points, const Rational& memory_ratio,
                       const Rational& target_rate);

/// Checks that the extended (q, 1, m) family scheme on K = nq users, K1 = (m+1) q,
/// reproduces the cyclic-code schemes at M/N = 1/q and, after the dual
/// transform, at M/N = 1 - (m+1)/(nq).
struct TangReport {
    std::uint64_t n = 0;
    std::uint64_t q = 0;
    std::uint64_t m = 0;
    std::uint64_t k = 0;
    std::uint64_t k1 = 0;
    std::uint64_t k2 = 0;
    /// Least positive x with (m+1) | n x.
    std::uint64_t x = 0;
    std::uint64_t h1 = 0;
    std::uint64_t h2 = 0;

    Rational r1;
    BigInt f1;
    Rational memory2;
    Rational r2;
    BigInt f2;

    ParameterSet extended;
    ParameterSet dual;

    bool h1_equals_x = false;
    bool first_point_matches = false;   // M/N = 1/q, R = R1, F = F1
    bool second_point_matches = false;  // dual M/N, R = R2, F = F2
    bool identities_hold = false;       // closed-form (h1, h2) identities

    bool passed() const noexcept {
        return h1_equals_x && first_point_matches && second_point_matches && identities_hold;
    }
};

TangReport tang_equivalence(std::uint64_t n, std::uint64_t q, std::uint64_t m);

/// (K, S, S-(F-Z), F) for a parameter set with Z < F.
ParameterSet dual_parameters(const ParameterSet& base);

}  // namespace pdakit
