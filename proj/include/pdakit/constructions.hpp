#pragma once

#include "pdakit/grid.hpp"
#include "pdakit/numeric.hpp"
#include "pdakit/pda.hpp"
#include "pdakit/scheme.hpp"

#include <cstddef>
#include <cstdint>

namespace pdakit {

/// Maddah-Ali--Niesen array: a (K, C(K,t), C(K-1,t-1), C(K,t+1)) PDA.
///
/// Rows are the t-subsets of {0..K-1} in lexicographic order. Entry (T, k) is a
/// star when k is in T, otherwise the lexicographic rank of T + {k} among the
/// (t+1)-subsets. Requires 1 <= t < K.
PdaArray mn_pda(std::size_t k, std::size_t t);

/// Column-index array A and block-label array B for coprime u >= v.
///
/// Row j of A is 0..u-1 followed by <jv>_u .. <(j+1)v-1>_u. B holds j outside
/// the column set A_j and u + floor((jv + <k-jv>_u) / u) on it.
struct LabelMatrices {
    std::size_t u = 0;
    std::size_t v = 0;
    IndexGrid a;
    IndexGrid b;

    friend bool operator==(const LabelMatrices&, const LabelMatrices&) = default;
};

LabelMatrices label_matrices(std::size_t u, std::size_t v);

/// Label matrices widened by a factor d: each column k becomes d columns
/// (d*a + 0, ..., d*a + d-1) sharing the block label b.
struct ExpandedLabels {
    std::size_t d = 0;
    std::size_t h1 = 0;
    std::size_t h2 = 0;
    IndexGrid a;
    IndexGrid b;

    friend bool operator==(const ExpandedLabels&, const ExpandedLabels&) = default;
};

ExpandedLabels expand_labels(const LabelMatrices& labels, std::size_t d);

/// Block assembly: block (j, k) is column a(j,k) of `base` with its symbols
/// shifted by b(j,k) * S. The result claims Z = rows(A) * Z and
/// S = (max label + 1) * S. No validation is performed.
PdaArray psi(const PdaArray& base, const IndexGrid& a, const IndexGrid& b);

/// Extends a (K1,F,Z,S) PDA by K2 users (0 < K2 <= K1), producing a
/// (K1+K2, h1 F, h1 Z, (h1+h2) S) PDA with d = gcd(K1,K2), h1 = K1/d, h2 = K2/d.
/// Validates both the input and the output.
PdaArray recursive_extend(const PdaArray& base, std::size_t k2);

/// Parameters recursive_extend() produces for a base with `base` parameters.
PdaParams extended_params(const PdaParams& base, std::size_t k2);

/// Row/symbol swap of a (K,F,Z,S) PDA with Z < F: a (K, S, S-(F-Z), F) PDA.
/// Entry (s, k) is the row holding s in column k, or a star if s is absent there.
PdaArray dual(const PdaArray& pda);

/// Parameters dual() produces, without building the array.
PdaParams dual_params(const PdaParams& params);

/// (K, F, Z, S) in arbitrary precision, with the scheme point it realizes.
struct ParameterSet {
    BigInt k;
    BigInt f;
    BigInt z;
    BigInt s;
    SchemePoint point;

    friend bool operator==(const ParameterSet&, const ParameterSet&) = default;
};

/// ((m+1)q, fl q^m, z fl q^(m-1), (q-z) q^m) with fl = floor((q-1)/(q-z)).
ParameterSet params_lemma2(std::uint64_t q, std::uint64_t z, std::uint64_t m);

/// (C(m,t) q^t, fl^t q^m, fl^t (q^m - q^(m-t) (q-z)^t), (q-z)^t q^m).
ParameterSet params_lemma3(std::uint64_t q, std::uint64_t z, std::uint64_t m, std::uint64_t t);

/// MN parameters (K, C(K,t), C(K-1,t-1), C(K,t+1)) for 0 <= t <= K,
/// including the empty-cache and full-cache endpoints.
ParameterSet params_mn(std::uint64_t k, std::uint64_t t);

/// Applies the extension map (K1+K2, h1 F, h1 Z, (h1+h2) S) to a base set.
ParameterSet extend_parameters(const ParameterSet& base, std::uint64_t k2, Provenance tag);

ParameterSet params_theorem3(std::uint64_t k1, std::uint64_t k2, std::uint64_t t);
ParameterSet params_theorem4(std::uint64_t q, std::uint64_t z, std::uint64_t m, std::uint64_t k2);
ParameterSet params_theorem5(std::uint64_t q, std::uint64_t z, std::uint64_t m, std::uint64_t t,
                             std::uint64_t k2);

}  // namespace pdakit
