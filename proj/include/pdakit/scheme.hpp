#pragma once

#include "pdakit/numeric.hpp"

#include <string>
#include <string_view>

namespace pdakit {

enum class Provenance { mn, lemma2, lemma3, theorem3, theorem4, theorem5, shared };

std::string_view to_string(Provenance p);

/// An achievable (M/N, R, F) triple. All arithmetic on it is exact.
struct SchemePoint {
    Rational memory_ratio;
    Rational rate;
    BigInt packets = 1;
    Provenance provenance = Provenance::mn;

    friend bool operator==(const SchemePoint&, const SchemePoint&) = default;
};

/// Throws PreconditionError unless 0 <= M/N <= 1, R >= 0 and F >= 1.
void check_point(const SchemePoint& point);

}  // namespace pdakit
