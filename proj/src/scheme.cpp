#include "pdakit/scheme.hpp"

#include "pdakit/error.hpp"

namespace pdakit {

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::mn: return "mn";
        case Provenance::lemma2: return "lemma2";
        case Provenance::lemma3: return "lemma3";
        case Provenance::theorem3: return "theorem3";
        case Provenance::theorem4: return "theorem4";
        case Provenance::theorem5: return "theorem5";
        case Provenance::shared: return "shared";
    }
    return "unknown";
}

void check_point(const SchemePoint& point) {
    if (point.memory_ratio < 0 || point.memory_ratio > 1) {
        throw PreconditionError("memory ratio " + to_string(point.memory_ratio) +
                                " outside [0,1]");
    }
    if (point.rate < 0) throw PreconditionError("negative rate " + to_string(point.rate));
    if (point.packets < 1) throw PreconditionError("packet count must be at least 1");
}

}  // namespace pdakit
