#include "pdakit/analysis.hpp"

#include "pdakit/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pdakit {

namespace {

std::string num(std::uint64_t v) { return std::to_string(v); }

}  // namespace

double entropy(double lambda) {
    if (!(lambda > 0.0 && lambda < 1.0)) {
        throw PreconditionError("entropy requires 0 < lambda < 1");
    }
    return -lambda * std::log2(lambda) - (1.0 - lambda) * std::log2(1.0 - lambda);
}

double entropy(const Rational& lambda) {
    if (lambda <= 0 || lambda >= 1) {
        throw PreconditionError("entropy requires 0 < lambda < 1, got " + to_string(lambda));
    }
    return entropy(to_double(lambda));
}

MnComparison mn_ratio(std::uint64_t k1, std::uint64_t k2, std::uint64_t t) {
    if (t < 1 || t >= k1) {
        throw PreconditionError("requires 1 <= t < K1, got K1=" + num(k1) + " t=" + num(t));
    }
    if (k2 < 1 || k2 > k1) {
        throw PreconditionError("requires 1 <= K2 <= K1, got K1=" + num(k1) + " K2=" + num(k2));
    }
    const std::uint64_t k = k1 + k2;
    if ((k * t) % k1 != 0) {
        throw PreconditionError("non-integral MN baseline memory point: " + num(k) + "*" + num(t) +
                                "/" + num(k1));
    }
    MnComparison c;
    c.k1 = k1;
    c.k2 = k2;
    c.t = t;
    const std::uint64_t d = std::gcd(k1, k2);
    c.h1 = k1 / d;
    c.h2 = k2 / d;
    c.mn_t = k * t / k1;

    const auto ours = params_theorem3(k1, k2, t);
    const auto mn = params_mn(k, c.mn_t);
    c.memory_ratio = ours.point.memory_ratio;
    c.packets = ours.f;
    c.rate = ours.point.rate;
    c.mn_packets = mn.f;
    c.mn_rate = mn.point.rate;
    c.packet_ratio = Rational(c.packets, c.mn_packets);
    c.rate_ratio = c.rate / c.mn_rate;

    const Rational h1(c.h1);
    const Rational h2(c.h2);
    c.rate_ratio_closed_form = (1 + h2 / h1) * (1 - h2 / ((1 + Rational(t)) * (h1 + h2)));
    c.packet_ratio_approx =
        static_cast<double>(c.h1) *
        std::exp2(-static_cast<double>(k2) * entropy(Rational(t, k1)));
    return c;
}

SchemePoint memory_share(std::span<const SchemePoint> points, std::span<const Rational> lambdas) {
    if (points.empty()) throw PreconditionError("memory sharing needs at least one point");
    if (points.size() != lambdas.size()) {
        throw PreconditionError("memory sharing needs one weight per point");
    }
    Rational total = 0;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (lambdas[i] <= 0 || lambdas[i] > 1) {
            throw PreconditionError("weight " + to_string(lambdas[i]) + " outside (0,1]");
        }
        if (i > 0 && points[i].memory_ratio < points[i - 1].memory_ratio) {
            throw PreconditionError("memory-sharing points must be sorted by M/N");
        }
        total += lambdas[i];
    }
    if (total != 1) throw PreconditionError("weights sum to " + to_string(total) + ", not 1");
    if (points.size() == 1) return points.front();

    SchemePoint out{0, 0, 0, Provenance::shared};
    for (std::size_t i = 0; i < points.size(); ++i) {
        out.memory_ratio += lambdas[i] * points[i].memory_ratio;
        out.rate += lambdas[i] * points[i].rate;
        out.packets += points[i].packets;
    }
    return out;
}

std::vector<SchemePoint> base_points_mn(std::uint64_t k) {
    if (k < 1) throw PreconditionError("base_points_mn requires K >= 1");
    std::vector<SchemePoint> pts;
    pts.reserve(k + 1);
    for (std::uint64_t t = 0; t <= k; ++t) pts.push_back(params_mn(k, t).point);
    return pts;
}

std::vector<SchemePoint> lemma2_family(std::uint64_t q, std::uint64_t m) {
    std::vector<SchemePoint> pts;
    for (std::uint64_t z = 1; z < q; ++z) pts.push_back(params_lemma2(q, z, m).point);
    return pts;
}

std::vector<SchemePoint> base_points_lemma2(std::uint64_t k) {
    std::vector<SchemePoint> pts;
    for (std::uint64_t q = 2; q <= k; ++q) {
        if (k % q != 0 || k / q < 2) continue;
        auto family = lemma2_family(q, k / q - 1);
        pts.insert(pts.end(), family.begin(), family.end());
    }
    std::stable_sort(pts.begin(), pts.end(), [](const SchemePoint& a, const SchemePoint& b) {
        return a.memory_ratio < b.memory_ratio;
    });
    return pts;
}

std::vector<ShareChoice> enumerate_shares(std::span<const SchemePoint> points,
                                          const Rational& memory_ratio) {
    std::vector<ShareChoice> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].memory_ratio == memory_ratio) out.push_back({points[i], {i}, {Rational(1)}});
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const bool i_low = points[i].memory_ratio < points[j].memory_ratio;
            const SchemePoint& lo = i_low ? points[i] : points[j];
            const SchemePoint& hi = i_low ? points[j] : points[i];
            if (!(lo.memory_ratio < memory_ratio && memory_ratio < hi.memory_ratio)) continue;
            const Rational lam_lo = (hi.memory_ratio - memory_ratio) /
                                    (hi.memory_ratio - lo.memory_ratio);
            const std::vector<SchemePoint> pair{lo, hi};
            const std::vector<Rational> lambdas{lam_lo, 1 - lam_lo};
            out.push_back({memory_share(pair, lambdas), {i, j},
                           i_low ? lambdas : std::vector<Rational>{lambdas[1], lambdas[0]}});
        }
    }
    return out;
}

ShareChoice best_share(std::span<const SchemePoint> points, const Rational& memory_ratio,
                       const Rational& target_rate) {
    auto candidates = enumerate_shares(points, memory_ratio);
    if (candidates.empty()) {
        throw PreconditionError("no memory-sharing combination reaches M/N=" +
                                to_string(memory_ratio));
    }
    auto gap = [&](const ShareChoice& c) { return abs(Rational(c.point.rate - target_rate)); };
    auto best = std::min_element(candidates.begin(), candidates.end(),
                                 [&](const ShareChoice& a, const ShareChoice& b) {
                                     const Rational ga = gap(a);
                                     const Rational gb = gap(b);
                                     if (ga != gb) return ga < gb;
                                     if (a.point.packets != b.point.packets) {
                                         return a.point.packets < b.point.packets;
                                     }
                                     return a.indices < b.indices;
                                 });
    return *best;
}

ParameterSet dual_parameters(const ParameterSet& base) {
    if (base.z >= base.f) throw PreconditionError("dual parameters require Z < F");
    const BigInt f = base.s;
    const BigInt z = base.s - (base.f - base.z);
    SchemePoint point{Rational(z, f), Rational(base.f, f), f, base.point.provenance};
    return {base.k, f, z, base.f, point};
}

TangReport tang_equivalence(std::uint64_t n, std::uint64_t q, std::uint64_t m) {
    if (q < 2) throw PreconditionError("requires q >= 2");
    if (m < 1) throw PreconditionError("requires m >= 1");
    TangReport r;
    r.n = n;
    r.q = q;
    r.m = m;
    r.k = n * q;
    r.k1 = (m + 1) * q;
    if (r.k <= r.k1 || r.k - r.k1 > r.k1) {
        throw PreconditionError("requires 0 < K2 <= K1 with K=nq=" + num(r.k) +
                                " and K1=(m+1)q=" + num(r.k1));
    }
    r.k2 = r.k - r.k1;
    r.x = 1;
    while ((n * r.x) % (m + 1) != 0) ++r.x;
    const std::uint64_t d = std::gcd(r.k1, r.k2);
    r.h1 = r.k1 / d;
    r.h2 = r.k2 / d;

    const BigInt qm = ipow(q, m);
    r.r1 = Rational(n, m + 1) * (q - 1);
    r.f1 = qm * r.x;
    r.memory2 = 1 - Rational(m + 1, n * q);
    r.r2 = Rational(m + 1, (q - 1) * n);
    r.f2 = (q - 1) * qm * r.x * n / (m + 1);

    r.extended = params_theorem4(q, 1, m, r.k2);
    r.dual = dual_parameters(r.extended);

    r.h1_equals_x = r.h1 == r.x;
    r.first_point_matches = r.extended.k == r.k && r.extended.point.memory_ratio == Rational(1, q) &&
                            r.extended.point.rate == r.r1 && r.extended.f == r.f1;
    r.second_point_matches = r.dual.k == r.k && r.dual.point.memory_ratio == r.memory2 &&
                             r.dual.point.rate == r.r2 && r.dual.f == r.f2;

    const BigInt sum_h = r.h1 + r.h2;
    const bool f2_identity = sum_h * (q - 1) * qm == r.f2;
    const bool r2_identity = Rational(r.h1 * qm, sum_h * (q - 1) * qm) == r.r2;
    const bool m2_identity = 1 - Rational(BigInt(r.h1), sum_h * q) == r.memory2;
    const bool sum_identity = sum_h * (m + 1) == BigInt(n) * r.x;
    r.identities_hold = f2_identity && r2_identity && m2_identity && sum_identity;
    return r;
}

}  // namespace pdakit
