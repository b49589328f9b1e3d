#include "pdakit/constructions.hpp"

#include "pdakit/error.hpp"

#include <algorithm>
#include <numeric>

namespace pdakit {

namespace {

std::string num(std::uint64_t v) { return std::to_string(v); }

// Lexicographic rank of a sorted m-subset of {0..n-1} among all m-subsets.
std::uint64_t lex_rank(std::span<const std::size_t> subset, std::size_t n,
                       const Grid<std::uint64_t>& binom) {
    const std::size_t m = subset.size();
    std::uint64_t rank = 0;
    std::size_t next = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t x = next; x < subset[i]; ++x) rank += binom(n - 1 - x, m - 1 - i);
        next = subset[i] + 1;
    }
    return rank;
}

// Advances `subset` to the next t-subset of {0..n-1} in lexicographic order.
bool next_subset(std::vector<std::size_t>& subset, std::size_t n) {
    const std::size_t t = subset.size();
    for (std::size_t i = t; i-- > 0;) {
        if (subset[i] < n - t + i) {
            ++subset[i];
            for (std::size_t j = i + 1; j < t; ++j) subset[j] = subset[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

PdaArray mn_pda(std::size_t k, std::size_t t) {
    if (t < 1 || t >= k) {
        throw PreconditionError("mn_pda requires 1 <= t < K, got K=" + num(k) + " t=" + num(t));
    }
    const std::uint64_t f = checked_binomial(k, t);
    const std::uint64_t z = checked_binomial(k - 1, t - 1);
    const std::uint64_t s = checked_binomial(k, t + 1);

    Grid<std::uint64_t> binom(k + 1, k + 1, 0);
    for (std::size_t n = 0; n <= k; ++n) {
        for (std::size_t r = 0; r <= n; ++r) binom(n, r) = checked_binomial(n, r);
    }

    Grid<Entry> entries(f, k);
    std::vector<std::size_t> subset(t);
    std::iota(subset.begin(), subset.end(), std::size_t{0});
    std::vector<std::size_t> grown(t + 1);
    std::size_t row = 0;
    do {
        for (std::size_t col = 0; col < k; ++col) {
            if (std::binary_search(subset.begin(), subset.end(), col)) continue;
            auto pos = std::lower_bound(subset.begin(), subset.end(), col);
            auto out = std::copy(subset.begin(), pos, grown.begin());
            *out++ = col;
            std::copy(pos, subset.end(), out);
            entries(row, col) = Entry::symbol(lex_rank(grown, k, binom));
        }
        ++row;
    } while (next_subset(subset, k));

    PdaArray pda(std::move(entries), z, s);
    require_valid(pda, "mn_pda");
    return pda;
}

LabelMatrices label_matrices(std::size_t u, std::size_t v) {
    if (u == 0 || v == 0) throw PreconditionError("label_matrices requires u, v >= 1");
    if (v > u) {
        throw PreconditionError("label_matrices requires v <= u, got u=" + num(u) + " v=" + num(v));
    }
    if (std::gcd(u, v) != 1) {
        throw PreconditionError("label_matrices requires gcd(u,v)=1, got u=" + num(u) +
                                " v=" + num(v));
    }
    LabelMatrices out{u, v, IndexGrid(u, u + v), IndexGrid(u, u + v)};
    for (std::size_t j = 0; j < u; ++j) {
        for (std::size_t k = 0; k < u; ++k) out.a(j, k) = k;
        for (std::size_t i = 0; i < v; ++i) out.a(j, u + i) = (j * v + i) % u;

        // A_j is the cyclic window of v residues starting at <jv>_u.
        const std::size_t start = (j * v) % u;
        for (std::size_t k = 0; k < u + v; ++k) {
            const std::size_t offset = (k + u - start) % u;  // <k - jv>_u for k < u
            const bool in_window = k < u && offset < v;
            out.b(j, k) = in_window ? u + (j * v + offset) / u : j;
        }
    }
    return out;
}

ExpandedLabels expand_labels(const LabelMatrices& labels, std::size_t d) {
    if (d < 1) throw PreconditionError("expand_labels requires d >= 1");
    const std::size_t rows = labels.a.rows();
    const std::size_t cols = labels.a.cols();
    ExpandedLabels out{d, labels.u, labels.v, IndexGrid(rows, cols * d), IndexGrid(rows, cols * d)};
    for (std::size_t j = 0; j < rows; ++j) {
        for (std::size_t k = 0; k < cols; ++k) {
            for (std::size_t i = 0; i < d; ++i) {
                out.a(j, d * k + i) = d * labels.a(j, k) + i;
                out.b(j, d * k + i) = labels.b(j, k);
            }
        }
    }
    return out;
}

PdaArray psi(const PdaArray& base, const IndexGrid& a, const IndexGrid& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw PreconditionError("psi: index and label grids differ in shape");
    }
    if (a.rows() == 0 || a.cols() == 0) throw PreconditionError("psi: empty index grid");
    const auto idx = a.data();
    if (*std::max_element(idx.begin(), idx.end()) >= base.cols()) {
        throw PreconditionError("psi: index grid refers to column " +
                                num(*std::max_element(idx.begin(), idx.end())) +
                                " but the base array has " + num(base.cols()) + " columns");
    }
    const auto labels = b.data();
    const std::size_t max_label = *std::max_element(labels.begin(), labels.end());
    const std::size_t f = base.rows();
    const std::size_t s = base.claimed_s();

    Grid<Entry> out(f * a.rows(), a.cols());
    for (std::size_t bj = 0; bj < a.rows(); ++bj) {
        for (std::size_t bk = 0; bk < a.cols(); ++bk) {
            const std::size_t src = a(bj, bk);
            const std::uint64_t shift = static_cast<std::uint64_t>(b(bj, bk)) * s;
            for (std::size_t j = 0; j < f; ++j) {
                out(bj * f + j, bk) = base.at(j, src).shifted(shift);
            }
        }
    }
    return PdaArray(std::move(out), a.rows() * base.claimed_z(), (max_label + 1) * s);
}

PdaParams extended_params(const PdaParams& base, std::size_t k2) {
    if (k2 == 0 || k2 > base.k) {
        throw PreconditionError("extension requires 0 < K2 <= K1, got K1=" + num(base.k) +
                                " K2=" + num(k2));
    }
    const std::size_t d = std::gcd(base.k, k2);
    const std::size_t h1 = base.k / d;
    const std::size_t h2 = k2 / d;
    return {base.k + k2, h1 * base.f, h1 * base.z, (h1 + h2) * base.s};
}

PdaArray recursive_extend(const PdaArray& base, std::size_t k2) {
    require_valid(base, "recursive_extend input");
    const PdaParams expected = extended_params(base.params(), k2);
    const std::size_t d = std::gcd(base.cols(), k2);
    const auto labels = expand_labels(label_matrices(base.cols() / d, k2 / d), d);
    PdaArray out = psi(base, labels.a, labels.b);
    require_valid(out, "recursive_extend output");
    if (out.params() != expected) {
        throw Error("recursive_extend produced " + out.params().to_string() + ", expected " +
                    expected.to_string());
    }
    return out;
}

PdaParams dual_params(const PdaParams& p) {
    if (p.z >= p.f) throw PreconditionError("dual requires Z < F, got " + p.to_string());
    return {p.k, p.s, p.s - (p.f - p.z), p.f};
}

PdaArray dual(const PdaArray& pda) {
    require_valid(pda, "dual input");
    const PdaParams target = dual_params(pda.params());
    for (std::size_t j = 0; j < pda.rows(); ++j) {
        const auto row = pda.row(j);
        if (std::all_of(row.begin(), row.end(), [](Entry e) { return e.is_star(); })) {
            throw PreconditionError("dual requires every row to hold a symbol; row " + num(j) +
                                    " is all stars");
        }
    }
    Grid<Entry> out(pda.claimed_s(), pda.cols());
    for (std::size_t j = 0; j < pda.rows(); ++j) {
        for (std::size_t k = 0; k < pda.cols(); ++k) {
            const Entry e = pda.at(j, k);
            if (e.is_symbol()) out(e.value(), k) = Entry::symbol(j);
        }
    }
    PdaArray result(std::move(out), target.z, target.s);
    require_valid(result, "dual output");
    return result;
}

// ---------------------------------------------------------------------------
// parameter calculators

namespace {

ParameterSet make_set(BigInt k, BigInt f, BigInt z, BigInt s, Provenance tag) {
    SchemePoint point{Rational(z, f), Rational(s, f), f, tag};
    return {std::move(k), std::move(f), std::move(z), std::move(s), std::move(point)};
}

void check_qz(std::uint64_t q, std::uint64_t z) {
    if (q < 2) throw PreconditionError("requires q >= 2, got q=" + num(q));
    if (z < 1 || z >= q) {
        throw PreconditionError("requires 1 <= z < q, got q=" + num(q) + " z=" + num(z));
    }
}

}  // namespace

ParameterSet params_lemma2(std::uint64_t q, std::uint64_t z, std::uint64_t m) {
    check_qz(q, z);
    if (m < 1) throw PreconditionError("requires m >= 1");
    const BigInt fl = (q - 1) / (q - z);
    const BigInt qm = ipow(q, m);
    return make_set(BigInt(m + 1) * q, fl * qm, z * fl * ipow(q, m - 1), (q - z) * qm,
                    Provenance::lemma2);
}

ParameterSet params_lemma3(std::uint64_t q, std::uint64_t z, std::uint64_t m, std::uint64_t t) {
    check_qz(q, z);
    if (t < 1 || t >= m) {
        throw PreconditionError("requires 1 <= t < m, got m=" + num(m) + " t=" + num(t));
    }
    const BigInt flt = ipow((q - 1) / (q - z), t);
    const BigInt qm = ipow(q, m);
    const BigInt gapt = ipow(q - z, t);
    return make_set(binomial(m, t) * ipow(q, t), flt * qm, flt * (qm - ipow(q, m - t) * gapt),
                    gapt * qm, Provenance::lemma3);
}

ParameterSet params_mn(std::uint64_t k, std::uint64_t t) {
    if (k < 1 || t > k) {
        throw PreconditionError("MN parameters require K >= 1 and 0 <= t <= K, got K=" + num(k) +
                                " t=" + num(t));
    }
    const BigInt z = t == 0 ? BigInt(0) : binomial(k - 1, t - 1);
    return make_set(k, binomial(k, t), z, binomial(k, t + 1), Provenance::mn);
}

ParameterSet extend_parameters(const ParameterSet& base, std::uint64_t k2, Provenance tag) {
    const std::uint64_t k1 = to_u64(base.k, "K1");
    if (k2 == 0 || k2 > k1) {
        throw PreconditionError("extension requires 0 < K2 <= K1, got K1=" + num(k1) +
                                " K2=" + num(k2));
    }
    const std::uint64_t d = std::gcd(k1, k2);
    const BigInt h1 = k1 / d;
    const BigInt h2 = k2 / d;
    return make_set(base.k + k2, h1 * base.f, h1 * base.z, (h1 + h2) * base.s, tag);
}

ParameterSet params_theorem3(std::uint64_t k1, std::uint64_t k2, std::uint64_t t) {
    if (t < 1 || t >= k1) {
        throw PreconditionError("requires 1 <= t < K1, got K1=" + num(k1) + " t=" + num(t));
    }
    return extend_parameters(params_mn(k1, t), k2, Provenance::theorem3);
}

ParameterSet params_theorem4(std::uint64_t q, std::uint64_t z, std::uint64_t m, std::uint64_t k2) {
    return extend_parameters(params_lemma2(q, z, m), k2, Provenance::theorem4);
}

ParameterSet params_theorem5(std::uint64_t q, std::uint64_t z, std::uint64_t m, std::uint64_t t,
                             std::uint64_t k2) {
    return extend_parameters(params_lemma3(q, z, m, t), k2, Provenance::theorem5);
}

}  // namespace pdakit
