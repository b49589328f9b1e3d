#include "pdakit/tables.hpp"

#include "pdakit/error.hpp"

#include <charconv>
#include <numeric>

namespace pdakit {

TableId parse_table_id(std::string_view id) {
    if (id == "mn_vs_ours") return TableId::mn_vs_ours;
    if (id == "table2") return TableId::table2;
    if (id == "table3") return TableId::table3;
    throw PreconditionError("unknown table id '" + std::string(id) +
                            "' (expected mn_vs_ours, table2 or table3)");
}

std::string_view to_string(TableId id) {
    switch (id) {
        case TableId::mn_vs_ours: return "mn_vs_ours";
        case TableId::table2: return "table2";
        case TableId::table3: return "table3";
    }
    return "unknown";
}

std::vector<RowParams> default_rows(TableId id) {
    switch (id) {
        case TableId::mn_vs_ours: {
            // M/N = 1/2 and K1/K2 = 2.
            std::vector<RowParams> rows;
            for (std::uint64_t k1 = 4; k1 <= 32; k1 += 4) rows.push_back({k1, k1 / 2, k1 / 2, {}, {}});
            return rows;
        }
        case TableId::table2:
            return {{12, 6, 9, {}, {}},   {11, 9, 7, {}, {}},   {14, 11, 11, {}, {}},
                    {15, 13, 11, {}, {}}, {18, 12, 11, {}, {}}, {18, 16, 10, {}, {}},
                    {19, 17, 13, {}, {}}, {21, 19, 14, {}, {}}, {24, 20, 13, {}, {}},
                    {25, 23, 16, {}, {}}, {26, 24, 18, {}, {}}};
        case TableId::table3:
            return {{12, 6, 9, 6, 2},    {11, 9, 6, 5, 3},   {15, 13, 8, 4, 6},
                    {20, 15, 11, 5, 6},  {20, 18, 11, 19, 1}, {24, 20, 13, 4, 10}};
    }
    return {};
}

std::vector<ReferenceBaseline> reference_baselines(TableId id) {
    switch (id) {
        case TableId::mn_vs_ours: return std::vector<ReferenceBaseline>(8);
        case TableId::table2:
            return {{"0.484", "816", "", ""},         {"0.928", "5035", "", ""},
                    {"0.454", "12675", "", ""},       {"0.655", "101556", "", ""},
                    {"0.993", "593776", "", ""},      {"1.402", "5657872", "", ""},
                    {"0.851", "8724672", "", ""},     {"0.922", "80743065", "", ""},
                    {"1.460", "710016516", "", ""},   {"1.032", "6918064890", "", ""},
                    {"0.815", "10809156820", "", ""}};
        case TableId::table3:
            return {{"0.466", "43776", "0.600", "252"},
                    {"1.351", "16644", "1.401", "375"},
                    {"1.461", "1560780", "1.489", "16384"},
                    {"1.327", "183631756", "1.375", "46875"},
                    {"1.441", "472807571", "4.125", "95"},
                    {"1.455", "686354883984", "1.444", "4194304"}};
    }
    return {};
}

std::vector<RowParams> parse_rows(TableId id, std::string_view text) {
    const std::size_t arity = id == TableId::table3 ? 5 : 3;
    std::vector<RowParams> rows;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find(';', pos), text.size());
        const std::string_view item = text.substr(pos, end - pos);
        pos = end + 1;
        if (item.empty()) continue;

        std::vector<std::uint64_t> values;
        std::size_t p = 0;
        while (p <= item.size()) {
            const std::size_t e = std::min(item.find(',', p), item.size());
            std::uint64_t v = 0;
            const auto field = item.substr(p, e - p);
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
            if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
                throw PreconditionError("bad row field '" + std::string(field) + "' in '" +
                                        std::string(item) + "'");
            }
            values.push_back(v);
            p = e + 1;
        }
        if (values.size() != arity) {
            throw PreconditionError("row '" + std::string(item) + "' needs " +
                                    std::to_string(arity) + " comma-separated values");
        }
        RowParams row{values[0], values[1], values[2], {}, {}};
        if (arity == 5) {
            row.q = values[3];
            row.m = values[4];
        }
        rows.push_back(row);
    }
    if (rows.empty()) throw PreconditionError("no table rows given");
    return rows;
}

std::vector<ComparisonRow> make_table(TableId id, std::span<const RowParams> rows) {
    std::vector<ComparisonRow> out;
    out.reserve(rows.size());
    for (const auto& p : rows) {
        ComparisonRow row;
        row.k1 = p.k1;
        row.k2 = p.k2;
        row.t = p.t;
        row.k = p.k1 + p.k2;
        const auto ours = params_theorem3(p.k1, p.k2, p.t);
        const std::uint64_t d = std::gcd(p.k1, p.k2);
        row.h1 = p.k1 / d;
        row.h2 = p.k2 / d;
        row.memory_ratio = ours.point.memory_ratio;
        row.rate = ours.point.rate;
        row.packets = ours.f;

        if (id == TableId::mn_vs_ours) {
            const auto cmp = mn_ratio(p.k1, p.k2, p.t);
            row.mn_rate = cmp.mn_rate;
            row.mn_packets = cmp.mn_packets;
        } else {
            const auto mn_points = base_points_mn(row.k);
            auto share = best_share(mn_points, row.memory_ratio, row.rate);
            row.mn_rate = share.point.rate;
            row.mn_packets = share.point.packets;
            row.mn_share = std::move(share);
        }
        if (id == TableId::table3) {
            if (!p.q || !p.m) throw PreconditionError("table3 rows need q and m");
            row.q = p.q;
            row.m = p.m;
            if ((*p.m + 1) * *p.q != row.k) {
                throw PreconditionError("table3 row needs (m+1) q = K1 + K2 = " +
                                        std::to_string(row.k));
            }
            const auto family = lemma2_family(*p.q, *p.m);
            row.lemma2_share = best_share(family, row.memory_ratio, row.rate);
        }
        row.rate_ratio = row.mn_rate == 0 ? Rational(0) : row.rate / row.mn_rate;
        row.packet_ratio = Rational(row.packets, row.mn_packets);
        out.push_back(std::move(row));
    }
    return out;
}

namespace {

std::string u(std::uint64_t v) { return std::to_string(v); }

constexpr std::string_view kShareNote =
    "Memory-sharing baselines: candidates are single points at the target M/N and pairs "
    "straddling it (r <= 2); the selected one minimizes |R_share - R|, then F, then the index "
    "pair.";

}  // namespace

RenderedTable render(TableId id, std::span<const ComparisonRow> rows, bool with_reference) {
    RenderedTable t;
    std::vector<ReferenceBaseline> refs;
    if (with_reference) {
        refs = reference_baselines(id);
        if (refs.size() != rows.size()) {
            throw PreconditionError("reference columns are only available for the default rows");
        }
    }
    switch (id) {
        case TableId::mn_vs_ours:
            t.headers = {"K", "K1", "K2", "R", "R_MN", "F", "F_MN"};
            for (const auto& r : rows) {
                t.cells.push_back({u(r.k), u(r.k1), u(r.k2), format_decimal(r.rate, 4),
                                   format_decimal(r.mn_rate, 4), to_string(r.packets),
                                   to_string(r.mn_packets)});
            }
            break;
        case TableId::table2:
            t.headers = {"K", "K1", "K2", "h1", "h2", "t", "M/N", "R", "R1_MN", "F", "F1_MN"};
            if (with_reference) {
                t.headers.insert(t.headers.end(), {"R1_MN_ref", "F1_MN_ref"});
            }
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const auto& r = rows[i];
                std::vector<std::string> cells{u(r.k), u(r.k1), u(r.k2), u(r.h1), u(r.h2), u(r.t),
                                               to_fraction_string(r.memory_ratio),
                                               format_decimal(r.rate, 3),
                                               format_decimal(r.mn_rate, 3), to_string(r.packets),
                                               to_string(r.mn_packets)};
                if (with_reference) cells.insert(cells.end(), {refs[i].mn_rate, refs[i].mn_packets});
                t.cells.push_back(std::move(cells));
            }
            t.note = std::string(kShareNote);
            break;
        case TableId::table3:
            t.headers = {"K",  "K1",    "K2", "t",     "q",      "m",    "M/N",
                         "R1_le2", "R", "R1_MN", "F1_le2", "F", "F1_MN"};
            if (with_reference) {
                t.headers.insert(t.headers.end(),
                                 {"R1_le2_ref", "R1_MN_ref", "F1_le2_ref", "F1_MN_ref"});
            }
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const auto& r = rows[i];
                std::vector<std::string> cells{
                    u(r.k), u(r.k1), u(r.k2), u(r.t), u(*r.q), u(*r.m),
                    to_fraction_string(r.memory_ratio),
                    format_decimal(r.lemma2_share->point.rate, 3), format_decimal(r.rate, 3),
                    format_decimal(r.mn_rate, 3), to_string(r.lemma2_share->point.packets),
                    to_string(r.packets), to_string(r.mn_packets)};
                if (with_reference) {
                    cells.insert(cells.end(), {refs[i].lemma2_rate, refs[i].mn_rate,
                                               refs[i].lemma2_packets, refs[i].mn_packets});
                }
                t.cells.push_back(std::move(cells));
            }
            t.note = std::string(kShareNote);
            break;
    }
    return t;
}

std::string to_csv(const RenderedTable& table) {
    auto join = [](const std::vector<std::string>& v) {
        std::string line;
        for (std::size_t i = 0; i < v.size(); ++i) line += (i ? "," : "") + v[i];
        return line + "\n";
    };
    std::string out = join(table.headers);
    for (const auto& row : table.cells) out += join(row);
    return out;
}

std::string to_markdown(const RenderedTable& table) {
    auto join = [](const std::vector<std::string>& v) {
        std::string line = "|";
        for (const auto& c : v) line += " " + c + " |";
        return line + "\n";
    };
    std::string out = join(table.headers);
    out += "|";
    for (std::size_t i = 0; i < table.headers.size(); ++i) out += " ---: |";
    out += "\n";
    for (const auto& row : table.cells) out += join(row);
    if (!table.note.empty()) out += "\n" + table.note + "\n";
    return out;
}

}  // namespace pdakit
