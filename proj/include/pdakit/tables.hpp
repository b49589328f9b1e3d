#pragma once

#include "pdakit/analysis.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pdakit {

/// mn_vs_ours: extended MN scheme vs plain MN at the same M/N.
/// table2: extended MN scheme vs memory sharing over MN points.
/// table3: table2 plus memory sharing over one (q, z, m) family with fixed (q, m).
enum class TableId { mn_vs_ours, table2, table3 };

TableId parse_table_id(std::string_view id);
std::string_view to_string(TableId id);

/// Row inputs. q and m are required for table3 and ignored elsewhere.
struct RowParams {
    std::uint64_t k1 = 0;
    std::uint64_t k2 = 0;
    std::uint64_t t = 0;
    std::optional<std::uint64_t> q;
    std::optional<std::uint64_t> m;
};

/// The row parameter lists of the published comparison tables.
std::vector<RowParams> default_rows(TableId id);

/// Parses "K1,K2,t;K1,K2,t" (or "K1,K2,t,q,m;..." for table3).
std::vector<RowParams> parse_rows(TableId id, std::string_view text);

struct ComparisonRow {
    std::uint64_t k = 0;
    std::uint64_t k1 = 0;
    std::uint64_t k2 = 0;
    std::uint64_t h1 = 0;
    std::uint64_t h2 = 0;
    std::uint64_t t = 0;
    std::optional<std::uint64_t> q;
    std::optional<std::uint64_t> m;

    Rational memory_ratio;
    Rational rate;
    BigInt packets;

    /// mn_vs_ours: the MN scheme on K users. table2/3: best memory share over MN points.
    Rational mn_rate;
    BigInt mn_packets;
    std::optional<ShareChoice> mn_share;

    /// table3 only: best memory share over the (q, z, m) family with fixed (q, m).
    std::optional<ShareChoice> lemma2_share;

    Rational rate_ratio;
    Rational packet_ratio;
};

std::vector<ComparisonRow> make_table(TableId id, std::span<const RowParams> rows);

/// Printed baseline values of the published tables, keyed by row position in
/// default_rows(); empty strings where a table has no such column.
struct ReferenceBaseline {
    std::string mn_rate;
    std::string mn_packets;
    std::string lemma2_rate;
    std::string lemma2_packets;
};

std::vector<ReferenceBaseline> reference_baselines(TableId id);

/// Header plus string cells, ready for CSV or markdown.
struct RenderedTable {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> cells;
    std::string note;
};

/// `with_reference` appends the published baseline columns (rows must be the defaults).
RenderedTable render(TableId id, std::span<const ComparisonRow> rows, bool with_reference);

std::string to_csv(const RenderedTable& table);
std::string to_markdown(const RenderedTable& table);

}  // namespace pdakit
