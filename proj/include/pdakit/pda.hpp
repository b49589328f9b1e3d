#pragma once

#include "pdakit/grid.hpp"
#include "pdakit/numeric.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pdakit {

/// One cell of a placement delivery array: a star or a symbol index.
class Entry {
public:
    constexpr Entry() noexcept = default;

    static constexpr Entry star() noexcept { return Entry(); }
    static constexpr Entry symbol(std::uint64_t s) noexcept { return Entry(s); }

    constexpr bool is_star() const noexcept { return raw_ == kStar; }
    constexpr bool is_symbol() const noexcept { return raw_ != kStar; }

    /// Symbol index; meaningless for a star.
    constexpr std::uint64_t value() const noexcept { return raw_; }

    /// Adds `offset` to a symbol; stars stay stars.
    constexpr Entry shifted(std::uint64_t offset) const noexcept {
        return is_star() ? *this : Entry(raw_ + offset);
    }

    friend constexpr bool operator==(Entry, Entry) = default;

private:
    static constexpr std::uint64_t kStar = ~std::uint64_t{0};

    constexpr explicit Entry(std::uint64_t raw) noexcept : raw_(raw) {}

    std::uint64_t raw_ = kStar;
};

std::string to_string(Entry e);

/// Position of an entry: row j (packet index), column k (user index).
struct Cell {
    std::size_t row = 0;
    std::size_t col = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// The (K, F, Z, S) tuple together with the memory ratio and rate it implies.
struct PdaParams {
    std::size_t k = 0;
    std::size_t f = 0;
    std::size_t z = 0;
    std::size_t s = 0;

    Rational memory_ratio() const { return Rational(z) / f; }
    Rational rate() const { return Rational(s) / f; }

    /// "(K,F,Z,S)"
    std::string to_string() const;

    friend bool operator==(const PdaParams&, const PdaParams&) = default;
};

/// F x K array over {*} and [0, S) together with the claimed Z and S.
///
/// Construction enforces shape and the symbol range only; the combinatorial
/// conditions are checked by validate().
class PdaArray {
public:
    /// Throws StructuralError when `entries` is not F x K or a symbol is >= S.
    PdaArray(Grid<Entry> entries, std::size_t claimed_z, std::size_t claimed_s);

    /// Nested-row convenience; ragged rows raise StructuralError.
    static PdaArray from_rows(const std::vector<std::vector<Entry>>& rows, std::size_t claimed_z,
                              std::size_t claimed_s);

    std::size_t rows() const noexcept { return entries_.rows(); }
    std::size_t cols() const noexcept { return entries_.cols(); }
    std::size_t claimed_z() const noexcept { return z_; }
    std::size_t claimed_s() const noexcept { return s_; }

    /// Parameters as claimed by the array (not checked).
    PdaParams params() const noexcept { return {cols(), rows(), z_, s_}; }

    Entry at(std::size_t j, std::size_t k) const { return entries_(j, k); }
    std::span<const Entry> row(std::size_t j) const { return entries_.row(j); }
    const Grid<Entry>& entries() const noexcept { return entries_; }

    /// Cells holding each symbol, in row-major order; index s lists cells with value s.
    std::vector<std::vector<Cell>> symbol_occurrences() const;

    friend bool operator==(const PdaArray&, const PdaArray&) = default;

private:
    Grid<Entry> entries_;
    std::size_t z_ = 0;
    std::size_t s_ = 0;
};

struct ColumnStarCount {
    std::size_t column = 0;
    std::size_t stars = 0;
};

struct CellPair {
    Cell first;
    Cell second;

    friend auto operator<=>(const CellPair&, const CellPair&) = default;
};

/// Outcome of checking the three PDA conditions against the claimed parameters.
struct ValidationReport {
    bool c1_ok = false;
    /// First column whose star count differs from the claimed Z.
    std::optional<ColumnStarCount> c1_witness;

    bool c2_ok = false;
    /// Symbols in [0, S) that never occur.
    std::vector<std::uint64_t> c2_missing;

    bool c3_ok = false;
    /// Lexicographically smallest offending pair of equal symbols.
    std::optional<CellPair> c3_witness;

    /// K and F from the shape, Z and S as claimed.
    PdaParams params;

    bool valid() const noexcept { return c1_ok && c2_ok && c3_ok; }
    Rational memory_ratio() const { return params.memory_ratio(); }
    Rational rate() const { return params.rate(); }

    /// One line per condition, e.g. "C3 FAIL at (0,2),(3,3)".
    std::vector<std::string> condition_lines() const;
};

ValidationReport validate(const PdaArray& pda);

/// Raised by operations that require a valid PDA; carries the failing report.
class InvalidPdaError : public Error {
public:
    InvalidPdaError(const std::string& context, ValidationReport report);
    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

/// Validates and throws InvalidPdaError on failure.
void require_valid(const PdaArray& pda, std::string_view context);

/// Reads the "PDA v1" text format. Does not check C1-C3.
PdaArray parse(std::string_view text);

/// Writes the canonical "PDA v1" text.
std::string serialize(const PdaArray& pda);

PdaArray read_pda_file(const std::string& path);
void write_pda_file(const std::string& path, const PdaArray& pda);

}  // namespace pdakit
