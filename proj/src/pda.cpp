#include "pdakit/pda.hpp"

#include "pdakit/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace pdakit {

std::string to_string(Entry e) { return e.is_star() ? "*" : std::to_string(e.value()); }

std::string PdaParams::to_string() const {
    return "(" + std::to_string(k) + "," + std::to_string(f) + "," + std::to_string(z) + "," +
           std::to_string(s) + ")";
}

PdaArray::PdaArray(Grid<Entry> entries, std::size_t claimed_z, std::size_t claimed_s)
    : entries_(std::move(entries)), z_(claimed_z), s_(claimed_s) {
    if (entries_.rows() == 0 || entries_.cols() == 0) {
        throw StructuralError("PDA must have at least one row and one column");
    }
    if (z_ > entries_.rows()) {
        throw StructuralError("claimed Z=" + std::to_string(z_) + " exceeds F=" +
                              std::to_string(entries_.rows()));
    }
    for (std::size_t j = 0; j < entries_.rows(); ++j) {
        for (std::size_t k = 0; k < entries_.cols(); ++k) {
            const Entry e = entries_(j, k);
            if (e.is_symbol() && e.value() >= s_) {
                throw StructuralError("entry (" + std::to_string(j) + "," + std::to_string(k) +
                                      ")=" + std::to_string(e.value()) +
                                      " is not below claimed S=" + std::to_string(s_));
            }
        }
    }
}

PdaArray PdaArray::from_rows(const std::vector<std::vector<Entry>>& rows, std::size_t claimed_z,
                             std::size_t claimed_s) {
    return PdaArray(Grid<Entry>::from_rows(rows), claimed_z, claimed_s);
}

std::vector<std::vector<Cell>> PdaArray::symbol_occurrences() const {
    std::vector<std::vector<Cell>> occ(s_);
    for (std::size_t j = 0; j < rows(); ++j) {
        for (std::size_t k = 0; k < cols(); ++k) {
            const Entry e = entries_(j, k);
            if (e.is_symbol()) occ[e.value()].push_back({j, k});
        }
    }
    return occ;
}

// ---------------------------------------------------------------------------
// validation

namespace {

std::string cell_str(const Cell& c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

// C3 for two cells holding the same symbol.
bool pair_ok(const PdaArray& pda, const Cell& a, const Cell& b) {
    if (a.row == b.row || a.col == b.col) return false;
    return pda.at(a.row, b.col).is_star() && pda.at(b.row, a.col).is_star();
}

}  // namespace

ValidationReport validate(const PdaArray& pda) {
    ValidationReport report;
    report.params = pda.params();

    report.c1_ok = true;
    for (std::size_t k = 0; k < pda.cols(); ++k) {
        std::size_t stars = 0;
        for (std::size_t j = 0; j < pda.rows(); ++j) stars += pda.at(j, k).is_star() ? 1 : 0;
        if (stars != pda.claimed_z()) {
            report.c1_ok = false;
            report.c1_witness = ColumnStarCount{k, stars};
            break;
        }
    }

    const auto occ = pda.symbol_occurrences();
    for (std::uint64_t s = 0; s < occ.size(); ++s) {
        if (occ[s].empty()) report.c2_missing.push_back(s);
    }
    report.c2_ok = report.c2_missing.empty();

    // Occurrence lists are row-major, so within a symbol the first violating
    // (i, j) pair found is the smallest for that symbol.
    report.c3_ok = true;
    for (const auto& cells : occ) {
        bool found = false;
        for (std::size_t i = 0; i < cells.size() && !found; ++i) {
            if (report.c3_witness && report.c3_witness->first < cells[i]) break;
            for (std::size_t j = i + 1; j < cells.size(); ++j) {
                if (!pair_ok(pda, cells[i], cells[j])) {
                    const CellPair candidate{cells[i], cells[j]};
                    if (!report.c3_witness || candidate < *report.c3_witness) {
                        report.c3_witness = candidate;
                    }
                    report.c3_ok = false;
                    found = true;
                    break;
                }
            }
        }
    }
    return report;
}

std::vector<std::string> ValidationReport::condition_lines() const {
    std::vector<std::string> lines;
    if (c1_ok) {
        lines.emplace_back("C1 OK");
    } else {
        lines.push_back("C1 FAIL at column " + std::to_string(c1_witness->column) + ": " +
                        std::to_string(c1_witness->stars) + " stars, expected " +
                        std::to_string(params.z));
    }
    if (c2_ok) {
        lines.emplace_back("C2 OK");
    } else {
        std::string missing;
        const std::size_t shown = std::min<std::size_t>(c2_missing.size(), 10);
        for (std::size_t i = 0; i < shown; ++i) {
            missing += (i ? "," : "") + std::to_string(c2_missing[i]);
        }
        if (shown < c2_missing.size()) missing += ",...";
        lines.push_back("C2 FAIL missing " + missing);
    }
    if (c3_ok) {
        lines.emplace_back("C3 OK");
    } else {
        lines.push_back("C3 FAIL at " + cell_str(c3_witness->first) + "," +
                        cell_str(c3_witness->second));
    }
    return lines;
}

namespace {

std::string invalid_message(const std::string& context, const ValidationReport& report) {
    std::string msg = context + ": not a " + report.params.to_string() + " PDA";
    for (const auto& line : report.condition_lines()) {
        if (line.find("FAIL") != std::string::npos) msg += "; " + line;
    }
    return msg;
}

}  // namespace

InvalidPdaError::InvalidPdaError(const std::string& context, ValidationReport report)
    : Error(invalid_message(context, report)), report_(std::move(report)) {}

void require_valid(const PdaArray& pda, std::string_view context) {
    auto report = validate(pda);
    if (!report.valid()) throw InvalidPdaError(std::string(context), std::move(report));
}

// ---------------------------------------------------------------------------
// text format

namespace {

constexpr std::string_view kMagic = "PDA v1";

class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    bool done() const { return pos_ >= text_.size(); }
    std::size_t line_number() const { return line_; }

    std::string_view next() {
        const std::size_t end = text_.find('\n', pos_);
        std::string_view line;
        if (end == std::string_view::npos) {
            line = text_.substr(pos_);
            pos_ = text_.size();
        } else {
            line = text_.substr(pos_, end - pos_);
            pos_ = end + 1;
        }
        ++line_;
        return line;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 0;
};

std::size_t parse_count(std::string_view token, std::string_view what, std::size_t line) {
    std::size_t value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last) {
        throw ParseError("line " + std::to_string(line) + ": bad " + std::string(what) + " value '" +
                         std::string(token) + "'");
    }
    return value;
}

std::vector<std::string_view> split_spaces(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t end = line.find(' ', pos);
        out.push_back(line.substr(pos, end == std::string_view::npos ? std::string_view::npos
                                                                      : end - pos));
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    return out;
}

}  // namespace

PdaArray parse(std::string_view text) {
    LineReader reader(text);
    if (reader.done() || reader.next() != kMagic) {
        throw ParseError("line 1: expected magic line 'PDA v1'");
    }
    if (reader.done()) throw ParseError("line 2: missing header");

    const auto header = split_spaces(reader.next());
    static constexpr std::string_view kKeys[] = {"K=", "F=", "Z=", "S="};
    if (header.size() != 4) {
        throw ParseError("line 2: header must be 'K=<int> F=<int> Z=<int> S=<int>'");
    }
    std::size_t values[4];
    for (std::size_t i = 0; i < 4; ++i) {
        if (!header[i].starts_with(kKeys[i])) {
            throw ParseError("line 2: expected field '" + std::string(kKeys[i]) + "'");
        }
        values[i] = parse_count(header[i].substr(2), kKeys[i].substr(0, 1), 2);
    }
    const auto [k, f, z, s] = values;
    if (k == 0 || f == 0) throw ParseError("line 2: K and F must be positive");
    if (z > f) throw ParseError("line 2: Z exceeds F");

    std::vector<Entry> entries;
    entries.reserve(f * k);
    std::size_t rows = 0;
    while (!reader.done()) {
        const auto line = reader.next();
        if (rows == f) {
            throw ParseError("dimension mismatch: more than F=" + std::to_string(f) + " rows");
        }
        const auto tokens = split_spaces(line);
        if (tokens.size() != k) {
            throw ParseError("dimension mismatch at line " + std::to_string(reader.line_number()) +
                             ": " + std::to_string(tokens.size()) + " tokens, expected K=" +
                             std::to_string(k));
        }
        for (const auto tok : tokens) {
            if (tok == "*") {
                entries.push_back(Entry::star());
                continue;
            }
            const std::size_t v = parse_count(tok, "entry", reader.line_number());
            if (v >= s) {
                throw ParseError("line " + std::to_string(reader.line_number()) + ": entry " +
                                 std::to_string(v) + " is not below S=" + std::to_string(s));
            }
            entries.push_back(Entry::symbol(v));
        }
        ++rows;
    }
    if (rows != f) {
        throw ParseError("dimension mismatch: " + std::to_string(rows) + " rows, expected F=" +
                         std::to_string(f));
    }
    return PdaArray(Grid<Entry>(f, k, std::move(entries)), z, s);
}

std::string serialize(const PdaArray& pda) {
    std::string out(kMagic);
    out += "\nK=" + std::to_string(pda.cols()) + " F=" + std::to_string(pda.rows()) +
           " Z=" + std::to_string(pda.claimed_z()) + " S=" + std::to_string(pda.claimed_s()) + "\n";
    for (std::size_t j = 0; j < pda.rows(); ++j) {
        const auto row = pda.row(j);
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) out += ' ';
            out += to_string(row[k]);
        }
        out += '\n';
    }
    return out;
}

PdaArray read_pda_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error reading '" + path + "'");
    return parse(buf.str());
}

void write_pda_file(const std::string& path, const PdaArray& pda) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << serialize(pda);
    if (!out) throw IoError("error writing '" + path + "'");
}

}  // namespace pdakit
