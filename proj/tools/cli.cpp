#include "cli.hpp"

#include "pdakit/caching.hpp"
#include "pdakit/constructions.hpp"
#include "pdakit/error.hpp"
#include "pdakit/pda.hpp"
#include "pdakit/tables.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace pdakit::cli {

namespace {

std::string summary_line(const PdaParams& p) {
    return p.to_string() + " M/N=" + to_fraction_string(p.memory_ratio()) +
           " R=" + to_fraction_string(p.rate());
}

void print_failures(const ValidationReport& report, std::ostream& out) {
    for (const auto& line : report.condition_lines()) {
        if (line.find("FAIL") != std::string::npos) out << line << "\n";
    }
}

std::vector<std::size_t> parse_demands(const std::string& text) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find(',', pos), text.size());
        const std::string field = text.substr(pos, end - pos);
        if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos) {
            throw PreconditionError("bad demand '" + field + "'");
        }
        out.push_back(std::stoull(field));
        pos = end + 1;
    }
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << text;
    if (!f) throw IoError("error writing '" + path + "'");
}

struct Options {
    // construct
    std::size_t k = 0;
    std::size_t t = 0;
    std::size_t k2 = 0;
    std::string in;
    std::string out;
    // simulate
    std::size_t files = 0;
    std::size_t len = 0;
    std::string demands;
    std::uint64_t seed = 0;
    std::string sim_format = "text";
    // table
    std::string table_id;
    std::string table_format = "csv";
    std::string rows;
    bool reference = false;
};

int emit_constructed(const PdaArray& pda, const Options& opt, std::ostream& out) {
    const auto report = validate(pda);
    write_pda_file(opt.out, pda);
    out << summary_line(report.params) << (report.valid() ? " VALID" : " INVALID") << "\n";
    if (!report.valid()) {
        print_failures(report, out);
        return kInvalid;
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Placement delivery array toolkit", "pdakit"};
    app.require_subcommand(1);
    Options opt;

    auto* construct = app.add_subcommand("construct", "Build a PDA and write it to a file");
    construct->require_subcommand(1);
    auto* c_mn = construct->add_subcommand("mn", "MN array for K users at cache level t");
    c_mn->add_option("--k", opt.k, "users")->required();
    c_mn->add_option("--t", opt.t, "cache level, 1 <= t < K")->required();
    c_mn->add_option("--out", opt.out, "output PDA file")->required();
    auto* c_rec = construct->add_subcommand("recursive", "Extend a PDA by K2 users");
    c_rec->add_option("--in", opt.in, "input PDA file")->required();
    c_rec->add_option("--k2", opt.k2, "added users, 0 < K2 <= K1")->required();
    c_rec->add_option("--out", opt.out, "output PDA file")->required();
    auto* c_dual = construct->add_subcommand("dual", "Row/symbol dual of a PDA");
    c_dual->add_option("--in", opt.in, "input PDA file")->required();
    c_dual->add_option("--out", opt.out, "output PDA file")->required();

    auto* val = app.add_subcommand("validate", "Check the three PDA conditions");
    val->add_option("--in", opt.in, "PDA file")->required();

    auto* sim = app.add_subcommand("simulate", "Run the coded caching scheme of a PDA");
    sim->add_option("--in", opt.in, "PDA file")->required();
    sim->add_option("--files", opt.files, "number of files N")->required();
    sim->add_option("--len", opt.len, "file length in bytes")->required();
    sim->add_option("--demands", opt.demands, "comma-separated demanded files, default k mod N");
    sim->add_option("--seed", opt.seed, "seed for file contents");
    sim->add_option("--format", opt.sim_format, "report format")
        ->check(CLI::IsMember({"text", "jsonl"}));

    auto* table = app.add_subcommand("table", "Print a comparison table");
    table->add_option("--id", opt.table_id, "table id")
        ->required()
        ->check(CLI::IsMember({"mn_vs_ours", "table2", "table3"}));
    table->add_option("--format", opt.table_format, "output format")
        ->check(CLI::IsMember({"csv", "md"}));
    table->add_option("--out", opt.out, "write to file instead of stdout");
    table->add_option("--rows", opt.rows,
                      "rows as 'K1,K2,t;...' ('K1,K2,t,q,m;...' for table3)");
    table->add_flag("--reference", opt.reference, "append published baseline columns");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kPrecondition;
    }

    try {
        if (c_mn->parsed()) return emit_constructed(mn_pda(opt.k, opt.t), opt, out);
        if (c_rec->parsed()) {
            return emit_constructed(recursive_extend(read_pda_file(opt.in), opt.k2), opt, out);
        }
        if (c_dual->parsed()) return emit_constructed(dual(read_pda_file(opt.in)), opt, out);

        if (val->parsed()) {
            const auto report = validate(read_pda_file(opt.in));
            out << summary_line(report.params) << "\n";
            for (const auto& line : report.condition_lines()) out << line << "\n";
            out << (report.valid() ? "VALID" : "INVALID") << "\n";
            return report.valid() ? kOk : kInvalid;
        }

        if (sim->parsed()) {
            const auto pda = read_pda_file(opt.in);
            DemandVector demands = opt.demands.empty()
                                       ? DemandVector::identity(pda.cols(), opt.files)
                                       : DemandVector{parse_demands(opt.demands)};
            const auto report = run_scheme(pda, opt.files, demands, opt.len, opt.seed);
            out << (opt.sim_format == "jsonl" ? report.to_json_lines() : report.to_text());
            return report.all_ok() ? kOk : kInvalid;
        }

        if (table->parsed()) {
            const TableId id = parse_table_id(opt.table_id);
            const auto params = opt.rows.empty() ? default_rows(id) : parse_rows(id, opt.rows);
            const auto rows = make_table(id, params);
            const auto rendered = render(id, rows, opt.reference);
            const std::string text =
                opt.table_format == "md" ? to_markdown(rendered) : to_csv(rendered);
            if (opt.out.empty()) {
                out << text;
            } else {
                write_text(opt.out, text);
            }
            return kOk;
        }
    } catch (const InvalidPdaError& e) {
        err << "error: " << e.what() << "\n";
        print_failures(e.report(), out);
        return kInvalid;
    } catch (const DecodeError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIo;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kIo;
    } catch (const StructuralError& e) {
        err << "error: " << e.what() << "\n";
        return kIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kPrecondition;
    }
    return kPrecondition;
}

}  // namespace pdakit::cli
