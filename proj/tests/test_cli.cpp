#include "cli.hpp"

#include "pdakit/pda.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace pdakit;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) { return std::string(PDAKIT_TEST_TMPDIR) + "/cli_" + name; }

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << text;
}

}  // namespace

TEST_CASE("construct mn writes the first worked example") {
    const auto path = tmp("p.pda");
    const auto r = run({"construct", "mn", "--k", "4", "--t", "2", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out == "(4,6,3,4) M/N=1/2 R=2/3 VALID\n");
    CHECK(slurp(path) == serialize(fixtures::example1()));
}

TEST_CASE("construct recursive and dual") {
    const auto base = tmp("p346.pda");
    write_pda_file(base, fixtures::example3_base());
    auto r = run({"construct", "recursive", "--in", base, "--k2", "4", "--out", tmp("q.pda")});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("(10,12,6,20) ", 0) == 0);
    CHECK(read_pda_file(tmp("q.pda")) == fixtures::example3_result());

    write_pda_file(tmp("e1.pda"), fixtures::example1());
    r = run({"construct", "dual", "--in", tmp("e1.pda"), "--out", tmp("d.pda")});
    CHECK(r.code == 0);
    CHECK(r.out == "(4,4,1,6) M/N=1/4 R=3/2 VALID\n");

    spit(tmp("onebyone.pda"), "PDA v1\nK=1 F=1 Z=1 S=0\n*\n");
    r = run({"construct", "dual", "--in", tmp("onebyone.pda"), "--out", tmp("x.pda")});
    CHECK(r.code == 1);
}

TEST_CASE("construct errors map to exit codes") {
    CHECK(run({"construct", "mn", "--k", "4", "--t", "4", "--out", tmp("bad.pda")}).code == 1);
    CHECK(run({"construct", "recursive", "--in", tmp("missing.pda"), "--k2", "1", "--out",
               tmp("bad.pda")}).code == 3);
    write_pda_file(tmp("broken.pda"), PdaArray(fixtures::example1().entries(), 2, 4));
    const auto r = run({"construct", "recursive", "--in", tmp("broken.pda"), "--k2", "1", "--out",
                        tmp("bad.pda")});
    CHECK(r.code == 2);
    CHECK(r.out.find("C1 FAIL") != std::string::npos);
}

TEST_CASE("validate reports conditions") {
    write_pda_file(tmp("e1.pda"), fixtures::example1());
    auto r = run({"validate", "--in", tmp("e1.pda")});
    CHECK(r.code == 0);
    CHECK(r.out == "(4,6,3,4) M/N=1/2 R=2/3\nC1 OK\nC2 OK\nC3 OK\nVALID\n");

    // Copy symbol 0 from (0,2) onto (3,3), which breaks only the repeated-symbol condition.
    auto rows = fixtures::example1().entries().to_rows();
    rows[3][3] = Entry::symbol(0);
    rows[0][2] = Entry::symbol(0);
    rows[3][0] = Entry::symbol(3);
    write_pda_file(tmp("corrupted.pda"), PdaArray::from_rows(rows, 3, 4));
    r = run({"validate", "--in", tmp("corrupted.pda")});
    CHECK(r.code == 2);
    CHECK(r.out.find("C3 FAIL at (0,2),(3,3)") != std::string::npos);
    CHECK(r.out.find("INVALID") != std::string::npos);

    spit(tmp("garbage.pda"), "PDA v2\n");
    CHECK(run({"validate", "--in", tmp("garbage.pda")}).code == 3);
}

TEST_CASE("simulate") {
    write_pda_file(tmp("e1.pda"), fixtures::example1());
    const std::vector<std::string> args{"simulate", "--in", tmp("e1.pda"), "--files", "6",
                                        "--len", "600", "--demands", "0,1,2,3", "--seed", "7"};
    const auto r = run(args);
    CHECK(r.code == 0);
    CHECK(r.out == "user0 OK\nuser1 OK\nuser2 OK\nuser3 OK\nrate=4/6 bytes=400\n");
    CHECK(run(args).out == r.out);

    const auto j = run({"simulate", "--in", tmp("e1.pda"), "--files", "2", "--len", "60",
                        "--format", "jsonl"});
    CHECK(j.code == 0);
    CHECK(j.out.find(R"({"user":3,"ok":true,"rate_num":4,"rate_den":6,"bytes_sent":40})") !=
          std::string::npos);

    CHECK(run({"simulate", "--in", tmp("e1.pda"), "--files", "2", "--len", "60", "--demands",
               "0,1,5,0"}).code == 1);
    CHECK(run({"simulate", "--in", tmp("e1.pda"), "--files", "2", "--len", "60", "--demands",
               "0,x"}).code == 1);
    CHECK(run({"simulate", "--in", tmp("e1.pda"), "--files", "2", "--len", "60", "--format",
               "xml"}).code == 1);
}

TEST_CASE("table") {
    const auto r = run({"table", "--id", "mn_vs_ours", "--format", "md"});
    CHECK(r.code == 0);
    CHECK(r.out.find("| 48 | 32 | 16 | 1.4118 | 0.9600 | 1202160780 | 32247603683100 |") !=
          std::string::npos);

    const auto path = tmp("t2.csv");
    CHECK(run({"table", "--id", "table2", "--out", path}).code == 0);
    CHECK(slurp(path).rfind("K,K1,K2,h1,h2,t,M/N,R,R1_MN,F,F1_MN\n18,12,6,2,1,9,3/4,0.450,", 0) == 0);

    const auto custom = run({"table", "--id", "table3", "--rows", "12,6,9,6,2"});
    CHECK(custom.code == 0);
    CHECK(custom.out.find("18,12,6,9,6,2,3/4,0.600,0.450,") != std::string::npos);

    CHECK(run({"table", "--id", "table9"}).code == 1);
    CHECK(run({"table", "--id", "table2", "--out", "/nonexistent/dir/t.csv"}).code == 3);
}

TEST_CASE("argument errors") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"construct", "mn", "--k", "4", "--t", "2", "--out", tmp("a.pda"), "--bogus"}).code == 1);
    CHECK(run({"validate"}).code == 1);
}
