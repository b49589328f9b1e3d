#include "pdakit/constructions.hpp"
#include "pdakit/error.hpp"
#include "pdakit/pda.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace pdakit;

namespace {

const std::string kExample1Text =
    "PDA v1\n"
    "K=4 F=6 Z=3 S=4\n"
    "* * 0 1\n"
    "* 0 * 2\n"
    "* 1 2 *\n"
    "0 * * 3\n"
    "1 * 3 *\n"
    "2 3 * *\n";

PdaArray with_entry(const PdaArray& p, std::size_t j, std::size_t k, Entry e) {
    Grid<Entry> g = p.entries();
    g(j, k) = e;
    return PdaArray(std::move(g), p.claimed_z(), p.claimed_s());
}

// Smallest violating pair by exhaustive search over ordered cell pairs.
std::optional<CellPair> brute_force_first_violation(const PdaArray& p) {
    std::optional<CellPair> best;
    for (std::size_t j1 = 0; j1 < p.rows(); ++j1) {
        for (std::size_t k1 = 0; k1 < p.cols(); ++k1) {
            for (std::size_t j2 = 0; j2 < p.rows(); ++j2) {
                for (std::size_t k2 = 0; k2 < p.cols(); ++k2) {
                    const Cell a{j1, k1};
                    const Cell b{j2, k2};
                    if (!(a < b) || !oracles::violates_c3(p, a, b)) continue;
                    const CellPair cand{a, b};
                    if (!best || cand < *best) best = cand;
                }
            }
        }
    }
    return best;
}

}  // namespace

TEST_CASE("the first worked example is a (4,6,3,4) PDA") {
    const auto report = validate(fixtures::example1());
    CHECK(report.c1_ok);
    CHECK(report.c2_ok);
    CHECK(report.c3_ok);
    CHECK(report.valid());
    CHECK(report.params == PdaParams{4, 6, 3, 4});
    CHECK(report.memory_ratio() == Rational(1, 2));
    CHECK(report.rate() == Rational(2, 3));
}

TEST_CASE("a single star with S=0 is a (1,1,1,0) PDA") {
    const auto p = PdaArray::from_rows({{Entry::star()}}, 1, 0);
    const auto report = validate(p);
    CHECK(report.valid());
    CHECK(report.params == PdaParams{1, 1, 1, 0});
    CHECK(report.rate() == 0);
}

TEST_CASE("C3 witness is the lexicographically first violating pair") {
    const auto p = with_entry(fixtures::example1(), 0, 2, Entry::symbol(3));
    const auto report = validate(p);
    CHECK(report.c1_ok);
    CHECK(report.c2_ok);
    REQUIRE_FALSE(report.c3_ok);
    REQUIRE(report.c3_witness);
    CHECK(report.c3_witness->first == Cell{0, 2});
    CHECK(report.c3_witness->second == Cell{3, 3});
    CHECK(oracles::violates_c3(p, report.c3_witness->first, report.c3_witness->second));
    CHECK(report.condition_lines()[2] == "C3 FAIL at (0,2),(3,3)");
}

TEST_CASE("C1 and C2 failures carry witnesses") {
    SUBCASE("column with too few stars") {
        const auto p = with_entry(fixtures::example1(), 1, 2, Entry::symbol(3));
        const auto report = validate(p);
        REQUIRE_FALSE(report.c1_ok);
        CHECK(report.c1_witness->column == 2);
        CHECK(report.c1_witness->stars == 2);
    }
    SUBCASE("claimed S larger than the symbols used") {
        const auto base = fixtures::example1();
        const PdaArray p(base.entries(), 3, 6);
        const auto report = validate(p);
        CHECK(report.c1_ok);
        CHECK(report.c3_ok);
        REQUIRE_FALSE(report.c2_ok);
        CHECK(report.c2_missing == std::vector<std::uint64_t>{4, 5});
    }
    SUBCASE("claimed Z wrong") {
        const auto base = fixtures::example1();
        const auto report = validate(PdaArray(base.entries(), 2, 4));
        CHECK_FALSE(report.c1_ok);
        CHECK(report.c1_witness->column == 0);
    }
}

TEST_CASE("malformed grids are structural errors, not validation failures") {
    CHECK_THROWS_AS(PdaArray::from_rows({{Entry::star(), Entry::star()}, {Entry::star()}}, 1, 0),
                    StructuralError);
    CHECK_THROWS_AS(PdaArray::from_rows({{Entry::symbol(2)}}, 0, 2), StructuralError);
    CHECK_THROWS_AS(PdaArray(Grid<Entry>(2, 2, std::vector<Entry>(3)), 0, 0), StructuralError);
    CHECK_THROWS_AS(PdaArray(Grid<Entry>(), 0, 0), StructuralError);
}

TEST_CASE("validation verdict matches exhaustive enumeration on random arrays") {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    std::size_t valid_seen = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const std::size_t f = dim(rng);
        const std::size_t k = dim(rng);
        const std::size_t s = std::uniform_int_distribution<std::size_t>(0, f * k / 2 + 1)(rng);
        const std::size_t z = std::uniform_int_distribution<std::size_t>(0, f)(rng);
        const auto p = oracles::random_array(rng, f, k, s, 0.5, z);
        const auto report = validate(p);
        CHECK(report.valid() == oracles::brute_force_is_pda(p));
        CHECK(report.c3_witness == brute_force_first_violation(p));
        valid_seen += report.valid();
    }
    // Mutations of valid arrays exercise the boundary between valid and invalid.
    std::vector<PdaArray> seeds{fixtures::example1(), fixtures::example2_base(),
                                fixtures::example3_base(), mn_pda(5, 2), mn_pda(6, 1)};
    for (int trial = 0; trial < 2000; ++trial) {
        const auto& base = seeds[trial % seeds.size()];
        std::uniform_int_distribution<std::size_t> row(0, base.rows() - 1);
        std::uniform_int_distribution<std::size_t> col(0, base.cols() - 1);
        std::uniform_int_distribution<std::uint64_t> sym(0, base.claimed_s());
        const std::uint64_t v = sym(rng);
        const Entry e = v == base.claimed_s() ? Entry::star() : Entry::symbol(v);
        const auto p = with_entry(base, row(rng), col(rng), e);
        const auto report = validate(p);
        CHECK(report.valid() == oracles::brute_force_is_pda(p));
        CHECK(report.c3_witness == brute_force_first_violation(p));
        valid_seen += report.valid();
    }
    CHECK(valid_seen > 0);
}

TEST_CASE("valid arrays satisfy the derived counting properties") {
    for (const auto& p : {fixtures::example1(), fixtures::example2_result(),
                          fixtures::example3_result(), mn_pda(7, 3)}) {
        REQUIRE(validate(p).valid());
        std::set<std::uint64_t> distinct;
        for (std::size_t k = 0; k < p.cols(); ++k) {
            std::set<std::uint64_t> in_column;
            std::size_t symbols = 0;
            for (std::size_t j = 0; j < p.rows(); ++j) {
                const Entry e = p.at(j, k);
                if (e.is_star()) continue;
                ++symbols;
                CHECK(in_column.insert(e.value()).second);
                distinct.insert(e.value());
            }
            CHECK(symbols == p.rows() - p.claimed_z());
        }
        CHECK(distinct.size() == p.claimed_s());
    }
}

TEST_CASE("parse reads the canonical format") {
    const auto p = parse(kExample1Text);
    CHECK(p.rows() == 6);
    CHECK(p.cols() == 4);
    CHECK(p == fixtures::example1());

    const auto one = parse("PDA v1\nK=1 F=1 Z=1 S=0\n*\n");
    CHECK(one.rows() == 1);
    CHECK(one.at(0, 0).is_star());

    // A missing final newline is tolerated.
    CHECK(parse("PDA v1\nK=1 F=1 Z=1 S=0\n*") == one);
}

TEST_CASE("parse does not validate") {
    const auto p = parse("PDA v1\nK=2 F=1 Z=0 S=1\n0 0\n");
    CHECK_FALSE(validate(p).valid());
}

TEST_CASE("parse rejects malformed input") {
    const std::string five_rows = "PDA v1\nK=4 F=6 Z=3 S=4\n* * 0 1\n* 0 * 2\n* 1 2 *\n0 * * 3\n1 * 3 *\n";
    CHECK_THROWS_AS(parse(five_rows), ParseError);
    CHECK_THROWS_AS(parse(kExample1Text + "2 3 * *\n"), ParseError);
    CHECK_THROWS_AS(parse("PDA v2\nK=1 F=1 Z=1 S=0\n*\n"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("PDA v1\n"), ParseError);
    CHECK_THROWS_AS(parse("PDA v1\nK=1 F=1 Z=1\n*\n"), ParseError);
    CHECK_THROWS_AS(parse("PDA v1\nF=1 K=1 Z=1 S=0\n*\n"), ParseError);
    CHECK_THROWS_AS(parse("PDA v1\nK=1  F=1 Z=1 S=0\n*\n"), ParseError);
    CHECK_THROWS_AS(parse("PDA v1\nK=1 F=1 Z=1 S=0\nx\n"), ParseError);
    CHECK_THROWS_AS(parse("PDA v1\nK=1 F=1 Z=0 S=1\n-1\n"), ParseError);
    CHECK_THROWS_AS(parse("PDA v1\nK=1 F=1 Z=0 S=1\n1\n"), ParseError);
    CHECK_THROWS_AS(parse("PDA v1\nK=2 F=1 Z=1 S=0\n* * \n"), ParseError);
    CHECK_THROWS_AS(parse("PDA v1\nK=2 F=1 Z=1 S=0\n*\n"), ParseError);
    CHECK_THROWS_AS(parse("PDA v1\nK=1 F=1 Z=2 S=0\n*\n"), ParseError);
    CHECK_THROWS_AS(parse("PDA v1\nK=0 F=1 Z=0 S=0\n\n"), ParseError);
}

TEST_CASE("serialize writes the canonical format") {
    CHECK(serialize(fixtures::example1()) == kExample1Text);
    CHECK(serialize(PdaArray::from_rows({{Entry::star()}}, 1, 0)) == "PDA v1\nK=1 F=1 Z=1 S=0\n*\n");
    const auto big = fixtures::example3_result();
    const auto text = serialize(big);
    CHECK(text.starts_with("PDA v1\nK=10 F=12 Z=6 S=20\n* * * 12 1 2 * * * 0\n"));
    CHECK(parse(text) == big);
}

TEST_CASE("parse(serialize(P)) == P for random arrays") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> dim(1, 9);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t f = dim(rng);
        const std::size_t k = dim(rng);
        const std::size_t s = std::uniform_int_distribution<std::size_t>(0, 1000)(rng);
        const std::size_t z = std::uniform_int_distribution<std::size_t>(0, f)(rng);
        const auto p = oracles::random_array(rng, f, k, s, 0.3, z);
        const auto text = serialize(p);
        const auto back = parse(text);
        CHECK(back == p);
        CHECK(serialize(back) == text);
    }
}

TEST_CASE("validate is deterministic") {
    const auto p = with_entry(fixtures::example3_result(), 4, 4, Entry::symbol(0));
    const auto a = validate(p);
    const auto b = validate(p);
    CHECK(a.c3_witness == b.c3_witness);
    CHECK(a.condition_lines() == b.condition_lines());
}

TEST_CASE("symbol occurrences are row-major") {
    const auto occ = fixtures::example1().symbol_occurrences();
    REQUIRE(occ.size() == 4);
    CHECK(occ[0] == std::vector<Cell>{{0, 2}, {1, 1}, {3, 0}});
    CHECK(occ[3] == std::vector<Cell>{{3, 3}, {4, 2}, {5, 1}});
}

TEST_CASE("require_valid throws with the report attached") {
    const auto p = with_entry(fixtures::example1(), 0, 2, Entry::symbol(3));
    try {
        require_valid(p, "test");
        FAIL("expected InvalidPdaError");
    } catch (const InvalidPdaError& e) {
        CHECK_FALSE(e.report().c3_ok);
        CHECK(std::string(e.what()).find("C3 FAIL at (0,2),(3,3)") != std::string::npos);
    }
}
