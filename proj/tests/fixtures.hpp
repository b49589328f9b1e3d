#pragma once

// Arrays and label matrices as printed in the worked examples, transcribed by
// hand. Rows are whitespace-separated tokens, "*" for a star.

#include "pdakit/grid.hpp"
#include "pdakit/pda.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace fixtures {

inline std::vector<std::vector<std::string>> tokens(const std::vector<std::string>& rows) {
    std::vector<std::vector<std::string>> out;
    for (const auto& r : rows) {
        std::istringstream in(r);
        std::vector<std::string> row;
        for (std::string tok; in >> tok;) row.push_back(tok);
        out.push_back(row);
    }
    return out;
}

inline pdakit::PdaArray array(const std::vector<std::string>& rows, std::size_t z, std::size_t s) {
    std::vector<std::vector<pdakit::Entry>> grid;
    for (const auto& row : tokens(rows)) {
        std::vector<pdakit::Entry> r;
        for (const auto& tok : row) {
            r.push_back(tok == "*" ? pdakit::Entry::star() : pdakit::Entry::symbol(std::stoull(tok)));
        }
        grid.push_back(r);
    }
    return pdakit::PdaArray::from_rows(grid, z, s);
}

inline pdakit::IndexGrid index_grid(const std::vector<std::string>& rows) {
    std::vector<std::vector<std::size_t>> grid;
    for (const auto& row : tokens(rows)) {
        std::vector<std::size_t> r;
        for (const auto& tok : row) r.push_back(std::stoull(tok));
        grid.push_back(r);
    }
    return pdakit::IndexGrid::from_rows(grid);
}

// (4,6,3,4) array of the first worked example.
inline pdakit::PdaArray example1() {
    return array({"* * 0 1",
                  "* 0 * 2",
                  "* 1 2 *",
                  "0 * * 3",
                  "1 * 3 *",
                  "2 3 * *"},
                 3, 4);
}

// (3,3,1,3) base array of the second example.
inline pdakit::PdaArray example2_base() {
    return array({"* 0 1",
                  "0 * 2",
                  "1 2 *"},
                 1, 3);
}

// (5,9,3,15) result displayed in the second example.
inline pdakit::PdaArray example2_result() {
    return array({"*  9  1  * 0",
                  "9  *  2  0 *",
                  "10 11 *  1 2",
                  "*  3  10 4 *",
                  "12 *  11 5 3",
                  "13 5  *  * 4",
                  "*  12 13 6 7",
                  "6  *  14 * 8",
                  "7  14 *  8 *"},
                 3, 15);
}

inline pdakit::IndexGrid example2_a() {
    return index_grid({"0 1 2 0 1",
                       "0 1 2 2 0",
                       "0 1 2 1 2"});
}

inline pdakit::IndexGrid example2_b() {
    return index_grid({"3 3 0 0 0",
                       "4 1 3 1 1",
                       "2 4 4 2 2"});
}

inline pdakit::IndexGrid example3_a() {
    return index_grid({"0 1 2 3 4 5 0 1 2 3",
                       "0 1 2 3 4 5 4 5 0 1",
                       "0 1 2 3 4 5 2 3 4 5"});
}

inline pdakit::IndexGrid example3_b() {
    return index_grid({"3 3 3 3 0 0 0 0 0 0",
                       "4 4 1 1 3 3 1 1 1 1",
                       "2 2 4 4 4 4 2 2 2 2"});
}

// (6,4,2,4) base array of the third example.
inline pdakit::PdaArray example3_base() {
    return array({"* * * 0 1 2",
                  "* 0 1 * * 3",
                  "0 * 2 * 3 *",
                  "1 2 * 3 * *"},
                 2, 4);
}

// (10,12,6,20) result displayed in the third example.
inline pdakit::PdaArray example3_result() {
    return array({"*  *  *  12 1  2  *  *  *  0",
                  "*  12 13 *  *  3  *  0  1  *",
                  "12 *  14 *  3  *  0  *  2  *",
                  "13 14 *  15 *  *  1  2  *  3",
                  "*  *  *  4  13 14 5  6  *  *",
                  "*  16 5  *  *  15 *  7  *  4",
                  "16 *  6  *  15 *  7  *  4  *",
                  "17 18 *  7  *  *  *  *  5  6",
                  "*  *  *  16 17 18 *  8  9  10",
                  "*  8  17 *  *  19 9  *  *  11",
                  "8  *  18 *  19 *  10 *  11 *",
                  "9  10 *  19 *  *  *  11 *  *"},
                 6, 20);
}

}  // namespace fixtures
