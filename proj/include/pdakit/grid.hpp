#pragma once

#include "pdakit/error.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace pdakit {

/// Dense row-major matrix with value semantics.
template <typename T>
class Grid {
public:
    Grid() = default;

    Grid(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    Grid(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) {
            throw StructuralError("grid data has " + std::to_string(data_.size()) +
                                  " cells, expected " + std::to_string(rows_ * cols_));
        }
    }

    /// Builds from nested rows; throws StructuralError on ragged input.
    static Grid from_rows(const std::vector<std::vector<T>>& rows) {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        std::vector<T> data;
        data.reserve(rows.size() * cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) {
                throw StructuralError("row " + std::to_string(r) + " has " +
                                      std::to_string(rows[r].size()) + " entries, expected " +
                                      std::to_string(cols));
            }
            data.insert(data.end(), rows[r].begin(), rows[r].end());
        }
        return Grid(rows.size(), cols, std::move(data));
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    std::span<const T> row(std::size_t r) const {
        return std::span<const T>(data_).subspan(r * cols_, cols_);
    }

    std::span<const T> data() const noexcept { return data_; }

    std::vector<std::vector<T>> to_rows() const {
        std::vector<std::vector<T>> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            auto rs = row(r);
            out.emplace_back(rs.begin(), rs.end());
        }
        return out;
    }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IndexGrid = Grid<std::size_t>;

}  // namespace pdakit
