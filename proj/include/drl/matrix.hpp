#pragma once

// Dense row-major matrix used for every weight block. //

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace drl {

struct matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    matrix() = default;
    matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows{r}, cols{c}, data(r * c, fill)
    {
    }

    double& operator()(std::size_t i, std::size_t j)
    {
        assert(i < rows && j < cols);
        return data[i * cols + j];
    }
    double operator()(std::size_t i, std::size_t j) const
    {
        assert(i < rows && j < cols);
        return data[i * cols + j];
    }

    std::span<double> row(std::size_t i) { return {data.data() + i * cols, cols}; }
    std::span<const double> row(std::size_t i) const { return {data.data() + i * cols, cols}; }

    bool square() const { return rows == cols; }

    friend bool operator==(const matrix&, const matrix&) = default;
};

}  // namespace drl
