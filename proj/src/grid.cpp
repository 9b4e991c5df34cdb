#include "chameleon/grid.hpp"

#include <algorithm>
#include <cmath>

#include "chameleon/error.hpp"

namespace chm {

ValueGrid::ValueGrid(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {
    if (rows < 0 || cols < 0) throw DimensionError("ValueGrid: negative dimension");
}

ValueGrid::ValueGrid(int rows, int cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != static_cast<std::size_t>(rows) * cols)
        throw DimensionError("ValueGrid: data length " + std::to_string(data_.size()) +
                             " does not match " + std::to_string(rows) + "x" + std::to_string(cols));
}

void ValueGrid::fill(double v) { std::fill(data_.begin(), data_.end(), v); }

bool ValueGrid::same_shape(const ValueGrid& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
}

bool ValueGrid::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

ValueGrid ValueGrid::transposed() const {
    ValueGrid t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

std::string ValueGrid::shape_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
}

ValueGrid matmul_grids(const ValueGrid& a, const ValueGrid& b) {
    if (a.cols() != b.rows())
        throw DimensionError("matmul: " + a.shape_str() + " * " + b.shape_str());
    ValueGrid c(a.rows(), b.cols());
    // i-k-j order keeps the inner loop contiguous on both b and c.
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a.at(i, k);
            if (aik == 0.0) continue;
            const double* brow = b.data() + static_cast<std::size_t>(k) * b.cols();
            double* crow = c.data() + static_cast<std::size_t>(i) * c.cols();
            for (int j = 0; j < b.cols(); ++j) crow[j] += aik * brow[j];
        }
    }
    return c;
}

void check_same_shape(const ValueGrid& a, const ValueGrid& b, const char* op) {
    if (!a.same_shape(b))
        throw DimensionError(std::string(op) + ": shape mismatch " + a.shape_str() + " vs " +
                             b.shape_str());
}

}  // namespace chm
