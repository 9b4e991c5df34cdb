#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace chm {

/// Dense 2-D grid of doubles in row-major order. The only tensor type in
/// the library; everything (task blocks, reordering matrices, weights,
/// gradients, Adam moments) is one of these.
class ValueGrid {
public:
    ValueGrid() = default;
    ValueGrid(int rows, int cols);
    ValueGrid(int rows, int cols, std::vector<double> data);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    double& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    double at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::vector<double>& raw() { return data_; }
    const std::vector<double>& raw() const { return data_; }

    void fill(double v);
    bool same_shape(const ValueGrid& other) const;
    bool all_finite() const;

    ValueGrid transposed() const;

    std::string shape_str() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

/// C = A * B. Throws DimensionError on inner-dimension mismatch.
ValueGrid matmul_grids(const ValueGrid& a, const ValueGrid& b);

void check_same_shape(const ValueGrid& a, const ValueGrid& b, const char* op);

}  // namespace chm
