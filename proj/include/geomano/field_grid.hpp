#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "geomano/errors.hpp"

namespace geomano {

// Dense rank-4 array of 64-bit floats, shape (batch, height, width, channels),
// row-major with channels fastest. The one tensor type of the library:
// matrices live as (1,1,rows,cols), vectors as (1,1,1,n), scalars as (1,1,1,1),
// flattened length-L sequences as (B,1,L,C). State-expanded scan coefficients
// pack the (dstate s, channel e) pair into channels as c = s*ED + e.
class FieldGrid {
public:
    FieldGrid() = default;

    FieldGrid(int b, int h, int w, int c) : dims_{b, h, w, c} {
        require(b >= 1 && h >= 1 && w >= 1 && c >= 1, "FieldGrid: dims must be >= 1");
        data_.assign(static_cast<std::size_t>(size()), 0.0);
    }

    static FieldGrid zeros_like(const FieldGrid& o) {
        return FieldGrid(o.dims_[0], o.dims_[1], o.dims_[2], o.dims_[3]);
    }
    static FieldGrid full(int b, int h, int w, int c, double v) {
        FieldGrid g(b, h, w, c);
        for (auto& x : g.data_) x = v;
        return g;
    }
    static FieldGrid matrix(int rows, int cols) { return FieldGrid(1, 1, rows, cols); }
    static FieldGrid vec(int n) { return FieldGrid(1, 1, 1, n); }
    static FieldGrid scalar(double v) {
        FieldGrid g(1, 1, 1, 1);
        g.data_[0] = v;
        return g;
    }

    int batch() const { return dims_[0]; }
    int height() const { return dims_[1]; }
    int width() const { return dims_[2]; }
    int channels() const { return dims_[3]; }
    const std::array<int, 4>& shape() const { return dims_; }

    std::int64_t size() const {
        return static_cast<std::int64_t>(dims_[0]) * dims_[1] * dims_[2] * dims_[3];
    }
    bool empty() const { return data_.empty(); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    std::int64_t index(int b, int h, int w, int c) const {
        return ((static_cast<std::int64_t>(b) * dims_[1] + h) * dims_[2] + w) * dims_[3] + c;
    }
    double& at(int b, int h, int w, int c) { return data_[static_cast<std::size_t>(index(b, h, w, c))]; }
    double at(int b, int h, int w, int c) const { return data_[static_cast<std::size_t>(index(b, h, w, c))]; }
    double& operator[](std::int64_t i) { return data_[static_cast<std::size_t>(i)]; }
    double operator[](std::int64_t i) const { return data_[static_cast<std::size_t>(i)]; }

    bool same_shape(const FieldGrid& o) const { return dims_ == o.dims_; }

    // Reinterprets the flat buffer under a new shape of equal size.
    FieldGrid reshaped(int b, int h, int w, int c) const {
        require(static_cast<std::int64_t>(b) * h * w * c == size(), "reshape: size mismatch");
        FieldGrid g;
        g.dims_ = {b, h, w, c};
        g.data_ = data_;
        return g;
    }

    bool all_finite() const;
    double max_abs() const;
    double max_abs_diff(const FieldGrid& o) const;

    void fill(double v) {
        for (auto& x : data_) x = v;
    }
    void add_scaled(const FieldGrid& o, double s);

private:
    std::array<int, 4> dims_{0, 0, 0, 0};
    std::vector<double> data_;
};

// Throws NumericError when a grid holds NaN/Inf; `what` names the operation.
void check_finite(const FieldGrid& g, const char* what);

} // namespace geomano
