#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "higs/errors.hpp"

namespace higs {

/// Shape of a state tensor: rank 1 (d,) for vector problems,
/// rank 3 (C,H,W) for image problems.
struct Shape {
    std::vector<std::size_t> dims;

    Shape() = default;
    Shape(std::initializer_list<std::size_t> d) : dims(d) {}
    explicit Shape(std::vector<std::size_t> d) : dims(std::move(d)) {}

    static Shape vector(std::size_t d) { return Shape{d}; }
    static Shape image(std::size_t c, std::size_t h, std::size_t w) { return Shape{c, h, w}; }

    std::size_t size() const {
        std::size_t n = 1;
        for (auto d : dims) n *= d;
        return dims.empty() ? 0 : n;
    }
    bool is_vector() const { return dims.size() == 1; }
    bool is_image() const { return dims.size() == 3; }

    std::size_t channels() const { return is_image() ? dims[0] : 1; }
    std::size_t height() const { return is_image() ? dims[1] : 1; }
    std::size_t width() const { return is_image() ? dims[2] : dims.empty() ? 0 : dims[0]; }

    bool operator==(const Shape& o) const { return dims == o.dims; }
    bool operator!=(const Shape& o) const { return dims != o.dims; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < dims.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(dims[i]);
        }
        return s + ")";
    }
};

/// Dense double-precision state tensor with value semantics.
/// Holds z_t or a denoiser prediction; shape is fixed at construction.
class Tensor {
  public:
    Tensor() = default;
    Tensor(Shape shape, double fill = 0.0) : shape_(std::move(shape)), data_(shape_.size(), fill) {}
    Tensor(Shape shape, std::vector<double> values) : shape_(std::move(shape)), data_(std::move(values)) {
        if (data_.size() != shape_.size())
            throw ShapeError("tensor data length " + std::to_string(data_.size()) +
                             " does not match shape " + shape_.str());
    }

    static Tensor zeros(const Shape& s) { return Tensor(s, 0.0); }
    static Tensor zeros_like(const Tensor& t) { return Tensor(t.shape(), 0.0); }
    static Tensor full(const Shape& s, double v) { return Tensor(s, v); }
    /// 1-element vector tensor, handy for scalar problems.
    static Tensor scalar(double v) { return Tensor(Shape::vector(1), {v}); }

    const Shape& shape() const { return shape_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }
    std::vector<double>& values() { return data_; }
    const std::vector<double>& values() const { return data_; }

    bool all_finite() const {
        for (double v : data_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    Tensor& operator+=(const Tensor& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Tensor& operator-=(const Tensor& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Tensor& operator*=(double a) {
        for (double& v : data_) v *= a;
        return *this;
    }

    /// this += a * o
    Tensor& axpy(double a, const Tensor& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += a * o.data_[i];
        return *this;
    }

    void check_same_shape(const Tensor& o) const {
        if (shape_ != o.shape_)
            throw ShapeError("shape mismatch: " + shape_.str() + " vs " + o.shape_.str());
    }

  private:
    Shape shape_;
    std::vector<double> data_;
};

inline Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
inline Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
inline Tensor operator*(double s, Tensor a) { return a *= s; }
inline Tensor operator*(Tensor a, double s) { return a *= s; }

inline double dot(const Tensor& a, const Tensor& b) {
    a.check_same_shape(b);
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline double norm2(const Tensor& a) { return std::sqrt(dot(a, a)); }

inline double max_abs_diff(const Tensor& a, const Tensor& b) {
    a.check_same_shape(b);
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace higs
