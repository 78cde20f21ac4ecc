#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "higs/errors.hpp"
#include "higs/tensor.hpp"

namespace higs {

namespace detail {

// Orthonormal DCT-II basis: table[u*n + x] = a(u) * cos(pi*(2x+1)*u / (2n))
// with a(0) = sqrt(1/n), a(u>0) = sqrt(2/n).
inline std::vector<double> dct_basis(std::size_t n) {
    std::vector<double> table(n * n);
    const double pi = std::numbers::pi;
    for (std::size_t u = 0; u < n; ++u) {
        double a = std::sqrt((u == 0 ? 1.0 : 2.0) / static_cast<double>(n));
        for (std::size_t x = 0; x < n; ++x)
            table[u * n + x] = a * std::cos(pi * (2.0 * x + 1.0) * u / (2.0 * n));
    }
    return table;
}

// Strided input, contiguous output.
inline void dct_pass(const double* in, double* out, std::size_t n, std::size_t in_stride,
                     const std::vector<double>& basis, bool inverse) {
    for (std::size_t u = 0; u < n; ++u) {
        double acc = 0.0;
        if (!inverse) {
            for (std::size_t x = 0; x < n; ++x) acc += basis[u * n + x] * in[x * in_stride];
        } else {
            // DCT-III: transpose of the orthonormal DCT-II matrix
            for (std::size_t x = 0; x < n; ++x) acc += basis[x * n + u] * in[x * in_stride];
        }
        out[u] = acc;
    }
}

inline Tensor dct2_impl(const Tensor& x, bool inverse) {
    if (!x.shape().is_image()) throw ShapeError("dct2 expects a (C,H,W) image, got " + x.shape().str());
    const std::size_t C = x.shape().channels(), H = x.shape().height(), W = x.shape().width();
    const auto row_basis = dct_basis(W);
    const auto col_basis = (H == W) ? row_basis : dct_basis(H);

    Tensor out = x;
    std::vector<double> tmp(std::max(H, W));
    for (std::size_t c = 0; c < C; ++c) {
        double* plane = out.data() + c * H * W;
        for (std::size_t r = 0; r < H; ++r) {
            dct_pass(plane + r * W, tmp.data(), W, 1, row_basis, inverse);
            std::copy(tmp.begin(), tmp.begin() + W, plane + r * W);
        }
        for (std::size_t col = 0; col < W; ++col) {
            dct_pass(plane + col, tmp.data(), H, W, col_basis, inverse);
            for (std::size_t r = 0; r < H; ++r) plane[r * W + col] = tmp[r];
        }
    }
    return out;
}

}  // namespace detail

/// Orthonormal 2D DCT-II applied per channel.
inline Tensor dct2(const Tensor& x) { return detail::dct2_impl(x, false); }

/// Exact inverse of dct2 (orthonormal DCT-III per channel).
inline Tensor idct2(const Tensor& X) { return detail::dct2_impl(X, true); }

/// Orthonormal 1D DCT-II / inverse for vector states.
inline Tensor dct1(const Tensor& x) {
    if (!x.shape().is_vector()) throw ShapeError("dct1 expects a vector state");
    const std::size_t n = x.size();
    const auto basis = detail::dct_basis(n);
    Tensor out = x;
    detail::dct_pass(x.data(), out.data(), n, 1, basis, false);
    return out;
}

inline Tensor idct1(const Tensor& X) {
    if (!X.shape().is_vector()) throw ShapeError("idct1 expects a vector state");
    const std::size_t n = X.size();
    const auto basis = detail::dct_basis(n);
    Tensor out = X;
    detail::dct_pass(X.data(), out.data(), n, 1, basis, true);
    return out;
}

}  // namespace higs
