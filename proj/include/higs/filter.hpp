#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "higs/dct.hpp"
#include "higs/errors.hpp"
#include "higs/tensor.hpp"

namespace higs {

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

/// Radial sigmoid high-pass mask over DCT coordinates:
///   mask[u,v] = sigmoid(lambda * (sqrt((u/H)^2 + (v/W)^2) - r_c)).
/// Entries lie in (0,1) and increase with radial frequency.
struct FreqMask {
    std::size_t height = 0;
    std::size_t width = 0;
    double r_c = 0.05;
    double sharpness = 50.0;
    std::vector<double> values;  // height*width, row-major

    FreqMask() = default;
    FreqMask(std::size_t h, std::size_t w, double threshold, double lambda)
        : height(h), width(w), r_c(threshold), sharpness(lambda), values(h * w) {
        if (h < 1 || w < 1) throw ShapeError("mask needs H,W >= 1");
        if (!(lambda > 0.0)) throw ConfigError("mask sharpness must be positive");
        for (std::size_t u = 0; u < h; ++u) {
            double fu = static_cast<double>(u) / static_cast<double>(h);
            for (std::size_t v = 0; v < w; ++v) {
                double fv = static_cast<double>(v) / static_cast<double>(w);
                double d = std::sqrt(fu * fu + fv * fv);
                values[u * w + v] = sigmoid(sharpness * (d - r_c));
            }
        }
    }

    bool matches(std::size_t h, std::size_t w, double threshold, double lambda) const {
        return height == h && width == w && r_c == threshold && sharpness == lambda;
    }

    double at(std::size_t u, std::size_t v) const { return values[u * width + v]; }
};

inline FreqMask highpass_mask(std::size_t h, std::size_t w, double r_c, double lambda) {
    return FreqMask(h, w, r_c, lambda);
}

/// 1D analogue with radius u/N.
struct FreqMask1D {
    std::size_t length = 0;
    double r_c = 0.05;
    double sharpness = 50.0;
    std::vector<double> values;

    FreqMask1D() = default;
    FreqMask1D(std::size_t n, double threshold, double lambda)
        : length(n), r_c(threshold), sharpness(lambda), values(n) {
        if (n < 1) throw ShapeError("mask needs N >= 1");
        if (!(lambda > 0.0)) throw ConfigError("mask sharpness must be positive");
        for (std::size_t u = 0; u < n; ++u)
            values[u] = sigmoid(sharpness * (static_cast<double>(u) / static_cast<double>(n) - r_c));
    }
};

/// iDCT(mask * DCT(delta)), mask broadcast over channels.
inline Tensor filter_update(const Tensor& delta, const FreqMask& mask) {
    if (!delta.shape().is_image())
        throw ShapeError("filter_update expects a (C,H,W) image, got " + delta.shape().str());
    const std::size_t C = delta.shape().channels(), H = delta.shape().height(), W = delta.shape().width();
    if (mask.height != H || mask.width != W)
        throw ShapeError("mask size does not match image " + delta.shape().str());
    Tensor X = dct2(delta);
    for (std::size_t c = 0; c < C; ++c) {
        double* plane = X.data() + c * H * W;
        for (std::size_t i = 0; i < H * W; ++i) plane[i] *= mask.values[i];
    }
    return idct2(X);
}

inline Tensor filter_update_1d(const Tensor& delta, const FreqMask1D& mask) {
    if (!delta.shape().is_vector()) throw ShapeError("filter_update_1d expects a vector state");
    if (mask.length != delta.size()) throw ShapeError("mask length does not match state");
    Tensor X = dct1(delta);
    for (std::size_t i = 0; i < X.size(); ++i) X[i] *= mask.values[i];
    return idct1(X);
}

}  // namespace higs
