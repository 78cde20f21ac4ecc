#pragma once

#include <optional>

#include "higs/errors.hpp"
#include "higs/tensor.hpp"

namespace higs {

/// Optional integer class label; empty = unconditional.
using ConditionLabel = std::optional<int>;

/// Denoiser contract D(z, t, y): estimate of E[x | z_t] for z_t = x + t*eps.
/// Implementations must be pure and preserve the input shape.
class Denoiser {
  public:
    virtual ~Denoiser() = default;
    virtual Tensor denoise(const Tensor& z, double t, ConditionLabel y = std::nullopt) const = 0;
    virtual Shape state_shape() const = 0;
};

/// score = grad log p_t(z) = (D(z,t) - z) / t^2 under sigma(t) = t.
inline Tensor score_from_denoiser(const Tensor& d_out, const Tensor& z, double t) {
    if (!(t > 0.0)) throw DomainError("score requires t > 0");
    d_out.check_same_shape(z);
    Tensor s = d_out;
    s -= z;
    s *= 1.0 / (t * t);
    return s;
}

/// D reconstructed from the score: D = z + t^2 * score.
inline Tensor denoiser_from_score(const Tensor& score, const Tensor& z, double t) {
    if (!(t > 0.0)) throw DomainError("t must be positive");
    Tensor d = z;
    d.axpy(t * t, score);
    return d;
}

/// Drift u(z,t) = t * grad log p_t(z) = (D(z,t) - z) / t.
/// The sampling ODE is dz = -u dt; the Euler step is z_{k+1} = z_k + h_k * u.
inline Tensor drift_from_prediction(const Tensor& pred, const Tensor& z, double t) {
    if (!(t > 0.0)) throw DomainError("drift requires t > 0");
    pred.check_same_shape(z);
    Tensor u = pred;
    u -= z;
    u *= 1.0 / t;
    return u;
}

inline Tensor drift(const Tensor& z, double t, const Denoiser& d, ConditionLabel y = std::nullopt) {
    return drift_from_prediction(d.denoise(z, t, y), z, t);
}

}  // namespace higs
