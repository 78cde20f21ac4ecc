#pragma once

#include "higs/tensor.hpp"

namespace higs {

/// Decompose delta against pred and downweight the parallel part:
/// returns delta_orth + eta * delta_par with
///   delta_par = (<delta, pred> / <pred, pred>) * pred.
/// Inner products run over all state axes (per sample, not per batch).
/// A near-zero pred (||pred|| < 1e-12) makes the decomposition ill-posed;
/// delta is returned unchanged and *degenerate is set when provided.
inline Tensor project(const Tensor& delta, const Tensor& pred, double eta,
                      bool* degenerate = nullptr) {
    delta.check_same_shape(pred);
    if (degenerate) *degenerate = false;
    const double pp = dot(pred, pred);
    if (std::sqrt(pp) < 1e-12) {
        if (degenerate) *degenerate = true;
        return delta;
    }
    const double coeff = dot(delta, pred) / pp;
    // orth + eta*par = delta - (1-eta)*par
    Tensor out = delta;
    out.axpy(-(1.0 - eta) * coeff, pred);
    return out;
}

}  // namespace higs
