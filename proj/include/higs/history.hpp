#pragma once

#include <cmath>
#include <cstddef>
#include <deque>
#include <string>

#include "higs/errors.hpp"
#include "higs/tensor.hpp"

namespace higs {

enum class HistoryKind { ema, window_mean, last };

inline const char* to_string(HistoryKind k) {
    switch (k) {
        case HistoryKind::ema: return "ema";
        case HistoryKind::window_mean: return "window_mean";
        default: return "last";
    }
}

inline HistoryKind history_kind_from_string(const std::string& s) {
    if (s == "ema") return HistoryKind::ema;
    if (s == "window_mean" || s == "window-mean" || s == "mean") return HistoryKind::window_mean;
    if (s == "last") return HistoryKind::last;
    throw ConfigError("unknown history kind '" + s + "'");
}

/// Running summary of past predictions g(H_k).
///
/// ema:   ema <- alpha * pred + (1 - alpha) * ema, starting from zeros, so after
///        k insertions ema = sum_i alpha*(1-alpha)^(k-1-i) * pred_i. The weights
///        sum to 1-(1-alpha)^k, i.e. early steps are under-weighted; the optional
///        normalized mode divides that factor out.
/// window_mean: arithmetic mean of the last `window` insertions.
/// last:  most recent insertion; mean() then gives the plain one-step
///        residual pred_k - pred_{k-1} when used in the guidance step.
class HistoryBuffer {
  public:
    HistoryBuffer() = default;
    explicit HistoryBuffer(HistoryKind kind, double alpha = 0.75, std::size_t window = 4,
                           bool normalize_ema = false)
        : kind_(kind), alpha_(alpha), window_(window), normalize_(normalize_ema) {
        if (kind_ == HistoryKind::ema && !(alpha_ > 0.0 && alpha_ < 1.0))
            throw ConfigError("ema alpha must lie in (0,1)");
        if (kind_ == HistoryKind::window_mean && window_ < 1)
            throw ConfigError("window size must be >= 1");
    }

    bool empty() const { return count_ == 0; }
    std::size_t count() const { return count_; }
    HistoryKind kind() const { return kind_; }

    void add(const Tensor& pred) {
        switch (kind_) {
            case HistoryKind::ema:
                if (count_ == 0) ema_ = Tensor::zeros_like(pred);
                ema_.check_same_shape(pred);
                for (std::size_t i = 0; i < ema_.size(); ++i)
                    ema_[i] = alpha_ * pred[i] + (1.0 - alpha_) * ema_[i];
                break;
            case HistoryKind::window_mean:
                if (!ring_.empty()) ring_.front().check_same_shape(pred);
                ring_.push_back(pred);
                if (ring_.size() > window_) ring_.pop_front();
                break;
            case HistoryKind::last:
                if (count_ > 0) ema_.check_same_shape(pred);
                ema_ = pred;
                break;
        }
        ++count_;
    }

    /// g(H_k); throws on an empty buffer (callers take the first-call path instead).
    Tensor mean() const {
        if (count_ == 0) throw EmptyBufferError("history buffer is empty");
        switch (kind_) {
            case HistoryKind::ema: {
                if (!normalize_) return ema_;
                double wsum = 1.0 - std::pow(1.0 - alpha_, static_cast<double>(count_));
                return (1.0 / wsum) * ema_;
            }
            case HistoryKind::window_mean: {
                Tensor acc = Tensor::zeros_like(ring_.front());
                for (const Tensor& t : ring_) acc += t;
                return (1.0 / static_cast<double>(ring_.size())) * acc;
            }
            default:
                return ema_;
        }
    }

    void reset() {
        count_ = 0;
        ema_ = Tensor();
        ring_.clear();
    }

  private:
    HistoryKind kind_ = HistoryKind::ema;
    double alpha_ = 0.75;
    std::size_t window_ = 4;
    bool normalize_ = false;
    std::size_t count_ = 0;
    Tensor ema_;               // ema state, or most recent entry for `last`
    std::deque<Tensor> ring_;  // window_mean only
};

}  // namespace higs
