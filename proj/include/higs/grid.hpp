#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "higs/errors.hpp"

namespace higs {

enum class GridKind { uniform, power_rho };

inline const char* to_string(GridKind k) {
    return k == GridKind::uniform ? "uniform" : "power_rho";
}

inline GridKind grid_kind_from_string(const std::string& s) {
    if (s == "uniform") return GridKind::uniform;
    if (s == "power_rho" || s == "power-rho") return GridKind::power_rho;
    throw ConfigError("unknown grid kind '" + s + "'");
}

/// Strictly decreasing sampling times t_0 = 1 > t_1 > ... > t_M = t_floor,
/// normalized so sampling starts at t = 1.
class TimeGrid {
  public:
    explicit TimeGrid(std::vector<double> times) : times_(std::move(times)) {
        if (times_.size() < 2) throw ConfigError("time grid needs at least 2 points");
        for (std::size_t i = 0; i + 1 < times_.size(); ++i)
            if (!(times_[i] > times_[i + 1]))
                throw ConfigError("time grid must be strictly decreasing");
        if (!(times_.back() > 0.0)) throw ConfigError("time grid must stay positive");
    }

    const std::vector<double>& times() const { return times_; }
    double t(std::size_t k) const { return times_[k]; }
    /// h_k = t_k - t_{k+1} > 0
    double step(std::size_t k) const { return times_[k] - times_[k + 1]; }
    /// number of integration steps M (grid has M+1 points)
    std::size_t num_steps() const { return times_.size() - 1; }
    double t_start() const { return times_.front(); }
    double t_end() const { return times_.back(); }

    double max_step() const {
        double h = 0.0;
        for (std::size_t k = 0; k < num_steps(); ++k) h = std::max(h, step(k));
        return h;
    }

  private:
    std::vector<double> times_;
};

/// uniform:   t_i = 1 - i*(1 - t_floor)/M
/// power_rho: t_i = (1 + (i/M)*(t_floor^(1/rho) - 1))^rho
/// Both give t_0 = 1 and t_M = t_floor exactly.
inline TimeGrid build_time_grid(GridKind kind, std::size_t M, double t_floor, double rho = 7.0) {
    if (M < 1) throw ConfigError("grid step count M must be >= 1");
    if (!(t_floor > 0.0 && t_floor < 1.0)) throw ConfigError("t_floor must lie in (0,1)");
    std::vector<double> times(M + 1);
    switch (kind) {
        case GridKind::uniform:
            for (std::size_t i = 0; i <= M; ++i)
                times[i] = 1.0 - static_cast<double>(i) * (1.0 - t_floor) / static_cast<double>(M);
            break;
        case GridKind::power_rho: {
            if (!(rho > 0.0)) throw ConfigError("rho must be positive");
            const double base = std::pow(t_floor, 1.0 / rho) - 1.0;
            for (std::size_t i = 0; i <= M; ++i) {
                double f = static_cast<double>(i) / static_cast<double>(M);
                times[i] = std::pow(1.0 + f * base, rho);
            }
            break;
        }
    }
    times.front() = 1.0;
    times.back() = t_floor;
    return TimeGrid(std::move(times));
}

}  // namespace higs
