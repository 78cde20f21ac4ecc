#pragma once

#include <cmath>
#include <string>

#include "higs/errors.hpp"

namespace higs {

enum class ScheduleKind { sqrt, linear, constant };

inline const char* to_string(ScheduleKind k) {
    switch (k) {
        case ScheduleKind::sqrt: return "sqrt";
        case ScheduleKind::linear: return "linear";
        default: return "constant";
    }
}

inline ScheduleKind schedule_kind_from_string(const std::string& s) {
    if (s == "sqrt") return ScheduleKind::sqrt;
    if (s == "linear") return ScheduleKind::linear;
    if (s == "constant") return ScheduleKind::constant;
    throw ConfigError("unknown schedule kind '" + s + "'");
}

/// Guidance weight at normalized time t. Zero outside (t_min, t_max]:
/// left boundary exclusive (t <= t_min gives 0), right boundary inclusive.
inline double schedule_weight(double t, ScheduleKind kind, double w, double t_min, double t_max) {
    if (t > t_max || t <= t_min) return 0.0;
    switch (kind) {
        case ScheduleKind::sqrt: return w * std::sqrt((t - t_min) / (t_max - t_min));
        case ScheduleKind::linear: return w * (t - t_min) / (t_max - t_min);
        default: return w;
    }
}

}  // namespace higs
