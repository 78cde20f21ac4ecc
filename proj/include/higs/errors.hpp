#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace higs {

// Exit codes used by the CLI driver.
enum class ExitCode : int {
    ok        = 0,
    config    = 2,
    diverged  = 3,
    io        = 4,
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct EmptyBufferError : std::runtime_error {
    explicit EmptyBufferError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a trajectory produces a non-finite state.
struct DivergedError : std::runtime_error {
    DivergedError(const std::string& msg, std::size_t step)
        : std::runtime_error(msg + " (step " + std::to_string(step) + ")"), step_index(step) {}
    std::size_t step_index;
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct FitError : std::runtime_error {
    explicit FitError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace higs
