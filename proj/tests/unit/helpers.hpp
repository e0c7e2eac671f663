#pragma once

#include <functional>

#include "distvar/errors.hpp"

// Code of the distvar::Error thrown by fn, or nullopt.
inline std::optional<distvar::ErrorCode> error_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const distvar::Error& e) {
        return e.code();
    }
    return std::nullopt;
}
