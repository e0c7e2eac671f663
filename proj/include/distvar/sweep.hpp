#pragma once

// Index-parallel map used by every grid sweep in the library. The serial
// path is the reference implementation; the OpenMP path must produce
// bit-identical results, which holds because every element is a pure
// function of its index (seeds are derived per index, never shared).

#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <type_traits>
#include <vector>

namespace distvar {

enum class Exec { serial, parallel };

/// splitmix64 finalizer; gives each sweep element an independent seed.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

template <class F>
auto map_indexed(std::size_t count, Exec exec, F&& fn)
    -> std::vector<std::invoke_result_t<F&, std::size_t>> {
    using R = std::invoke_result_t<F&, std::size_t>;
    std::vector<std::optional<R>> slots(count);
    std::vector<std::exception_ptr> errors(count);

    if (exec == Exec::parallel) {
        const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < n; ++i) {
            const auto k = static_cast<std::size_t>(i);
            try {
                slots[k].emplace(fn(k));
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    } else {
        for (std::size_t k = 0; k < count; ++k) {
            try {
                slots[k].emplace(fn(k));
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    }

    // Lowest failing index wins, independent of thread scheduling.
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    std::vector<R> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace distvar
