#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sus {

/// Text positions and ordinals are 1-based; 0 never names a valid position.
using pos_t = std::uint64_t;
inline constexpr pos_t nil = 0;

/// Per-query counter of primitive probes (rank, select, access, range query).
struct ProbeCounter {
    std::uint64_t count = 0;
};

inline void count_probe(ProbeCounter* probes, std::uint64_t k = 1) noexcept {
    if (probes != nullptr) probes->count += k;
}

inline void check_position(pos_t i, pos_t lo, pos_t hi, const char* what) {
    if (i < lo || i > hi) {
        throw std::out_of_range(std::string(what) + ": position " + std::to_string(i) +
                                " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

}  // namespace sus
