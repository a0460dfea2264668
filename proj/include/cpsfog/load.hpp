#pragma once

#include <cstdint>

#include "cpsfog/time.hpp"

namespace cpsfog {

// Per-window traffic and signaling tallies, the raw material of the
// performance-management-based visibility. Counters reset only at window
// boundaries.
struct LoadCounters {
    SimTime window_start{};
    std::uint64_t signaling_msgs = 0;
    std::uint64_t data_msgs = 0;
    std::uint64_t data_bytes = 0;
    std::uint64_t authenticated_devices = 0;

    void reset(SimTime start) {
        window_start = start;
        signaling_msgs = 0;
        data_msgs = 0;
        data_bytes = 0;
        authenticated_devices = 0;
    }
};

} // namespace cpsfog
