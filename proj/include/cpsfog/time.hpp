#pragma once

// Simulation clock type. Integer milliseconds since scenario start; integer
// arithmetic keeps event ordering and trace output bit-stable.

#include <cstdint>
#include <compare>

namespace cpsfog {

struct SimTime {
    std::int64_t ms = 0;

    constexpr auto operator<=>(const SimTime&) const = default;

    constexpr SimTime operator+(SimTime o) const { return {ms + o.ms}; }
    constexpr SimTime operator-(SimTime o) const { return {ms - o.ms}; }
    constexpr SimTime& operator+=(SimTime o) { ms += o.ms; return *this; }

    constexpr double seconds() const { return static_cast<double>(ms) / 1000.0; }
};

constexpr SimTime sim_ms(std::int64_t v) { return {v}; }
constexpr SimTime sim_s(std::int64_t v) { return {v * 1000}; }
constexpr SimTime sim_min(std::int64_t v) { return {v * 60'000}; }
constexpr SimTime sim_h(std::int64_t v) { return {v * 3'600'000}; }

} // namespace cpsfog
