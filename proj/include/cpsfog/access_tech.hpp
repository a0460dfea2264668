#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "cpsfog/time.hpp"

namespace cpsfog {

enum class AccessTech : std::uint8_t { EcGsmIot, Emtc, NbIot, LteV2v };

inline constexpr std::size_t kTechCount = 4;

// Per-technology access parameters. Capacity, rate, and latency defaults for
// NB-IoT, the EC-GSM-IoT capacity, and the LTE-V2V latency are standard
// figures for these technologies; the rest are simulator defaults. Everything
// is overridable from the scenario file.
struct TechParams {
    std::uint32_t capacity_per_cell_sector = 0;
    std::uint64_t uplink_rate_bps = 0;
    SimTime max_latency{};
    SimTime access_delay{}; // fixed per-tech delay added to each delivery
    bool mobility_supported = false;
    bool coverage_enhanced = false; // eMTC flag, no behavioral effect
};

constexpr TechParams default_tech_params(AccessTech t) {
    switch (t) {
        case AccessTech::EcGsmIot:
            return {50'000, 240'000, sim_s(10), sim_ms(50), false, false};
        case AccessTech::Emtc:
            return {50'000, 1'000'000, sim_s(10), sim_ms(50), true, true};
        case AccessTech::NbIot:
            return {52'547, 50'000, sim_s(10), sim_ms(50), false, false};
        case AccessTech::LteV2v:
            return {10'000, 1'000'000, sim_ms(100), sim_ms(10), true, false};
    }
    return {};
}

std::string_view to_string(AccessTech t);
std::optional<AccessTech> tech_from_string(std::string_view s);

} // namespace cpsfog
