#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace cpsfog {

// The six CPS application domains.
enum class CpsDomain : std::uint8_t {
    SmartGrid,
    Ics,
    Its,
    SmartHealthcare,
    SmartEnvironment,
    SmartHome,
};

inline constexpr std::size_t kDomainCount = 6;

constexpr std::array<CpsDomain, kDomainCount> all_domains() {
    return {CpsDomain::SmartGrid,        CpsDomain::Ics,
            CpsDomain::Its,              CpsDomain::SmartHealthcare,
            CpsDomain::SmartEnvironment, CpsDomain::SmartHome};
}

std::string_view to_string(CpsDomain d);
std::optional<CpsDomain> domain_from_string(std::string_view s);

} // namespace cpsfog
