#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpsfog/access_tech.hpp"
#include "cpsfog/domain.hpp"
#include "cpsfog/ids.hpp"
#include "cpsfog/time.hpp"

namespace cpsfog {

enum class JamMode : std::uint8_t { Clear, FullOutage, UplinkDataOnlyOutage };

std::string_view to_string(JamMode m);

struct Sector {
    AccessTech tech = AccessTech::NbIot;
    std::uint32_t capacity = 0;
    std::uint32_t attached = 0;
};

struct Cell {
    CellId id{};
    std::uint32_t enb = 0;
    std::vector<Sector> sectors;
    JamMode jam = JamMode::Clear;
    SimTime jam_until{};
    double position_m = 0.0; // start of this cell on the 1-D strip
};

struct Device {
    DeviceId id{};
    CpsDomain domain = CpsDomain::SmartEnvironment;
    AccessTech tech = AccessTech::NbIot;
    std::string permanent_id;
    std::string temporary_id;
    std::optional<CellId> attached_cell;
    std::uint8_t sector = 0;
    bool compromised = false;
    double evasion_p = 0.0;
    std::uint64_t energy_milliunits = 0; // 1000 per signaling message + 1 per payload byte
    double speed_kmh = 0.0;              // ITS only, <= 250
    double position_m = 0.0;             // on the 1-D strip, mobile devices only
    std::int32_t peer_group = -1;        // -1: no group
    bool mission_critical = false;
    bool isolated = false;
    bool heard_broadcast = false;
    std::uint32_t broadcast_rx = 0;

    bool attached() const { return attached_cell.has_value(); }
};

} // namespace cpsfog
