#pragma once

// Simulation event kinds. One tagged payload per handler in the orchestrator;
// the engine only orders and dispatches them.

#include <cstdint>
#include <variant>

#include "cpsfog/ids.hpp"
#include "cpsfog/time.hpp"

namespace cpsfog {

enum class MsgClass : std::uint8_t { Signaling, Data };

// device lifecycle
struct EvDeviceStart {
    DeviceId dev;
};
struct EvReportDue {
    DeviceId dev;
};
struct EvReAuthDue {
    DeviceId dev;
};
struct EvHandoverDue {
    DeviceId dev;
};

// uplink payload arriving at the C-SGN
struct EvUplinkDelivery {
    DeviceId dev;
    CellId cell;
    std::uint32_t bytes = 0;
    SimTime sent_at{};
    double value = 0.0;
    bool has_measurement = false;
    bool storm = false;
};

// downlink application command arriving at a device
struct EvCommandDelivery {
    ServerId server;
    DeviceId dev;
    std::uint32_t attack_index = 0;
    std::uint32_t command_index = 0;
};

// defense machinery
struct EvWindowBoundary {};
struct EvJamWindowBoundary {};
struct EvAttestSweep {
    CloudletId cloudlet;
};
struct EvServerAttestSweep {};
struct EvBroadcast {
    CloudletId cloudlet;
};
// cloudlet -> controller alarm forwarding (one-way latency applied)
struct EvControllerAlarm {
    std::uint32_t alarm_index = 0;
};
// controller-issued peer isolation for an attestation failure
struct EvIsolationResponse {
    DeviceId failed_dev;
};

// attacks
struct EvAttackStart {
    std::uint32_t attack_index = 0;
};
struct EvAttackEnd {
    std::uint32_t attack_index = 0;
};
struct EvStormSend {
    DeviceId dev;
    std::uint32_t attack_index = 0;
};
struct EvJamEnd {
    CellId cell;
};

using EventPayload = std::variant<EvDeviceStart, EvReportDue, EvReAuthDue, EvHandoverDue,
                                  EvUplinkDelivery, EvCommandDelivery, EvWindowBoundary,
                                  EvJamWindowBoundary, EvAttestSweep, EvServerAttestSweep,
                                  EvBroadcast, EvControllerAlarm, EvIsolationResponse,
                                  EvAttackStart, EvAttackEnd, EvStormSend, EvJamEnd>;

struct Event {
    SimTime at{};
    std::uint64_t seq = 0; // engine-assigned, breaks ties in insertion order
    NodeId target{};
    EventPayload payload;
};

} // namespace cpsfog
