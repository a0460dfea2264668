#pragma once

#include <cstdint>
#include <compare>
#include <functional>
#include <string>

namespace cpsfog {

struct DeviceId {
    std::uint32_t v = 0;
    constexpr auto operator<=>(const DeviceId&) const = default;
};

struct CellId {
    std::uint32_t v = 0;
    constexpr auto operator<=>(const CellId&) const = default;
};

struct CloudletId {
    std::uint32_t v = 0;
    constexpr auto operator<=>(const CloudletId&) const = default;
};

struct ServerId {
    std::uint32_t v = 0;
    constexpr auto operator<=>(const ServerId&) const = default;
};

// Addressable simulation node: event targets and trace record owners.
struct NodeId {
    enum class Kind : std::uint8_t { Device, Cell, Cloudlet, Server, Csgn, Controller, Scenario };
    Kind kind = Kind::Scenario;
    std::uint32_t index = 0;

    constexpr auto operator<=>(const NodeId&) const = default;

    static constexpr NodeId device(DeviceId d) { return {Kind::Device, d.v}; }
    static constexpr NodeId cell(CellId c) { return {Kind::Cell, c.v}; }
    static constexpr NodeId cloudlet(CloudletId c) { return {Kind::Cloudlet, c.v}; }
    static constexpr NodeId server(ServerId s) { return {Kind::Server, s.v}; }
    static constexpr NodeId csgn() { return {Kind::Csgn, 0}; }
    static constexpr NodeId controller() { return {Kind::Controller, 0}; }
    static constexpr NodeId scenario() { return {Kind::Scenario, 0}; }
};

std::string to_string(NodeId id);

} // namespace cpsfog

template <> struct std::hash<cpsfog::DeviceId> {
    std::size_t operator()(cpsfog::DeviceId d) const noexcept { return std::hash<std::uint32_t>{}(d.v); }
};
template <> struct std::hash<cpsfog::CellId> {
    std::size_t operator()(cpsfog::CellId c) const noexcept { return std::hash<std::uint32_t>{}(c.v); }
};
