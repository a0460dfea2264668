#pragma once

// Topology and access model: cells, sectors, devices, per-tech capacity and
// delay constraints, jamming state, and the C-SGN load counters.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cpsfog/event.hpp"
#include "cpsfog/load.hpp"
#include "cpsfog/topology.hpp"

namespace cpsfog {

enum class AttachOutcome : std::uint8_t { Success, CapacityExceeded, UnknownCell, AlreadyAttached };
struct AttachResult {
    AttachOutcome outcome = AttachOutcome::Success;
    std::uint8_t sector = 0;
};

enum class TxOutcome : std::uint8_t { Delivered, DeadlineMissed, Jammed, NotAttached };
struct DeliveryPlan {
    TxOutcome outcome = TxOutcome::NotAttached;
    SimTime deliver_at{};  // valid when Delivered
    SimTime latency{};     // serialization + access delay
};

enum class HandoverOutcome : std::uint8_t { Success, SameCell, NotAttached, CapacityExceeded, UnknownCell };
struct HandoverResult {
    HandoverOutcome outcome = HandoverOutcome::UnknownCell;
    CellId from{};
};

std::string_view to_string(AttachOutcome o);
std::string_view to_string(TxOutcome o);
std::string_view to_string(HandoverOutcome o);

// Uplink traffic and signaling tallies kept at the C-SGN, per cell and per
// device, with one rotating window plus running totals. Every delivered
// uplink packet lands in exactly one per-device and one per-cell counter.
class CsgnCounters {
public:
    void resize(std::size_t cells, std::size_t devices);

    void count_signaling(DeviceId dev, CellId cell, std::uint32_t msgs);
    void count_data(DeviceId dev, CellId cell, std::uint32_t bytes);

    // Closes the current window: current becomes the last completed window.
    void rotate(SimTime new_window_start);

    void set_window_authenticated(CellId cell, std::uint64_t n);

    const LoadCounters& cell_window(CellId c) const { return cell_last_.at(c.v); }
    const LoadCounters& device_window(DeviceId d) const { return dev_last_.at(d.v); }
    const LoadCounters& cell_current(CellId c) const { return cell_current_.at(c.v); }

    std::uint64_t total_signaling() const { return total_signaling_; }
    std::uint64_t total_data_msgs() const { return total_data_msgs_; }
    std::uint64_t total_data_bytes() const { return total_data_bytes_; }
    std::uint64_t window_total_signaling() const { return last_window_total_signaling_; }

    std::size_t cell_count() const { return cell_current_.size(); }

private:
    std::vector<LoadCounters> cell_current_, cell_last_;
    std::vector<LoadCounters> dev_current_, dev_last_;
    std::uint64_t total_signaling_ = 0;
    std::uint64_t total_data_msgs_ = 0;
    std::uint64_t total_data_bytes_ = 0;
    std::uint64_t window_total_signaling_ = 0;
    std::uint64_t last_window_total_signaling_ = 0;
};

class NetworkModel {
public:
    NetworkModel() = default;
    NetworkModel(std::vector<Cell> cells, std::vector<Device> devices, double cell_size_m,
                 std::array<TechParams, kTechCount> tech);

    const TechParams& params(AccessTech t) const { return tech_[static_cast<std::size_t>(t)]; }
    double cell_size_m() const { return cell_size_m_; }

    AttachResult attach_device(DeviceId dev, CellId cell, std::optional<std::uint8_t> sector = {});
    void detach(DeviceId dev);
    HandoverResult handover(DeviceId dev, CellId to_cell);

    // Delivery plan for an uplink message sent now; pure, no state change.
    // Latency is serialization + per-tech access delay; a plan whose latency
    // exceeds the budget comes back DeadlineMissed, never silently Delivered.
    DeliveryPlan plan_uplink(DeviceId dev, std::uint32_t bytes, MsgClass cls, SimTime now,
                             SimTime latency_budget_override = {}) const;

    bool signaling_blocked(CellId cell) const;
    bool data_blocked(CellId cell) const;

    void set_jam(CellId cell, JamMode mode, SimTime until);
    void clear_jam(CellId cell);

    // Next cell clockwise on the 1-D strip with a sector of this tech.
    std::optional<CellId> next_cell_on_strip(CellId from, AccessTech tech) const;

    Cell& cell(CellId c);
    const Cell& cell(CellId c) const;
    Device& device(DeviceId d);
    const Device& device(DeviceId d) const;
    bool has_cell(CellId c) const { return c.v < cells_.size(); }

    std::size_t device_count() const { return devices_.size(); }
    std::size_t cell_count() const { return cells_.size(); }
    const std::vector<Device>& devices() const { return devices_; }
    std::vector<Device>& devices() { return devices_; }
    const std::set<std::uint32_t>& attached_in_cell(CellId c) const { return cell_members_.at(c.v); }

    std::uint64_t capacity_rejections(CellId c) const { return capacity_rejections_.at(c.v); }

    CsgnCounters& csgn() { return csgn_; }
    const CsgnCounters& csgn() const { return csgn_; }

    static SimTime serialization_delay(std::uint32_t bytes, std::uint64_t rate_bps);

private:
    std::vector<Cell> cells_;
    std::vector<Device> devices_;
    std::vector<std::set<std::uint32_t>> cell_members_;
    std::vector<std::uint64_t> capacity_rejections_;
    double cell_size_m_ = 1000.0;
    std::array<TechParams, kTechCount> tech_{};
    CsgnCounters csgn_;
};

} // namespace cpsfog
