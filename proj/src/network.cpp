#include "cpsfog/network.hpp"

#include "cpsfog/errors.hpp"

namespace cpsfog {

std::string_view to_string(JamMode m) {
    switch (m) {
        case JamMode::Clear: return "clear";
        case JamMode::FullOutage: return "full_outage";
        case JamMode::UplinkDataOnlyOutage: return "uplink_data_only_outage";
    }
    return "?";
}

std::string_view to_string(AttachOutcome o) {
    switch (o) {
        case AttachOutcome::Success: return "success";
        case AttachOutcome::CapacityExceeded: return "capacity_exceeded";
        case AttachOutcome::UnknownCell: return "unknown_cell";
        case AttachOutcome::AlreadyAttached: return "already_attached";
    }
    return "?";
}

std::string_view to_string(TxOutcome o) {
    switch (o) {
        case TxOutcome::Delivered: return "delivered";
        case TxOutcome::DeadlineMissed: return "deadline_missed";
        case TxOutcome::Jammed: return "jammed";
        case TxOutcome::NotAttached: return "not_attached";
    }
    return "?";
}

std::string_view to_string(HandoverOutcome o) {
    switch (o) {
        case HandoverOutcome::Success: return "success";
        case HandoverOutcome::SameCell: return "same_cell";
        case HandoverOutcome::NotAttached: return "not_attached";
        case HandoverOutcome::CapacityExceeded: return "capacity_exceeded";
        case HandoverOutcome::UnknownCell: return "unknown_cell";
    }
    return "?";
}

void CsgnCounters::resize(std::size_t cells, std::size_t devices) {
    cell_current_.resize(cells);
    cell_last_.resize(cells);
    dev_current_.resize(devices);
    dev_last_.resize(devices);
}

void CsgnCounters::count_signaling(DeviceId dev, CellId cell, std::uint32_t msgs) {
    cell_current_.at(cell.v).signaling_msgs += msgs;
    dev_current_.at(dev.v).signaling_msgs += msgs;
    total_signaling_ += msgs;
    window_total_signaling_ += msgs;
}

void CsgnCounters::count_data(DeviceId dev, CellId cell, std::uint32_t bytes) {
    auto& c = cell_current_.at(cell.v);
    auto& d = dev_current_.at(dev.v);
    c.data_msgs += 1;
    c.data_bytes += bytes;
    d.data_msgs += 1;
    d.data_bytes += bytes;
    total_data_msgs_ += 1;
    total_data_bytes_ += bytes;
}

void CsgnCounters::rotate(SimTime new_window_start) {
    cell_last_ = cell_current_;
    dev_last_ = dev_current_;
    last_window_total_signaling_ = window_total_signaling_;
    window_total_signaling_ = 0;
    for (auto& c : cell_current_) c.reset(new_window_start);
    for (auto& d : dev_current_) d.reset(new_window_start);
}

void CsgnCounters::set_window_authenticated(CellId cell, std::uint64_t n) {
    cell_last_.at(cell.v).authenticated_devices = n;
}

NetworkModel::NetworkModel(std::vector<Cell> cells, std::vector<Device> devices, double cell_size_m,
                           std::array<TechParams, kTechCount> tech)
    : cells_(std::move(cells)), devices_(std::move(devices)), cell_size_m_(cell_size_m), tech_(tech) {
    cell_members_.resize(cells_.size());
    capacity_rejections_.assign(cells_.size(), 0);
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        cells_[i].position_m = static_cast<double>(i) * cell_size_m_;
        for (auto& s : cells_[i].sectors) {
            if (s.capacity == 0) s.capacity = params(s.tech).capacity_per_cell_sector;
        }
    }
    csgn_.resize(cells_.size(), devices_.size());
}

Cell& NetworkModel::cell(CellId c) {
    if (c.v >= cells_.size()) throw SimError("unknown cell " + std::to_string(c.v));
    return cells_[c.v];
}
const Cell& NetworkModel::cell(CellId c) const {
    if (c.v >= cells_.size()) throw SimError("unknown cell " + std::to_string(c.v));
    return cells_[c.v];
}
Device& NetworkModel::device(DeviceId d) {
    if (d.v >= devices_.size()) throw SimError("unknown device " + std::to_string(d.v));
    return devices_[d.v];
}
const Device& NetworkModel::device(DeviceId d) const {
    if (d.v >= devices_.size()) throw SimError("unknown device " + std::to_string(d.v));
    return devices_[d.v];
}

AttachResult NetworkModel::attach_device(DeviceId dev, CellId cell_id, std::optional<std::uint8_t> sector) {
    if (cell_id.v >= cells_.size()) return {AttachOutcome::UnknownCell, 0};
    Device& d = device(dev);
    if (d.attached()) return {AttachOutcome::AlreadyAttached, d.sector};
    Cell& c = cells_[cell_id.v];

    auto try_sector = [&](std::uint8_t idx) -> bool {
        Sector& s = c.sectors[idx];
        if (s.tech != d.tech) return false;
        if (s.attached >= s.capacity) return false;
        s.attached += 1;
        d.attached_cell = cell_id;
        d.sector = idx;
        cell_members_[cell_id.v].insert(dev.v);
        return true;
    };

    if (sector) {
        if (*sector >= c.sectors.size()) return {AttachOutcome::UnknownCell, 0};
        if (try_sector(*sector)) return {AttachOutcome::Success, *sector};
    } else {
        for (std::uint8_t i = 0; i < c.sectors.size(); ++i) {
            if (try_sector(i)) return {AttachOutcome::Success, i};
        }
    }
    capacity_rejections_[cell_id.v] += 1;
    return {AttachOutcome::CapacityExceeded, 0};
}

void NetworkModel::detach(DeviceId dev) {
    Device& d = device(dev);
    if (!d.attached()) return;
    Cell& c = cells_[d.attached_cell->v];
    Sector& s = c.sectors[d.sector];
    if (s.attached > 0) s.attached -= 1;
    cell_members_[d.attached_cell->v].erase(dev.v);
    d.attached_cell.reset();
}

HandoverResult NetworkModel::handover(DeviceId dev, CellId to_cell) {
    Device& d = device(dev);
    if (to_cell.v >= cells_.size()) return {HandoverOutcome::UnknownCell, {}};
    if (!d.attached()) return {HandoverOutcome::NotAttached, {}};
    const CellId from = *d.attached_cell;
    if (from == to_cell) return {HandoverOutcome::SameCell, from};

    detach(dev);
    AttachResult r = attach_device(dev, to_cell);
    if (r.outcome != AttachOutcome::Success) {
        // target full: fall back onto the old cell
        attach_device(dev, from);
        return {HandoverOutcome::CapacityExceeded, from};
    }
    return {HandoverOutcome::Success, from};
}

SimTime NetworkModel::serialization_delay(std::uint32_t bytes, std::uint64_t rate_bps) {
    if (rate_bps == 0) return sim_ms(0);
    const std::uint64_t bits_ms = static_cast<std::uint64_t>(bytes) * 8'000ULL;
    return sim_ms(static_cast<std::int64_t>((bits_ms + rate_bps - 1) / rate_bps));
}

bool NetworkModel::signaling_blocked(CellId c) const {
    return cell(c).jam == JamMode::FullOutage;
}

bool NetworkModel::data_blocked(CellId c) const {
    const JamMode m = cell(c).jam;
    return m == JamMode::FullOutage || m == JamMode::UplinkDataOnlyOutage;
}

DeliveryPlan NetworkModel::plan_uplink(DeviceId dev, std::uint32_t bytes, MsgClass cls, SimTime now,
                                       SimTime latency_budget_override) const {
    const Device& d = device(dev);
    if (!d.attached()) return {TxOutcome::NotAttached, {}, {}};
    const CellId c = *d.attached_cell;
    if (cls == MsgClass::Data ? data_blocked(c) : signaling_blocked(c)) {
        return {TxOutcome::Jammed, {}, {}};
    }
    const TechParams& p = params(d.tech);
    const SimTime latency = serialization_delay(bytes, p.uplink_rate_bps) + p.access_delay;
    const SimTime budget = latency_budget_override.ms > 0 ? latency_budget_override : p.max_latency;
    if (latency > budget) return {TxOutcome::DeadlineMissed, {}, latency};
    return {TxOutcome::Delivered, now + latency, latency};
}

void NetworkModel::set_jam(CellId cell_id, JamMode mode, SimTime until) {
    Cell& c = cell(cell_id);
    c.jam = mode;
    c.jam_until = until;
}

void NetworkModel::clear_jam(CellId cell_id) {
    Cell& c = cell(cell_id);
    c.jam = JamMode::Clear;
    c.jam_until = {};
}

std::optional<CellId> NetworkModel::next_cell_on_strip(CellId from, AccessTech tech) const {
    if (cells_.empty()) return std::nullopt;
    const std::size_t n = cells_.size();
    for (std::size_t step = 1; step <= n; ++step) {
        const std::size_t idx = (from.v + step) % n;
        for (const auto& s : cells_[idx].sectors) {
            if (s.tech == tech) {
                if (idx == from.v) return std::nullopt; // only this cell carries the tech
                return CellId{static_cast<std::uint32_t>(idx)};
            }
        }
    }
    return std::nullopt;
}

} // namespace cpsfog
