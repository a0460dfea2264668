#include "cpsfog/security.hpp"

#include "cpsfog/rng.hpp"

namespace cpsfog {

std::string_view to_string(CtxKind k) {
    return k == CtxKind::AS ? "AS" : "NAS";
}

std::string_view to_string(RemoveCause c) {
    return c == RemoveCause::Timer ? "timer" : "revocation";
}

void AkaSession::transition(State next) {
    const bool ok = (state == State::Idle && next == State::ChallengeSent) ||
                    (state == State::ChallengeSent &&
                     (next == State::Authenticated || next == State::Failed));
    if (!ok) {
        throw SimError("illegal AKA session transition " + std::to_string(int(state)) + " -> " +
                       std::to_string(int(next)));
    }
    state = next;
}

SecurityManager::SecurityManager(Params p, std::uint64_t scenario_seed)
    : p_(p), tokens_(scenario_seed) {}

void SecurityManager::provision(DeviceId dev, bool rogue) {
    const std::string k = tokens_.mint("K");
    hss_k_[dev.v] = k;
    device_k_[dev.v] = rogue ? tokens_.mint("K") : k;
}

SecurityContext SecurityManager::make_context(CtxKind kind, SimTime now) {
    SecurityContext c;
    c.kind = kind;
    c.key_id = tokens_.mint("k");
    c.ciphering_alg = 2; // EEA2-style id, fixed
    c.integrity_alg = 2;
    c.uplink_counter = 0;
    c.downlink_counter = 0;
    if (kind == CtxKind::AS) c.next_hop = tokens_.mint("nh");
    c.established_at = now;
    c.validity_deadline = now + (kind == CtxKind::AS ? p_.as_validity : p_.nas_validity);
    c.reuse_count = 0;
    return c;
}

AkaResult SecurityManager::run_aka(DeviceId dev, SimTime now, bool nas_only) {
    auto hss = hss_k_.find(dev.v);
    if (hss == hss_k_.end()) throw SimError("run_aka: no HSS record for device " + std::to_string(dev.v));

    AkaSession& s = sessions_[dev.v];
    s.reset();
    s.started_at = now;
    s.transition(AkaSession::State::ChallengeSent);

    ++aka_count_;
    AkaResult r;
    r.cost_msgs = p_.n_full;

    if (device_k_.at(dev.v) != hss->second) {
        s.transition(AkaSession::State::Failed);
        ++aka_failures_;
        nas_.erase(dev.v);
        as_.erase(dev.v);
        r.outcome = AkaOutcome::AuthFailure;
        return r;
    }

    s.transition(AkaSession::State::Authenticated);
    SecurityContext nas = make_context(CtxKind::NAS, now);
    r.nas_key_id = nas.key_id;
    nas_[dev.v] = std::move(nas);
    ++nas_created_;
    if (!nas_only) {
        SecurityContext as = make_context(CtxKind::AS, now);
        r.as_key_id = as.key_id;
        as_[dev.v] = std::move(as);
        ++as_created_;
    } else {
        as_.erase(dev.v);
    }
    r.outcome = AkaOutcome::Authenticated;
    return r;
}

SvcResult SecurityManager::service_request_stored_context(DeviceId dev, SimTime now) {
    auto it = as_.find(dev.v);
    if (it == as_.end()) return {SvcOutcome::NoStoredContext, 0, 0};
    if (it->second.validity_deadline < now) return {SvcOutcome::ContextExpired, 0, it->second.reuse_count};
    it->second.reuse_count += 1;
    return {SvcOutcome::Reused, p_.n_reuse, it->second.reuse_count};
}

NasTransferResult SecurityManager::nas_small_data_transfer(DeviceId dev, std::uint32_t packet_bytes,
                                                           SimTime now) {
    auto it = nas_.find(dev.v);
    if (it == nas_.end()) return {NasTransferOutcome::NoNasContext, 0, 0};
    if (it->second.validity_deadline < now) return {NasTransferOutcome::ContextExpired, 0, 0};
    if (packet_bytes > p_.nas_packet_ceiling) return {NasTransferOutcome::PacketTooLarge, 0, 0};

    // One signaling transaction carries the packet with the next counter; the
    // C-SGN side accepts it through the same replay rule every message obeys.
    const std::uint64_t counter = it->second.uplink_counter + 1;
    if (verify_counter(dev, CtxKind::NAS, Direction::Up, counter) != CounterVerdict::Accept) {
        throw SimError("nas transfer: fresh counter rejected (simulator bug)");
    }
    return {NasTransferOutcome::Accepted, 1, counter};
}

CounterVerdict SecurityManager::verify_counter(DeviceId dev, CtxKind kind, Direction dir,
                                               std::uint64_t counter) {
    auto& store = kind == CtxKind::AS ? as_ : nas_;
    auto it = store.find(dev.v);
    if (it == store.end()) {
        ++counter_rejects_;
        return CounterVerdict::Reject;
    }
    std::uint64_t& last = dir == Direction::Up ? it->second.uplink_counter : it->second.downlink_counter;
    if (counter > last) {
        last = counter;
        return CounterVerdict::Accept;
    }
    ++counter_rejects_;
    return CounterVerdict::Reject;
}

std::optional<std::uint64_t> SecurityManager::next_downlink_counter(DeviceId dev) {
    auto it = nas_.find(dev.v);
    if (it == nas_.end()) return std::nullopt;
    return it->second.downlink_counter + 1;
}

RemoveOutcome SecurityManager::expire_or_revoke(DeviceId dev, CtxKind kind, RemoveCause) {
    auto& store = kind == CtxKind::AS ? as_ : nas_;
    auto it = store.find(dev.v);
    if (it == store.end()) return RemoveOutcome::NoContext;
    store.erase(it);
    return RemoveOutcome::Removed;
}

std::pair<RotateOutcome, std::string> SecurityManager::rotate_temporary_identity(Device& dev, SimTime) {
    if (!authenticated(dev.id)) return {RotateOutcome::NotAuthenticated, {}};
    dev.temporary_id = tokens_.mint("t");
    return {RotateOutcome::Rotated, dev.temporary_id};
}

const SecurityContext* SecurityManager::nas_context(DeviceId dev) const {
    auto it = nas_.find(dev.v);
    return it == nas_.end() ? nullptr : &it->second;
}

const SecurityContext* SecurityManager::as_context(DeviceId dev) const {
    auto it = as_.find(dev.v);
    return it == as_.end() ? nullptr : &it->second;
}

const AkaSession* SecurityManager::session(DeviceId dev) const {
    auto it = sessions_.find(dev.v);
    return it == sessions_.end() ? nullptr : &it->second;
}

std::map<std::pair<std::uint32_t, std::uint8_t>, const SecurityContext*> SecurityManager::live_contexts()
    const {
    std::map<std::pair<std::uint32_t, std::uint8_t>, const SecurityContext*> out;
    for (const auto& [d, c] : as_) out[{d, std::uint8_t(CtxKind::AS)}] = &c;
    for (const auto& [d, c] : nas_) out[{d, std::uint8_t(CtxKind::NAS)}] = &c;
    return out;
}

std::string SecurityManager::expected_attestation_response(DeviceId dev, const std::string& nonce) const {
    // keyed digest token over (root key, nonce, good firmware tag)
    const std::uint64_t h = splitmix64(fnv1a(hss_k_.at(dev.v)) ^ fnv1a(nonce) ^ fnv1a("fw:good"));
    return "a:" + std::to_string(h);
}

std::string SecurityManager::device_attestation_response(DeviceId dev, const std::string& nonce,
                                                         bool report_true_firmware) const {
    const std::string fw = report_true_firmware ? "fw:good" : "fw:tampered";
    const std::uint64_t h = splitmix64(fnv1a(device_k_.at(dev.v)) ^ fnv1a(nonce) ^ fnv1a(fw));
    return "a:" + std::to_string(h);
}

} // namespace cpsfog
