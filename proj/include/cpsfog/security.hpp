#pragma once

// AKA state machine and AS/NAS security-context lifecycle, with the two
// signaling optimizations: stored-AS-context service requests and single
// IP packet transfer over NAS signaling. Crypto is tokenized; what is
// modeled is key possession, counter monotonicity, and signaling cost.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "cpsfog/errors.hpp"
#include "cpsfog/ids.hpp"
#include "cpsfog/time.hpp"
#include "cpsfog/tokens.hpp"
#include "cpsfog/topology.hpp"

namespace cpsfog {

enum class CtxKind : std::uint8_t { AS, NAS };
enum class Direction : std::uint8_t { Up, Down };
enum class RemoveCause : std::uint8_t { Timer, Revocation };

std::string_view to_string(CtxKind k);
std::string_view to_string(RemoveCause c);

struct SecurityContext {
    CtxKind kind = CtxKind::NAS;
    std::string key_id;
    std::uint8_t ciphering_alg = 0;
    std::uint8_t integrity_alg = 0;
    std::uint64_t uplink_counter = 0;   // last accepted
    std::uint64_t downlink_counter = 0; // last accepted
    std::string next_hop;               // AS only
    SimTime established_at{};
    SimTime validity_deadline{};
    std::uint32_t reuse_count = 0;
};

struct AkaSession {
    enum class State : std::uint8_t { Idle, ChallengeSent, Authenticated, Failed };
    State state = State::Idle;
    SimTime started_at{};

    // Legal moves only: Idle -> ChallengeSent -> {Authenticated, Failed};
    // restarting resets to Idle first.
    void transition(State next);
    void reset() { state = State::Idle; }
};

enum class AkaOutcome : std::uint8_t { Authenticated, AuthFailure };
struct AkaResult {
    AkaOutcome outcome = AkaOutcome::AuthFailure;
    std::uint32_t cost_msgs = 0;
    std::string nas_key_id;
    std::string as_key_id; // empty on the NAS-only path
};

enum class SvcOutcome : std::uint8_t { Reused, ContextExpired, NoStoredContext };
struct SvcResult {
    SvcOutcome outcome = SvcOutcome::NoStoredContext;
    std::uint32_t cost_msgs = 0;
    std::uint32_t reuse_count = 0;
};

enum class NasTransferOutcome : std::uint8_t { Accepted, NoNasContext, ContextExpired, PacketTooLarge };
struct NasTransferResult {
    NasTransferOutcome outcome = NasTransferOutcome::NoNasContext;
    std::uint32_t cost_msgs = 0;
    std::uint64_t counter = 0;
};

enum class CounterVerdict : std::uint8_t { Accept, Reject };
enum class RemoveOutcome : std::uint8_t { Removed, NoContext };
enum class RotateOutcome : std::uint8_t { Rotated, NotAuthenticated };

class SecurityManager {
public:
    struct Params {
        std::uint32_t n_full = 8;  // full AKA + context setup, messages
        std::uint32_t n_reuse = 3; // stored-context service request, messages
        SimTime as_validity = sim_h(24);
        SimTime nas_validity = sim_h(24 * 7);
        std::uint32_t nas_packet_ceiling = 1500;
        SimTime aka_latency = sim_ms(160);
        SimTime svc_latency = sim_ms(60);
    };

    SecurityManager() : SecurityManager(Params{}, 0) {}
    SecurityManager(Params p, std::uint64_t scenario_seed);

    const Params& params() const { return p_; }

    // Creates the HSS record and the device-side root key token. A rogue
    // device carries a token that does not match its HSS record.
    void provision(DeviceId dev, bool rogue);

    AkaResult run_aka(DeviceId dev, SimTime now, bool nas_only);
    SvcResult service_request_stored_context(DeviceId dev, SimTime now);
    NasTransferResult nas_small_data_transfer(DeviceId dev, std::uint32_t packet_bytes, SimTime now);

    // Receiver-side replay check; Reject is a normal outcome, not an error.
    CounterVerdict verify_counter(DeviceId dev, CtxKind kind, Direction dir, std::uint64_t counter);

    // Next downlink counter for a C-SGN-originated message to dev.
    std::optional<std::uint64_t> next_downlink_counter(DeviceId dev);

    RemoveOutcome expire_or_revoke(DeviceId dev, CtxKind kind, RemoveCause cause);

    std::pair<RotateOutcome, std::string> rotate_temporary_identity(Device& dev, SimTime now);

    const SecurityContext* nas_context(DeviceId dev) const;
    const SecurityContext* as_context(DeviceId dev) const;
    bool authenticated(DeviceId dev) const { return nas_context(dev) != nullptr; }
    const AkaSession* session(DeviceId dev) const;

    // Ordered (device, kind) view for the controller registry audit.
    std::map<std::pair<std::uint32_t, std::uint8_t>, const SecurityContext*> live_contexts() const;

    std::uint64_t aka_count() const { return aka_count_; }
    std::uint64_t aka_failures() const { return aka_failures_; }
    std::uint64_t as_contexts_created() const { return as_created_; }
    std::uint64_t nas_contexts_created() const { return nas_created_; }
    std::uint64_t counter_rejects() const { return counter_rejects_; }

    // Expected attestation response for (device, nonce): keyed digest token
    // over the HSS root key and the known-good firmware tag.
    std::string expected_attestation_response(DeviceId dev, const std::string& nonce) const;
    std::string device_attestation_response(DeviceId dev, const std::string& nonce,
                                            bool report_true_firmware) const;

    TokenFactory& tokens() { return tokens_; }

private:
    SecurityContext make_context(CtxKind kind, SimTime now);

    Params p_;
    TokenFactory tokens_;
    std::map<std::uint32_t, std::string> hss_k_;
    std::map<std::uint32_t, std::string> device_k_;
    std::map<std::uint32_t, SecurityContext> nas_;
    std::map<std::uint32_t, SecurityContext> as_;
    std::map<std::uint32_t, AkaSession> sessions_;
    std::uint64_t aka_count_ = 0;
    std::uint64_t aka_failures_ = 0;
    std::uint64_t as_created_ = 0;
    std::uint64_t nas_created_ = 0;
    std::uint64_t counter_rejects_ = 0;
};

} // namespace cpsfog
