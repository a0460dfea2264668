#pragma once

// Deterministic discrete-event core. Events dispatch in (at, seq) order; seq
// is assigned monotonically at schedule time, so equal-time events run in
// insertion order. Strictly sequential; replications with different seeds can
// run in parallel as independent Engine instances.

#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

#include "cpsfog/errors.hpp"
#include "cpsfog/event.hpp"
#include "cpsfog/time.hpp"

namespace cpsfog {

class Engine {
public:
    using Handler = std::function<void(const Event&)>;

    Engine() = default;

    void set_handler(Handler h) { handler_ = std::move(h); }

    SimTime now() const { return clock_; }

    // Scheduling in the past is a fatal scenario error.
    void schedule(SimTime at, NodeId target, EventPayload payload);

    // Dispatches every event with at <= end. The clock follows dispatched
    // events and does not jump past the last one.
    std::uint64_t run_until(SimTime end);

    std::size_t pending() const { return queue_.size(); }
    std::uint64_t dispatched() const { return dispatched_; }

private:
    struct Later {
        bool operator()(const Event& a, const Event& b) const {
            if (a.at != b.at) return a.at > b.at;
            return a.seq > b.seq;
        }
    };

    SimTime clock_{0};
    std::uint64_t next_seq_ = 0;
    std::uint64_t dispatched_ = 0;
    Handler handler_;
    std::priority_queue<Event, std::vector<Event>, Later> queue_;
};

} // namespace cpsfog
