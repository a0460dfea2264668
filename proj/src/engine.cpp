#include "cpsfog/engine.hpp"

namespace cpsfog {

void Engine::schedule(SimTime at, NodeId target, EventPayload payload) {
    if (at < clock_) {
        throw SimError("schedule: event at t=" + std::to_string(at.ms) +
                       "ms is in the past (clock=" + std::to_string(clock_.ms) + "ms)");
    }
    queue_.push(Event{at, next_seq_++, target, std::move(payload)});
}

std::uint64_t Engine::run_until(SimTime end) {
    if (end < clock_) {
        throw SimError("run_until: end t=" + std::to_string(end.ms) +
                       "ms is before clock=" + std::to_string(clock_.ms) + "ms");
    }
    std::uint64_t n = 0;
    while (!queue_.empty() && queue_.top().at <= end) {
        Event ev = queue_.top();
        queue_.pop();
        clock_ = ev.at;
        ++n;
        ++dispatched_;
        if (handler_) handler_(ev);
    }
    return n;
}

} // namespace cpsfog
