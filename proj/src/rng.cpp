#include "cpsfog/rng.hpp"

#include <cmath>
#include <numeric>

namespace cpsfog {

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

RngStream::RngStream(std::uint64_t scenario_seed, std::string_view stream_id)
    : id_(stream_id) {
    // splitmix chain over (seed ^ label hash); xoshiro requires a nonzero state,
    // which splitmix64 output guarantees in practice (four zero outputs would
    // need four consecutive fixed points).
    std::uint64_t x = scenario_seed ^ fnv1a(stream_id);
    for (auto& word : s_) {
        x = splitmix64(x);
        word = x;
    }
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

std::uint64_t RngStream::next_u64() {
    // xoshiro256++
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RngStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double a, double b) {
    if (!(a <= b)) throw std::invalid_argument("uniform: a > b");
    return a + uniform01() * (b - a);
}

std::int64_t RngStream::uniform_int(std::int64_t a, std::int64_t b) {
    if (a > b) throw std::invalid_argument("uniform_int: a > b");
    const std::uint64_t span = static_cast<std::uint64_t>(b - a) + 1;
    if (span == 0) return static_cast<std::int64_t>(next_u64()); // full 64-bit range
    return a + static_cast<std::int64_t>(next_u64() % span);
}

double RngStream::exponential(double mean) {
    if (!(mean > 0.0)) throw std::invalid_argument("exponential: mean must be > 0");
    const double u = uniform01(); // in [0,1), so 1-u in (0,1]
    return -mean * std::log(1.0 - u);
}

bool RngStream::bernoulli(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("bernoulli: p outside [0,1]");
    return uniform01() < p;
}

std::size_t RngStream::discrete(std::span<const double> weights) {
    if (weights.empty()) throw std::invalid_argument("discrete: empty weights");
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw std::invalid_argument("discrete: negative weight");
        total += w;
    }
    if (!(total > 0.0)) throw std::invalid_argument("discrete: zero total weight");
    double x = uniform01() * total;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
        if (x < weights[i]) return i;
        x -= weights[i];
    }
    return weights.size() - 1;
}

double RngStream::normal(double mean, double stddev) {
    if (!(stddev >= 0.0)) throw std::invalid_argument("normal: stddev must be >= 0");
    // Box-Muller, one variate per call; two uniforms drawn every time keeps
    // the stream's draw sequence independent of caller history.
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    return mean + stddev * r * std::cos(6.283185307179586477 * u2);
}

double draw(RngStream& stream, const DistributionSpec& dist) {
    return std::visit(
        [&stream](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, UniformDist>) {
                return stream.uniform(d.a, d.b);
            } else if constexpr (std::is_same_v<T, ExponentialDist>) {
                return stream.exponential(d.mean);
            } else if constexpr (std::is_same_v<T, BernoulliDist>) {
                return stream.bernoulli(d.p) ? 1.0 : 0.0;
            } else {
                return static_cast<double>(stream.discrete(d.weights));
            }
        },
        dist);
}

std::string stream_label(std::string_view prefix, std::uint32_t index, std::string_view purpose) {
    std::string s;
    s.reserve(prefix.size() + purpose.size() + 12);
    s.append(prefix);
    s.push_back('.');
    s.append(std::to_string(index));
    s.push_back('.');
    s.append(purpose);
    return s;
}

} // namespace cpsfog
