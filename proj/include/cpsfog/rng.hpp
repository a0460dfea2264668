#pragma once

// Seeded random streams. One named stream per node or generator, all derived
// from the scenario seed, so adding a node never perturbs another node's
// draws. The generator (xoshiro256++) and every distribution transform are
// implemented here so a (seed, stream-id, draw-sequence) triple yields the
// same values on any platform.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cpsfog {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

class RngStream {
public:
    RngStream() : RngStream(0, "default") {}
    RngStream(std::uint64_t scenario_seed, std::string_view stream_id);

    std::uint64_t next_u64();

    // in [0, 1)
    double uniform01();
    double uniform(double a, double b);
    // inclusive bounds
    std::int64_t uniform_int(std::int64_t a, std::int64_t b);
    double exponential(double mean);
    bool bernoulli(double p);
    std::size_t discrete(std::span<const double> weights);
    double normal(double mean, double stddev);

    const std::string& id() const { return id_; }

private:
    std::uint64_t s_[4];
    std::string id_;
};

// dist-spec for the generic draw entry point
struct UniformDist { double a = 0.0, b = 1.0; };
struct ExponentialDist { double mean = 1.0; };
struct BernoulliDist { double p = 0.5; };
struct DiscreteDist { std::vector<double> weights; };

using DistributionSpec = std::variant<UniformDist, ExponentialDist, BernoulliDist, DiscreteDist>;

double draw(RngStream& stream, const DistributionSpec& dist);

// Stable stream labels: "dev.<n>.traffic", "cell.<n>.jam", ...
std::string stream_label(std::string_view prefix, std::uint32_t index, std::string_view purpose);

} // namespace cpsfog
