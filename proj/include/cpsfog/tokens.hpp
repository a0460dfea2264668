#pragma once

// Opaque token mint. Crypto material is tokenized: equality of tokens stands
// in for possession of the same key. splitmix64 is a bijection on u64, so
// distinct counter values can never mint the same token.

#include <cstdint>
#include <string>

#include "cpsfog/rng.hpp"

namespace cpsfog {

class TokenFactory {
public:
    TokenFactory() = default;
    explicit TokenFactory(std::uint64_t scenario_seed)
        : salt_(splitmix64(scenario_seed ^ 0x746f6b656e73ULL)) {}

    // prefix is a short class tag: "K" root key, "k" session key id,
    // "t" temporary identity, "n" attestation nonce, "nh" next hop.
    std::string mint(std::string_view prefix) {
        const std::uint64_t v = splitmix64(salt_ ^ ++counter_);
        static constexpr char hexd[] = "0123456789abcdef";
        std::string s;
        s.reserve(prefix.size() + 17);
        s.append(prefix);
        s.push_back(':');
        for (int shift = 60; shift >= 0; shift -= 4) {
            s.push_back(hexd[(v >> shift) & 0xf]);
        }
        return s;
    }

    std::uint64_t minted() const { return counter_; }

private:
    std::uint64_t salt_ = 0;
    std::uint64_t counter_ = 0;
};

} // namespace cpsfog
