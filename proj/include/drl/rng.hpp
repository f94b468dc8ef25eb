#pragma once

// Deterministic random streams. Every consumer of randomness in a run gets its
// own generator derived from (master seed, run index, stream id, sub id), so
// enabling or disabling one consumer never shifts the numbers another sees.

#include <cstdint>
#include <random>
#include <string_view>

namespace drl {

using rng_t = std::mt19937_64;

enum class stream : std::uint64_t {
    weights = 1,
    starts = 2,
    noise = 3,
    probe = 4,
    state = 5,
};

inline rng_t make_rng(std::uint64_t master, std::uint64_t run, std::uint64_t stream_id,
                      std::uint64_t sub = 0)
{
    auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); };
    auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
    std::seed_seq seq{lo(master), hi(master), lo(run), hi(run),
                      lo(stream_id), hi(stream_id), lo(sub), hi(sub)};
    return rng_t{seq};
}

inline rng_t make_rng(std::uint64_t master, std::uint64_t run, stream s, std::uint64_t sub = 0)
{
    return make_rng(master, run, static_cast<std::uint64_t>(s), sub);
}

/// FNV-1a, used to give named blocks stable sub-stream ids.
constexpr std::uint64_t stable_hash(std::string_view text)
{
    std::uint64_t h = 1469598103934665603ull;
    for (char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace drl
