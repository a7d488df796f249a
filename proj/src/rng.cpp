#include "flrcov/rng.hpp"

namespace flrcov {

namespace {

// splitmix64 finalizer; full-avalanche 64-bit mix.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), engine_(mix64(mix64(seed) ^ stream_id)) {}

RngStream RngStream::substream(std::uint64_t k) const {
    return RngStream(seed_, mix64(stream_id_ ^ (0xD1B54A32D192ED03ULL * (k + 1))));
}

}  // namespace flrcov
