// Seeded, stream-addressed random numbers for Monte Carlo replication.
// Identical (seed, stream_id) pairs reproduce identical draws, so
// replications can be farmed out to workers in any order.

#pragma once

#include <cstdint>
#include <random>

namespace flrcov {

class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    /// One standard normal draw.
    double normal() { return normal_(engine_); }

    /// A derived independent stream, deterministic in (this stream, k).
    RngStream substream(std::uint64_t k) const;

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace flrcov
