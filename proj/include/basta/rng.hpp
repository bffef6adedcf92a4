#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace basta {

// Deterministic uniform stream. Identical (seed, replication) gives an
// identical draw sequence on every platform: the generator is std::mt19937_64
// seeded with seed + replication, and draws map the top 53 bits of each
// 64-bit output to [0, 1). draws() exposes the stream position so tests can
// assert exact per-call consumption.
class rng_stream {
  public:
    explicit rng_stream(std::uint64_t seed, std::uint64_t replication = 0)
        : engine_(seed + replication) {}

    // Test helper: replays a fixed sequence, throws std::out_of_range past its end.
    static rng_stream scripted(std::vector<double> draws);

    double next_uniform();

    std::uint64_t draws() const { return draws_; }

  private:
    rng_stream() = default;
    std::mt19937_64 engine_;
    std::vector<double> script_;
    std::size_t script_pos_ = 0;
    bool scripted_ = false;
    std::uint64_t draws_ = 0;
};

}  // namespace basta
