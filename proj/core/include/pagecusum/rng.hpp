#pragma once

#include <cstdint>
#include <random>

namespace pagecusum {

using Rng = std::mt19937_64;

/// Derives the seed of replication `index` from a master seed. Each
/// replication owns its own generator, so results do not depend on how
/// replications are distributed across workers.
std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t index) noexcept;

inline Rng make_stream(std::uint64_t master_seed, std::uint64_t index) {
  return Rng(stream_seed(master_seed, index));
}

/// Number of worker threads to use when the caller passes 0.
unsigned resolve_workers(unsigned requested) noexcept;

}  // namespace pagecusum
