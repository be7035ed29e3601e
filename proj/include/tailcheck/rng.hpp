#pragma once

#include <cstdint>
#include <random>

namespace tailcheck {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Seed for stream `stream_index` under `master_seed`. Depends on nothing
// else, so per-replication results are invariant to thread count and
// scheduling order.
inline std::uint64_t derive_stream_seed(std::uint64_t master_seed,
                                        std::uint64_t stream_index) {
  std::uint64_t s = master_seed ^ (0x9e3779b97f4a7c15ull * (stream_index + 1));
  (void)splitmix64_next(s);
  return splitmix64_next(s);
}

// One independent random stream. Uniform draws are mapped from the raw
// 64-bit engine output by a fixed formula (not std::uniform_real_distribution,
// whose output is implementation-defined), so sequences are reproducible.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
      : engine_(derive_stream_seed(master_seed, stream_index)) {}

  // Uniform on (0,1), both endpoints excluded; 53-bit resolution.
  double uniform01() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tailcheck
