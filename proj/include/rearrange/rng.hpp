#pragma once

#include <array>
#include <cstdint>

namespace rearrange {

// Philox4x64-10 counter-based block cipher. Stateless: a (counter, key)
// pair maps to four 64-bit words, so independent streams are just
// independent keys and parallel workers never share mutable state.
struct Philox4x64 {
  static std::array<std::uint64_t, 4> block(std::array<std::uint64_t, 4> ctr,
                                            std::array<std::uint64_t, 2> key);
};

// Sequential view of one Philox stream. Key = (master seed, stream id);
// the counter walks blocks of four outputs.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : key_{seed, stream_id} {}

  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on {0, 1, ..., bound-1}, unbiased via rejection.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> buf_{};
  std::uint64_t block_index_ = 0;
  int pos_ = 4;  // buffer exhausted
};

// Substream contract: trial t of a run seeded with `seed` draws exclusively
// from trial_stream(seed, t), so results do not depend on trial scheduling.
inline RngStream trial_stream(std::uint64_t seed, std::uint64_t trial) {
  return RngStream(seed, trial);
}

}  // namespace rearrange
