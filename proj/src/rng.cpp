#include "rearrange/rng.hpp"

namespace rearrange {

namespace {

constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline std::uint64_t mulhilo(std::uint64_t a, std::uint64_t b,
                             std::uint64_t& hi) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  return static_cast<std::uint64_t>(p);
}

inline void round_once(std::array<std::uint64_t, 4>& x,
                       const std::array<std::uint64_t, 2>& k) {
  std::uint64_t hi0, hi1;
  const std::uint64_t lo0 = mulhilo(kMul0, x[0], hi0);
  const std::uint64_t lo1 = mulhilo(kMul1, x[2], hi1);
  x = {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
}

}  // namespace

std::array<std::uint64_t, 4> Philox4x64::block(
    std::array<std::uint64_t, 4> ctr, std::array<std::uint64_t, 2> key) {
  for (int r = 0; r < 9; ++r) {
    round_once(ctr, key);
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  round_once(ctr, key);
  return ctr;
}

std::uint64_t RngStream::next_u64() {
  if (pos_ == 4) {
    buf_ = Philox4x64::block({block_index_, 0, 0, 0}, key_);
    ++block_index_;
    pos_ = 0;
  }
  return buf_[pos_++];
}

std::uint64_t RngStream::next_below(std::uint64_t bound) {
  // Classic rejection from the top of the 64-bit range.
  const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
  std::uint64_t v;
  do {
    v = next_u64();
  } while (v >= limit);
  return v % bound;
}

}  // namespace rearrange
