#pragma once

#include <array>
#include <cstdint>

namespace ipx {

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers:
/// as easy as 1, 2, 3", SC'11). Pure: the same (counter, key) always gives
/// the same four words.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr std::uint32_t kM0 = 0xD2511F53u;
  static constexpr std::uint32_t kM1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kW0 = 0x9E3779B9u;
  static constexpr std::uint32_t kW1 = 0xBB67AE85u;

  static constexpr Counter round(Counter c, Key k) noexcept {
    const std::uint64_t p0 = std::uint64_t{kM0} * c[0];
    const std::uint64_t p1 = std::uint64_t{kM1} * c[2];
    return {static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0], static_cast<std::uint32_t>(p1),
            static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1], static_cast<std::uint32_t>(p0)};
  }

  static constexpr Counter block(Counter c, Key k) noexcept {
    for (int i = 0; i < 10; ++i) {
      if (i > 0) {
        k[0] += kW0;
        k[1] += kW1;
      }
      c = round(c, k);
    }
    return c;
  }
};

/// One independent random stream: key = seed, counter = (draw index, stream id).
/// Any draw can be reproduced without replaying the stream before it.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t stream_id) noexcept
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        stream_(stream_id) {}

  std::uint64_t next_u64() noexcept {
    if (avail_ == 0) refill();
    --avail_;
    const std::size_t i = 2 * (1 - avail_);
    return (std::uint64_t{buf_[i + 1]} << 32) | buf_[i];
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  /// Uniform integer on [lo, hi].
  std::uint64_t integer(std::uint64_t lo, std::uint64_t hi) noexcept {
    return lo + next_u64() % (hi - lo + 1);
  }
  /// Standard normal via Box-Muller (both variates are used).
  double normal() noexcept;

 private:
  void refill() noexcept {
    buf_ = Philox4x32::block({static_cast<std::uint32_t>(index_),
                              static_cast<std::uint32_t>(index_ >> 32),
                              static_cast<std::uint32_t>(stream_),
                              static_cast<std::uint32_t>(stream_ >> 32)},
                             key_);
    ++index_;
    avail_ = 2;
  }

  Philox4x32::Key key_;
  std::uint64_t stream_;
  std::uint64_t index_ = 0;
  Philox4x32::Counter buf_{};
  int avail_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ipx
