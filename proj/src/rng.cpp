#include "metrotrade/rng.hpp"

namespace metrotrade {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

}  // namespace

CounterRng::Block CounterRng::philox(Block ctr,
                                     std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t substream)
    : key_{static_cast<std::uint32_t>(seed),
           static_cast<std::uint32_t>(seed >> 32)},
      substream_(substream) {}

void CounterRng::refill() {
  const Block counter{static_cast<std::uint32_t>(block_index_),
                      static_cast<std::uint32_t>(block_index_ >> 32),
                      static_cast<std::uint32_t>(substream_),
                      static_cast<std::uint32_t>(substream_ >> 32)};
  buffer_ = philox(counter, key_);
  ++block_index_;
  cursor_ = 0;
}

CounterRng::result_type CounterRng::operator()() {
  if (cursor_ == 4) refill();
  return buffer_[cursor_++];
}

double CounterRng::uniform() {
  const std::uint64_t hi = (*this)() >> 5;  // 27 bits
  const std::uint64_t lo = (*this)() >> 6;  // 26 bits
  const std::uint64_t bits = (hi << 26) | lo;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

}  // namespace metrotrade
