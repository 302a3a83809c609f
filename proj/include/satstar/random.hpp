#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace satstar {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014). Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

/// 64-bit FNV-1a, used to turn string stream labels into integers.
std::uint64_t fnv1a64(std::string_view text);

/// A reproducible random source identity: a master seed plus a stream label.
///
/// Draw i of a seed is `mix64(key() + (i + 1) * kGoldenGamma)`, i.e. the i-th
/// output of a SplitMix64 generator started at `key()`. Every draw is addressable
/// directly, so results do not depend on platform, library or evaluation order.
struct Seed {
  std::uint64_t master = 0;
  std::uint64_t stream = 0;

  static Seed labelled(std::uint64_t master, std::string_view label) {
    return Seed{master, fnv1a64(label)};
  }

  std::uint64_t key() const { return mix64(master ^ mix64(stream + kGoldenGamma)); }

  std::uint64_t draw(std::uint64_t index) const {
    return mix64(key() + (index + 1) * kGoldenGamma);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform(std::uint64_t index) const {
    return static_cast<double>(draw(index) >> 11) * 0x1.0p-53;
  }

  /// Child seed for sub-task `index` (trial number, restart attempt, ...).
  Seed derive(std::uint64_t index) const { return Seed{mix64(key() ^ mix64(index)), index}; }

  friend bool operator==(const Seed&, const Seed&) = default;
};

/// Sequential generator over a seed's draw stream.
class SeedStream {
 public:
  explicit SeedStream(Seed seed) : seed_(seed) {}

  std::uint64_t next() { return seed_.draw(counter_++); }
  double next_uniform() { return seed_.uniform(counter_++); }

  /// Unbiased integer in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);

  /// Fisher-Yates shuffle with this stream's draws (portable, unlike std::shuffle).
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  Seed seed_;
  std::uint64_t counter_ = 0;
};

std::string to_string(const Seed& seed);

}  // namespace satstar
