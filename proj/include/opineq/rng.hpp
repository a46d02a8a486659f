#pragma once

#include <complex>
#include <cstdint>
#include <string_view>

namespace opineq {

/// Counter-based random stream. Output i is a SplitMix64 finalization of
/// key + i * golden-gamma, where the key hashes (seed, label, index), so any
/// stream can be recreated independently of every other stream.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::string_view label, std::uint64_t index = 0);

  /// Child stream keyed by this stream's key, `label` and `index`.
  RandomStream substream(std::string_view label, std::uint64_t index = 0) const;

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi);
  /// Uniform on {0, ..., n - 1}; n >= 1.
  std::uint64_t below(std::uint64_t n);
  /// Standard normal via Box-Muller.
  double normal();
  /// Circularly symmetric complex normal with E|z|^2 = 1.
  std::complex<double> complex_normal();

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

 private:
  explicit RandomStream(std::uint64_t key);

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t mix64(std::uint64_t z);
std::uint64_t hash_label(std::string_view label);

}  // namespace opineq
