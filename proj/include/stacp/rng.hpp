#ifndef STACP_RNG_HPP
#define STACP_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace stacp {

// All randomness in an experiment flows from one root seed. Each stage draws
// from its own named substream so that skipping or reordering stages does not
// perturb the others.
inline std::uint64_t substream_seed(std::uint64_t root, std::string_view name) {
  std::uint64_t h = 14695981039346656037ull;  // FNV-1a over the stream name
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  // splitmix64 finalizer to decorrelate nearby roots
  std::uint64_t z = root ^ h;
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// mt19937_64 wrapper with explicit double conversion. The standard
// distributions are implementation-defined, so uniform doubles are produced
// from the raw bits directly to keep runs reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  Rng(std::uint64_t root, std::string_view stream) : eng_(substream_seed(root, stream)) {}

  // uniform in (0, 1), never exactly 0 or 1
  double uniform01() {
    return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // uniform integer in [0, n)
  std::uint64_t below(std::uint64_t n) {
    // multiply-shift; bias is negligible for n << 2^64
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(eng_()) * n) >> 64);
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace stacp

#endif
