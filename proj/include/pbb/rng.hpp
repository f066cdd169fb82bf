#pragma once

#include <cstdint>
#include <random>

namespace pbb {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Per-trajectory stream seed. For a fixed master seed this is a bijection
/// of the packed (point, trajectory) key, so streams never collide within
/// a sweep (point and trajectory indices < 2^32).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint32_t point_index,
                                 std::uint32_t traj_index) {
  const std::uint64_t key =
      (static_cast<std::uint64_t>(point_index) << 32) | traj_index;
  return splitmix64(splitmix64(master) ^ key);
}

/// Trajectory index reserved for the histogram-sampling stream of a point.
inline constexpr std::uint32_t kSamplingStreamTag = 0xFFFFFFFFu;

/// mt19937_64 with an explicit uint64->double conversion so records are
/// bit-identical across platforms (uniform_real_distribution is
/// implementation-defined).
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : eng_(seed) {}

  double next() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  /// Jump threshold in (0,1); excludes tiny values that would force the
  /// norm to decay through ~300 orders of magnitude before firing.
  double next_threshold() {
    double r = next();
    while (r <= 1e-12) r = next();
    return r;
  }

  std::uint64_t next_u64() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace pbb
