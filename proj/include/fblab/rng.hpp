#ifndef FBLAB_RNG_HPP
#define FBLAB_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "fblab/linalg.hpp"

namespace fblab {

// Deterministic RNG wrapper. std::mt19937_64 has a pinned algorithm, but the
// standard distributions do not, so all mappings to doubles live here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  int uniform_int(int lo, int hi) { // inclusive bounds
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(gen_() % span);
  }

  // Unit vector in R^n by rejection from the cube; deterministic.
  std::vector<double> unit_vector(int n) {
    std::vector<double> v(static_cast<size_t>(n));
    while (true) {
      double s = 0.0;
      for (auto& x : v) {
        x = uniform(-1.0, 1.0);
        s += x * x;
      }
      if (s > 1e-4 && s <= 1.0) {
        const double inv = 1.0 / std::sqrt(s);
        for (auto& x : v) x *= inv;
        return v;
      }
    }
  }

  Point point_in_ball(int d, double radius) {
    while (true) {
      Point p{0, 0, 0};
      double s = 0.0;
      for (int i = 0; i < d; ++i) {
        p[i] = uniform(-1.0, 1.0);
        s += p[i] * p[i];
      }
      if (s <= 1.0) {
        for (int i = 0; i < d; ++i) p[i] *= radius;
        return p;
      }
    }
  }

 private:
  std::mt19937_64 gen_;
};

} // namespace fblab

#endif
