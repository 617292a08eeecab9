#pragma once
// Seeded deterministic sampling. Raw mt19937_64 outputs only (no library
// distributions), so identical seeds give identical streams everywhere.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace cartoric {

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  // Uniform on [lo, hi]; modulo bias is irrelevant at sampling scale.
  long uniform(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("uniform: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(raw() % span);
  }

  // Numerator in [-num_bound, num_bound], denominator in [1, den_bound].
  Rat rational(long num_bound = 1000000, long den_bound = 1000) {
    return ratio(uniform(-num_bound, num_bound), uniform(1, den_bound));
  }

  Rat nonzero_rational(long num_bound = 1000000, long den_bound = 1000) {
    for (int tries = 0; tries < 64; ++tries) {
      Rat r = rational(num_bound, den_bound);
      if (r != 0) return r;
    }
    throw std::runtime_error("nonzero_rational: rejection bound exhausted");
  }

  std::vector<Rat> rational_vector(int len, long num_bound = 1000000, long den_bound = 1000) {
    std::vector<Rat> v;
    v.reserve(len);
    for (int i = 0; i < len; ++i) v.push_back(rational(num_bound, den_bound));
    return v;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace cartoric
