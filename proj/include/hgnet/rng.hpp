#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace hgnet {

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline uint64_t hash_combine(uint64_t a, uint64_t b) {
  uint64_t s = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
  return splitmix64(s);
}

inline uint64_t hash_str(uint64_t seed, const char* s) {
  uint64_t h = seed;
  for (; *s; ++s) h = hash_combine(h, static_cast<uint64_t>(static_cast<unsigned char>(*s)));
  return h;
}

// xoshiro256** seeded through splitmix64. The standard library distributions
// are implementation-defined, so every sample in the project goes through
// this generator; fixed seeds then reproduce corpora, parameter inits and
// loss histories bit-exactly on any platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // [0, n)
  size_t uniform_index(size_t n) { return n == 0 ? 0 : static_cast<size_t>(next_u64() % n); }

  // Box-Muller (trigonometric form, no rejection).
  double gaussian() {
    double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  int rademacher() { return (next_u64() & 1) ? 1 : -1; }

  bool bernoulli(double p) { return uniform() < p; }

  // Fisher-Yates; std::shuffle is implementation-defined.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = uniform_index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::array<uint64_t, 4> state_;
};

}  // namespace hgnet
