#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fat {

// Error type for all recoverable failures (bad input, malformed files,
// infeasible requests). Violations found by validation are data, not errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Symbols are small indices into an Alphabet. Endmarkers are reserved
// negative ids: they delimit tape content and never appear inside it.
using Symbol = std::int32_t;

inline constexpr Symbol kLend = -2;  // left input endmarker, written '<'
inline constexpr Symbol kRend = -1;  // right endmarker, written '>'

inline constexpr char kLendToken = '<';
inline constexpr char kRendToken = '>';

// Deterministic 64-bit mixer used wherever the artifact needs reproducible
// pseudo-randomness (seeded language choices, fuzz trials). Stable across
// platforms, unlike the standard library distributions.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Small stateful generator on top of splitmix64.
class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  // Uniform value in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace fat
