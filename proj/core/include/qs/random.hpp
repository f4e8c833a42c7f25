#pragma once

#include <cstdint>

#include "qs/rmap.hpp"

namespace qs {

// splitmix64 (Steele, Lea, Flood). Same seed gives the same stream on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // uniform in [lo, hi]
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  // independent stream derived from this one and a label
  SplitMix64 fork(std::uint64_t label);

 private:
  std::uint64_t state_;
};

// Integer entries in [-bound, bound].
QMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, int bound = 3);
TruncScalar random_scalar(SplitMix64& rng, int order, int bound = 3);
TruncScalar random_unit(SplitMix64& rng, int order, int bound = 3);
RMap random_rmap(SplitMix64& rng, ModShape src, ModShape dst, int base, int bound = 3);
REnd random_end(SplitMix64& rng, std::size_t rank, int d, int bound = 3);
// element of G_d(C^rank): residue matrix invertible
REnd random_gauge(SplitMix64& rng, std::size_t rank, int d, int bound = 2);

}  // namespace qs
