#include "qs/random.hpp"

namespace qs {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

SplitMix64 SplitMix64::fork(std::uint64_t label) {
  SplitMix64 child(next() ^ (label * 0xd1b54a32d192ed03ULL));
  child.next();
  return child;
}

QMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, int bound) {
  QMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = GaussQ(rng.uniform(-bound, bound));
  }
  return out;
}

TruncScalar random_scalar(SplitMix64& rng, int order, int bound) {
  TruncScalar out(order);
  for (int k = 0; k < order; ++k) out[k] = GaussQ(rng.uniform(-bound, bound));
  return out;
}

TruncScalar random_unit(SplitMix64& rng, int order, int bound) {
  TruncScalar out = random_scalar(rng, order, bound);
  while (out[0].is_zero()) out[0] = GaussQ(rng.uniform(-bound, bound));
  return out;
}

RMap random_rmap(SplitMix64& rng, ModShape src, ModShape dst, int base, int bound) {
  const std::size_t gens = src.rank * static_cast<std::size_t>(src.order / base);
  return RMap::from_generators(src, dst, base, random_matrix(rng, dst.dim(), gens, bound));
}

REnd random_end(SplitMix64& rng, std::size_t rank, int d, int bound) {
  return REnd(random_rmap(rng, {rank, d}, {rank, d}, d, bound));
}

REnd random_gauge(SplitMix64& rng, std::size_t rank, int d, int bound) {
  std::vector<QMatrix> coeffs;
  QMatrix g0 = random_matrix(rng, rank, rank, bound);
  while (qs::rank(g0) < rank) g0 = random_matrix(rng, rank, rank, bound);
  coeffs.push_back(std::move(g0));
  for (int k = 1; k < d; ++k) coeffs.push_back(random_matrix(rng, rank, rank, bound));
  return REnd::from_coeffs(rank, d, coeffs);
}

}  // namespace qs
