#include "holodual/seeded.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "holodual/error.hpp"

namespace holodual {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

SeededStream::SeededStream(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL))) {}

int SeededStream::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(static_cast<long long>(hi) - lo + 1);
  return static_cast<int>(lo + static_cast<long long>(next() % span));
}

BoundaryDistribution random_boundary(int n_lo, int n_hi, std::uint64_t seed,
                                     std::uint64_t stream) {
  if (n_lo > n_hi) {
    throw Error(ErrorKind::kValidation, "random_boundary: empty window [" +
                                            std::to_string(n_lo) + ", " +
                                            std::to_string(n_hi) + "]");
  }
  SeededStream rng(seed, stream);
  std::vector<Complex> c(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (auto& x : c) x = rng.complex_in_square();
  return BoundaryDistribution(n_lo, std::move(c));
}

Complex SeededStream::unit_phase() {
  const double phi = uniform(0.0, 2.0 * std::numbers::pi);
  return {std::cos(phi), std::sin(phi)};
}

}  // namespace holodual
