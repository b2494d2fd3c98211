#ifndef CVQRC_RNG_HPP
#define CVQRC_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace cvqrc {

using Rng = std::mt19937_64;

// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes) noexcept;

// SplitMix64 finaliser; spreads nearby seeds over the whole state space.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Seed for a named component: splitmix64(master ^ fnv1a(name)). Streams of
// different components are independent of each other and of the order in
// which they are created.
std::uint64_t derive_seed(std::uint64_t master, std::string_view component) noexcept;

inline Rng make_rng(std::uint64_t master, std::string_view component) {
  return Rng(derive_seed(master, component));
}

}  // namespace cvqrc

#endif  // CVQRC_RNG_HPP
