#pragma once

#include <cstdint>

namespace nilorb {

/// splitmix64 finaliser; used to derive independent per-task seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) { return mix64(seed ^ mix64(index)); }

}  // namespace nilorb
