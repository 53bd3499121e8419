/**
 * Seeding helpers for reproducible Monte Carlo runs.
 *
 * Trial k of a run with master seed s draws from an engine seeded with
 * derive_seed(s, k), so results are independent of trial execution order.
 */

#ifndef IONPAIR_RNG_HPP
#define IONPAIR_RNG_HPP

#include <cstdint>
#include <random>

namespace ionpair {

/// splitmix64 finalizer; full-period mixing of a 64-bit counter.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-based per-trial seed derivation.
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t trial) {
    return splitmix64(splitmix64(master_seed) ^ splitmix64(trial + 0x517cc1b727220a95ULL));
}

inline std::mt19937_64 make_engine(std::uint64_t seed) { return std::mt19937_64{seed}; }

}  // namespace ionpair

#endif  // IONPAIR_RNG_HPP
