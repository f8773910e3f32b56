#ifndef FATPOINTS_ORACLE_HPP
#define FATPOINTS_ORACLE_HPP

// Brute-force check of the combinatorial predictions: fat points at seeded
// random positions over Z/p, with Hilbert function values and generator
// counts read off exact ranks of condition and multiplication matrices.

#include "fatpoints/lattice.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace fatpoints {

inline constexpr Int kDefaultPrime = 31991;

struct PointConfig {
    Int prime = kDefaultPrime;
    std::uint64_t seed = 0;
    /// Affine coordinates (x, y) of the points (x : y : 1).
    std::vector<std::pair<Int, Int>> points;

    /// n distinct points drawn from a seeded generator.
    static PointConfig random(std::size_t n, std::uint64_t seed, Int prime = kDefaultPrime);
};

/// Throws PreconditionError on a nonprime or out-of-range modulus,
/// coincident points or coordinates outside [0, p).
void validate(const PointConfig& cfg);

/// Rank of a dense matrix over Z/p (Gaussian elimination, first nonzero pivot).
Int rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, Int prime);

/// dim I(Z)_t at the configuration.
Int actual_hilbert(const PointConfig& cfg, const FatPointSpec& z, Int t);

/// dim I_t minus the rank of I_{t-1} (x) <x, y, z> -> I_t.
Int actual_nu(const PointConfig& cfg, const FatPointSpec& z, Int t);

struct OracleVote {
    Int value = 0;
    int votes = 0;   ///< seeds agreeing with value
    int samples = 0; ///< seeds tried
    bool unanimous() const { return votes == samples; }
};

/// Majority over three consecutive seeds starting at seed; a split vote
/// draws two more seeds before deciding.
OracleVote vote_hilbert(const FatPointSpec& z, Int t, std::uint64_t seed, Int prime = kDefaultPrime);
OracleVote vote_nu(const FatPointSpec& z, Int t, std::uint64_t seed, Int prime = kDefaultPrime);

} // namespace fatpoints

#endif
