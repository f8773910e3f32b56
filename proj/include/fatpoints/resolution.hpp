#ifndef FATPOINTS_RESOLUTION_HPP
#define FATPOINTS_RESOLUTION_HPP

// Graded Betti numbers of fat point ideals supported at up to eight general
// points, plus classical bounds on the generator counts nu_t.

#include "fatpoints/hilbert.hpp"

#include <string>
#include <vector>

namespace fatpoints {

struct BettiRow {
    Int t = 0;
    Int h = 0;
    Int nu = 0; ///< minimal generators in degree t
    Int s = 0;  ///< first syzygies in degree t
    friend bool operator==(const BettiRow&, const BettiRow&) = default;
};

struct BettiTable {
    FatPointSpec z;
    Int alpha = 0;
    Int tau = 0;
    std::vector<BettiRow> rows; ///< t from alpha-2 to tau+2

    const BettiRow* row(Int t) const;
    Int nu_at(Int t) const;
};

struct ExcInvariants {
    Int lambda = 0;
    Int Lambda = 0;
    Int m_C = 0;
    friend bool operator==(const ExcInvariants&, const ExcInvariants&) = default;
};

/// lambda/Lambda/m_C of an exceptional class on at most eight points.
ExcInvariants exc_invariants(const DivisorClass& c);

/// Dimension of the kernel of I_t (x) R_1 -> I_{t+1} for F = F_t(Z) on at
/// most eight general points.
Int ker_mu_dim(const DivisorClass& f);

BettiTable betti_table(const FatPointSpec& z);

/// Throws InvariantError when nu - s != third difference of h, nu_alpha !=
/// h(alpha), nu_t != 0 past tau+1, any entry is negative, or the total
/// generator count exceeds alpha+1.
void verify_betti_table(const BettiTable& table);

/// Predicted resolution shape for quasi-uniform Z (at least nine points,
/// nonincreasing, m_1 = m_9), assuming maximal rank in degree alpha:
///   0 -> R[-alpha-2]^d + R[-alpha-1]^c -> R[-alpha-1]^b + R[-alpha]^a -> I -> 0
struct QuasiUniformResolution {
    Int alpha = 0;
    Int a = 0; ///< generators in degree alpha
    Int b = 0; ///< generators in degree alpha+1
    Int c = 0; ///< syzygies in degree alpha+1
    Int d = 0; ///< syzygies in degree alpha+2
    std::string label;
    friend bool operator==(const QuasiUniformResolution&, const QuasiUniformResolution&) = default;
};

QuasiUniformResolution quasi_uniform_resolution(const FatPointSpec& z);

struct NuBounds {
    Int t = 0;
    Int lower = 0;
    Int upper = 0;
};

struct ClassicalNuBounds {
    std::vector<NuBounds> rows;
    Int total_cap = 0;         ///< alpha + 1
    Int refined_total_cap = 0; ///< alpha + beta - tau
};

/// Dubreil and Campanella bounds on nu_t for t from alpha-2 to tau+2.
ClassicalNuBounds classical_nu_bounds(const HilbertTable& table, Int alpha, Int beta, Int tau);

struct NuRange {
    Int lower = 0;
    Int upper = 0;
    friend bool operator==(const NuRange&, const NuRange&) = default;
};

/// Bounds on nu_{t+1} from Z, Z minus and plus a simple point at the
/// point of largest multiplicity.
NuRange mybound_nu(const FatPointSpec& z, Int t);

} // namespace fatpoints

#endif
