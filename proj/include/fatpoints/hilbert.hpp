#ifndef FATPOINTS_HILBERT_HPP
#define FATPOINTS_HILBERT_HPP

// Expected dimensions of linear systems and the numerical characters
// alpha, beta and tau of a fat point subscheme. For at most nine nonzero
// multiplicities these are the actual values for general points; beyond
// nine they are the values predicted by the SHGH conjecture.

#include "fatpoints/lattice.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace fatpoints {

enum class Exactness { exact, shgh_conjectural };

std::string_view to_string(Exactness e);

/// Exact for at most nine nonzero multiplicities.
Exactness exactness_of(const FatPointSpec& z);

/// (t^2 + 3t + 2 - sum m(m+1)) / 2.
Int hilbert_polynomial(const FatPointSpec& z, Int t);

/// (F.F - K.F)/2 + 1.
Int euler_characteristic(const DivisorClass& f);

/// e(F): zero unless F reduces to a class of nonnegative degree, otherwise
/// max(0, chi) of the reduced class with negative mults cleared.
Int expected_dim(const DivisorClass& f);

/// expected_dim(F) - chi(F). Requires degree >= 0.
Int h1_dim(const DivisorClass& f);

/// Least t >= 0 with e(F_t(Z)) > 0.
Int find_alpha(const FatPointSpec& z);

/// Least t >= 0 with e(F_t(Z)) = P_Z(t).
Int find_tau(const FatPointSpec& z);

/// ceil(c_n * m) for 1 <= n <= 9.
Int uniform_alpha_closed_form(Int n, Int m);

/// Uniform shortcuts: table values for n <= 9, the quadratic inequality for n > 9.
Int uniform_find_alpha(Int n, Int m);
Int uniform_find_tau(Int n, Int m);

struct HilbertRow {
    Int t = 0;
    Int value = 0;
    friend bool operator==(const HilbertRow&, const HilbertRow&) = default;
};

struct HilbertTable {
    FatPointSpec z;
    Int alpha = 0;
    Int tau = 0;
    std::vector<HilbertRow> rows;
    Exactness exactness = Exactness::exact;

    /// Row value inside the window; 0 below alpha and P_Z(t) from tau on.
    Int value_at(Int t) const;
};

/// Rows of e(F_t(Z)) over [lo, hi], defaulting to [alpha-1, tau+1].
HilbertTable hilbert_table(const FatPointSpec& z, std::optional<Int> lo = {}, std::optional<Int> hi = {});

/// Least t >= alpha where F_t(Z) has no fixed exceptional part and the
/// expected system has dimension at least 2 (so its base locus is finite).
Int beta_expected(const FatPointSpec& z);

} // namespace fatpoints

#endif
