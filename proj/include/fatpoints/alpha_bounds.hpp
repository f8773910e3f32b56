#ifndef FATPOINTS_ALPHA_BOUNDS_HPP
#define FATPOINTS_ALPHA_BOUNDS_HPP

// Lower bounds on alpha(Z). Functions taking (n, m) are for uniform Z with
// n points of multiplicity m. Z-based bounds only look at the nonzero
// multiplicities, so zero padding and reordering never change the value.

#include "fatpoints/bound_report.hpp"
#include "fatpoints/lattice.hpp"

#include <utility>

namespace fatpoints {

/// ceil(sum a_i m_i / (a_0 d)) for nonincreasing weights a_0..a_n with
/// a_0 d^2 >= a_1+..+a_r and r a_0 >= a_1+..+a_n.
BoundReport nef_test_bound(const FatPointSpec& z, const std::vector<Rational>& weights, Int r, Int d);

enum class CorVariant { a, b, c, d };

/// The four one-parameter families obtained from nef_test_bound; j is only
/// read by variant d.
BoundReport cor_bound(const FatPointSpec& z, CorVariant variant, Int r, Int d, Int j = 0);

/// Maximum of the variant d family over r <= n, d <= ceil(sqrt r), 1 <= j <= d^2.
BoundReport best_cor_d(const FatPointSpec& z);

/// (r, d) with r = ceil(d sqrt n) making nd/r largest.
std::pair<Int, Int> best_rd_a(Int n);
/// (r, d) with r = floor(d sqrt n) <= n making r/d largest.
std::pair<Int, Int> best_rd_b(Int n);

/// Classical unloading against d*E0 - (E1+..+Er).
BoundReport unloading_alpha(const FatPointSpec& z, Int r, Int d);
/// Closed form of unloading_alpha for uniform Z when 2r >= n + d^2.
BoundReport unloading_alpha_formula(Int n, Int m, Int r, Int d);
/// Best unloading_alpha over 1 <= r <= n and d <= ceil(sqrt r).
BoundReport best_search_alpha(const FatPointSpec& z);

/// Iterated unloading against E1-E2-..-Ei for i = 3..n.
BoundReport roe_alpha(const FatPointSpec& z);

/// Unloading with the relaxed subtraction test (valid in characteristic 0).
BoundReport hr_alpha(const FatPointSpec& z, Int r, Int d);
/// Closed forms of hr_alpha for uniform Z: (a) needs 2n >= 2r >= n + d^2,
/// (b) needs d(d+1)/2 <= r <= min(n, d^2).
BoundReport hr_alpha_formula_a(Int n, Int m, Int r, Int d);
BoundReport hr_alpha_formula_b(Int n, Int m, Int r, Int d);

/// Least t with F_t(Z) in Psi, scanning down from find_alpha.
BoundReport psi_alpha_bound(const FatPointSpec& z);

/// floor(m sqrt n) + 1.
Int nagata_ref(Int n, Int m);

} // namespace fatpoints

#endif
