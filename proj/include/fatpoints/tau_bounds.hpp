#ifndef FATPOINTS_TAU_BOUNDS_HPP
#define FATPOINTS_TAU_BOUNDS_HPP

// Upper bounds on tau(Z). As with the alpha bounds, (n, m) means n points of
// multiplicity m and Z-based bounds only see the nonzero multiplicities.

#include "fatpoints/bound_report.hpp"
#include "fatpoints/lattice.hpp"

namespace fatpoints {

/// floor(mn/2) and floor(mn/3); n > 9, m >= 1.
BoundReport segre_tau(Int n, Int m);
BoundReport cubic_tau(Int n, Int m);

/// m_1 + .. + m_d for the least d with d(d+3) >= 2n.
BoundReport gimigliano_tau(const FatPointSpec& z);

/// Least t >= m_1 with 2 ceil((t+3)/2) ceil((t+2)/2) > sum m(m+1).
BoundReport hirschowitz_tau(const FatPointSpec& z);

/// At least five nonzero multiplicities. The run-length version; in the
/// special adjustments the point count stands in for the count variable.
BoundReport catalisano_tau(const FatPointSpec& z);
/// Uniform version; n >= 5, m >= 1.
BoundReport catalisano_tau_uniform(Int n, Int m);

/// Least t with t(t+3) - nm(m+1) >= 2t(m-1) - 2.
BoundReport ballico_tau(Int n, Int m);
/// Least t with 9(t+3)^2 > 10n(m+1)^2.
BoundReport xu_tau(Int n, Int m);

/// m ceil(sqrt n) + ceil((ceil(sqrt n) - 3)/2); n >= 9.
BoundReport hhf_tau(Int n, Int m);

/// Iterated unloading; returns m_1' + m_2' - 1 (at least 0). Needs n >= 2.
BoundReport roe_tau(const FatPointSpec& z);

/// Least t from which subtracting d*E0 - (E1+..+Er) while keeping
/// h^1 = 0 on the curve reaches a class with no points left.
BoundReport hr_tau(const FatPointSpec& z, Int r, Int d);
/// Closed forms: (a) needs 2r >= n + d^2, (b) needs r <= d^2 (and r <= n).
BoundReport hr_tau_formula_a(Int n, Int m, Int r, Int d);
BoundReport hr_tau_formula_b(Int n, Int m, Int r, Int d);

/// -3 + ceil((m+1) max(sqrt n, n/c)) given alpha >= c m for these n.
BoundReport ran_tau(Int n, Int m, const Rational& c);

} // namespace fatpoints

#endif
