#include "fatpoints/hilbert.hpp"

#include "fatpoints/rational.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace fatpoints {

namespace {

__int128 sum_m_m1(const std::vector<Int>& mults) {
    __int128 s = 0;
    for (Int m : mults) s += static_cast<__int128>(m) * (static_cast<__int128>(m) + 1);
    return s;
}

__int128 twice_poly(Int t, __int128 mm1) {
    __int128 tt = t;
    return tt * tt + 3 * tt + 2 - mm1;
}

Int chi_of_reduced(const DivisorClass& w) {
    Int h = narrow(twice_poly(w.degree, sum_m_m1(w.mults)) / 2);
    return std::max<Int>(h, 0);
}

} // namespace

std::string_view to_string(Exactness e) {
    return e == Exactness::exact ? "exact" : "shgh-conjectural";
}

Exactness exactness_of(const FatPointSpec& z) {
    return z.nonzero_count() <= 9 ? Exactness::exact : Exactness::shgh_conjectural;
}

Int hilbert_polynomial(const FatPointSpec& z, Int t) { return narrow(twice_poly(t, sum_m_m1(z.mults())) / 2); }

Int euler_characteristic(const DivisorClass& f) {
    return narrow(twice_poly(f.degree, sum_m_m1(f.mults)) / 2);
}

Int expected_dim(const DivisorClass& f) {
    DivisorClass w = reduce_class(f);
    if (w.degree < 0) return 0;
    w = reduce_class(clamp_nonneg(w));
    if (w.degree < 0) return 0;
    return chi_of_reduced(clamp_nonneg(w));
}

Int h1_dim(const DivisorClass& f) {
    require(f.degree >= 0, "h1_dim needs degree >= 0");
    Int h1 = sub(expected_dim(f), euler_characteristic(f));
    if (h1 < 0) {
        std::ostringstream os;
        os << "negative h1 for " << f;
        throw InvariantError(os.str());
    }
    return h1;
}

Int find_alpha(const FatPointSpec& z) {
    Int t = z.max_mult();
    while (expected_dim(z.at_degree(t)) < 1) t = add(t, 1);
    return t;
}

Int find_tau(const FatPointSpec& z) {
    // Below alpha-1 the polynomial is negative, so starting there is safe.
    Int t = std::max<Int>(0, find_alpha(z) - 1);
    while (expected_dim(z.at_degree(t)) != hilbert_polynomial(z, t)) t = add(t, 1);
    return t;
}

Int uniform_alpha_closed_form(Int n, Int m) {
    require(n >= 1 && n <= 9, "uniform closed form needs 1 <= n <= 9");
    require(m >= 0, "multiplicity must be nonnegative");
    static const std::array<Rational, 9> c = {Rational(1),     Rational(1),     Rational(3, 2),
                                              Rational(2),     Rational(2),     Rational(12, 5),
                                              Rational(21, 8), Rational(48, 17), Rational(3)};
    return (c[static_cast<std::size_t>(n - 1)] * Rational(m)).ceil();
}

Int uniform_find_alpha(Int n, Int m) {
    require(n >= 1, "need at least one point");
    require(m >= 0, "multiplicity must be nonnegative");
    if (n <= 9) return uniform_alpha_closed_form(n, m);
    auto q = [n, m](Int a) {
        __int128 aa = a;
        return aa * aa - static_cast<__int128>(n) * m * m + 3 * aa - static_cast<__int128>(n) * m + 2;
    };
    Int a = -1;
    while (q(a) < 0) a = add(a, m);
    a -= m;
    while (q(a) <= 0) a = add(a, 1);
    return a;
}

Int uniform_find_tau(Int n, Int m) {
    require(n >= 1, "need at least one point");
    require(m >= 0, "multiplicity must be nonnegative");
    Int t = -1;
    switch (n) {
    case 1: t = m - 1; break;
    case 2:
    case 3: t = 2 * m - 1; break;
    case 4: t = 2 * m; break;
    case 5:
    case 6: t = ceil_div(5 * m - 1, 2); break;
    case 7: t = ceil_div(8 * m - 1, 3); break;
    case 8: t = ceil_div(17 * m - 1, 6); break;
    case 9: t = 3 * m; break;
    default: {
        auto q = [n, m](Int a) {
            __int128 aa = a;
            return aa * aa - static_cast<__int128>(n) * m * m + 3 * aa - static_cast<__int128>(n) * m + 2;
        };
        while (q(t) < 0) t = add(t, m);
        t -= m;
        while (q(t) < 0) t = add(t, 1);
    }
    }
    return std::max<Int>(t, 0);
}

Int HilbertTable::value_at(Int t) const {
    for (const auto& row : rows)
        if (row.t == t) return row.value;
    if (t < alpha) return 0;
    if (t >= tau) return hilbert_polynomial(z, t);
    return expected_dim(z.at_degree(t));
}

HilbertTable hilbert_table(const FatPointSpec& z, std::optional<Int> lo, std::optional<Int> hi) {
    HilbertTable table;
    table.z = z;
    table.alpha = find_alpha(z);
    table.tau = find_tau(z);
    table.exactness = exactness_of(z);
    Int a = lo.value_or(table.alpha - 1);
    Int b = hi.value_or(table.tau + 1);
    require(a <= b, "window needs lo <= hi");
    for (Int t = a; t <= b; ++t) table.rows.push_back({t, expected_dim(z.at_degree(t))});
    return table;
}

Int beta_expected(const FatPointSpec& z) {
    require(!z.is_zero(), "beta needs a nonzero subscheme");
    for (Int t = find_alpha(z);; t = add(t, 1)) {
        DivisorClass f = z.at_degree(t);
        if (expected_dim(f) < 2) continue;
        PsiDecomposition dec = psi_decompose(f);
        if (dec.in_psi && dec.n_part.empty()) return t;
    }
}

} // namespace fatpoints
