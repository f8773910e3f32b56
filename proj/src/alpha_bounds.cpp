#include "fatpoints/alpha_bounds.hpp"

#include "fatpoints/hilbert.hpp"
#include "unload.hpp"

#include <algorithm>
#include <numeric>

namespace fatpoints {

namespace {

using detail::UnloadSequence;
using detail::working_mults;

BoundReport alpha_report(Method m, Int value) {
    BoundReport rep;
    rep.method = m;
    rep.direction = Direction::alpha_lower;
    rep.value = value;
    return rep;
}

BoundReport with_rd(BoundReport rep, Int r, Int d) {
    rep.params.r = r;
    rep.params.d = d;
    return rep;
}

Int genus(Int d) { return (d - 1) * (d - 2) / 2; }

struct UniformSplit {
    Int u;   // mn = u r + rho
    Int rho; // 0 < rho <= r
};

UniformSplit split(Int n, Int m, Int r) {
    Int mn = mul(m, n);
    Int u = ceil_div(mn, r) - 1;
    return {u, mn - u * r};
}

// Largest s with (s+1)(s+2) <= 2 rho, capped at d-1.
Int hr_s(Int rho, Int d) {
    Int s = 0;
    while (s + 1 < d && static_cast<__int128>(s + 2) * (s + 3) <= 2 * static_cast<__int128>(rho)) ++s;
    return s;
}

Int ceil_div128(__int128 a, __int128 b) {
    __int128 q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return narrow(q);
}

// Prefix sums over the sorted nonzero mults.
struct Prefix {
    std::vector<Int> v;
    std::vector<__int128> s;
    explicit Prefix(std::vector<Int> sorted) : v(std::move(sorted)), s(v.size() + 1, 0) {
        for (std::size_t i = 0; i < v.size(); ++i) s[i + 1] = s[i] + v[i];
    }
    __int128 sum(Int lo, Int hi) const { // [lo, hi) clipped to the list
        Int n = static_cast<Int>(v.size());
        lo = std::clamp<Int>(lo, 0, n);
        hi = std::clamp<Int>(hi, 0, n);
        return hi > lo ? s[static_cast<std::size_t>(hi)] - s[static_cast<std::size_t>(lo)] : 0;
    }
};

// Variant d with 0 < j <= d^2 < r <= n, in exact rationals with the common
// denominator q = r - d^2 + j cleared.
Int cor_d_value(const Prefix& p, Int r, Int d, Int j) {
    Int n = static_cast<Int>(p.v.size());
    Int e = d * d;
    Int q = r - e + j;
    Int big_m = floor_div(mul(r - e, q), j);
    __int128 num = p.sum(0, e - j) * q + p.sum(e - j, big_m + r) * j;
    if (big_m < n - r) num += static_cast<__int128>(p.v[static_cast<std::size_t>(big_m + r)]) * ((r - e) * static_cast<__int128>(q) - static_cast<__int128>(j) * big_m);
    return ceil_div128(num, static_cast<__int128>(q) * d);
}

std::vector<Rational> cor_d_weights(Int n, Int r, Int d, Int j) {
    Int e = d * d;
    std::vector<Rational> w{Rational(1)};
    if (j == 0) {
        for (Int i = 0; i < n; ++i) w.emplace_back(i < e ? 1 : 0);
        return w;
    }
    Int q = r - e + j;
    Int big_m = floor_div(mul(r - e, q), j);
    for (Int i = 0; i < n; ++i) {
        if (i < e - j)
            w.emplace_back(1);
        else if (i < big_m + r)
            w.emplace_back(j, q);
        else if (i == big_m + r)
            w.push_back(Rational(r - e) - Rational(mul(j, big_m), q));
        else
            w.emplace_back(0);
    }
    return w;
}

} // namespace

BoundReport nef_test_bound(const FatPointSpec& z, const std::vector<Rational>& weights, Int r, Int d) {
    require(!weights.empty(), "weights must include a_0");
    require(d >= 1, "d >= 1");
    std::size_t len = std::max(z.size(), weights.size() - 1);
    require(r >= 1 && static_cast<std::size_t>(r) <= len, "1 <= r <= n");
    std::vector<Rational> a = weights;
    a.resize(len + 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        require(a[i] >= Rational(0), "weights must be nonnegative");
        if (i > 0) require(a[i] <= a[i - 1], "weights must be nonincreasing");
    }
    require(a[0] > Rational(0), "weights must not all be zero");
    // Clear denominators.
    Int l = 1;
    for (const auto& q : a) l = mul(l / std::gcd(l, q.den()), q.den());
    std::vector<Int> ai;
    for (const auto& q : a) ai.push_back(mul(q.num(), l / q.den()));
    __int128 head = 0, all = 0;
    for (std::size_t i = 1; i < ai.size(); ++i) {
        if (static_cast<Int>(i) <= r) head += ai[i];
        all += ai[i];
    }
    require(static_cast<__int128>(ai[0]) * d * d >= head, "a_0 d^2 >= a_1 + ... + a_r");
    require(static_cast<__int128>(r) * ai[0] >= all, "r a_0 >= a_1 + ... + a_n");
    std::vector<Int> m = z.sorted();
    m.resize(len, 0);
    __int128 num = 0;
    for (std::size_t i = 0; i < len; ++i) num += static_cast<__int128>(ai[i + 1]) * m[i];
    BoundReport rep = with_rd(alpha_report(Method::nef_test, ceil_div128(num, static_cast<__int128>(ai[0]) * d)), r, d);
    rep.params.weights = weights;
    return rep;
}

BoundReport cor_bound(const FatPointSpec& z, CorVariant variant, Int r, Int d, Int j) {
    Prefix p(z.support());
    Int n = static_cast<Int>(p.v.size());
    require(r >= 1 && d >= 1, "r and d must be positive");
    require(r <= n, "r <= n (nonzero multiplicities)");
    __int128 total = p.sum(0, n);
    BoundReport rep;
    switch (variant) {
    case CorVariant::a: {
        require(static_cast<__int128>(r) * r >= static_cast<__int128>(n) * d * d, "r^2 >= n d^2");
        rep = alpha_report(Method::cor_a, ceil_div128(total * d, r));
        rep.params.weights.emplace_back(r);
        for (Int i = 0; i < n; ++i) rep.params.weights.emplace_back(d * d);
        break;
    }
    case CorVariant::b: {
        require(static_cast<__int128>(r) * r <= static_cast<__int128>(n) * d * d, "r^2 <= n d^2");
        rep = alpha_report(Method::cor_b, ceil_div128(total * r, static_cast<__int128>(n) * d));
        rep.params.weights.emplace_back(n);
        for (Int i = 0; i < n; ++i) rep.params.weights.emplace_back(r);
        break;
    }
    case CorVariant::c: {
        require(d * d >= r, "d^2 >= r");
        rep = alpha_report(Method::cor_c, ceil_div128(p.sum(0, r), d));
        rep.params.weights.emplace_back(1);
        for (Int i = 0; i < n; ++i) rep.params.weights.emplace_back(i < r ? 1 : 0);
        break;
    }
    case CorVariant::d: {
        require(d * d < r, "d^2 < r");
        require(j >= 0 && j <= d * d, "0 <= j <= d^2");
        Int v = j == 0 ? ceil_div128(p.sum(0, d * d), d) : cor_d_value(p, r, d, j);
        rep = alpha_report(Method::cor_d, v);
        rep.params.j = j;
        rep.params.weights = cor_d_weights(n, r, d, j);
        break;
    }
    }
    return with_rd(std::move(rep), r, d);
}

BoundReport best_cor_d(const FatPointSpec& z) {
    require(!z.is_zero(), "Z must be nonzero");
    Prefix p(z.support());
    Int n = static_cast<Int>(p.v.size());
    Int best = 0, br = 0, bd = 0, bj = 0;
    for (Int r = 1; r <= n; ++r) {
        for (Int d = 1; (d - 1) * (d - 1) < r; ++d) {
            for (Int j = 1; j <= d * d; ++j) {
                // With d^2 >= r this is the variant c value whatever j is.
                Int v = d * d >= r ? ceil_div128(p.sum(0, r), d) : cor_d_value(p, r, d, j);
                if (v > best) {
                    best = v;
                    br = r;
                    bd = d;
                    bj = j;
                }
            }
        }
    }
    BoundReport rep = bd * bd >= br ? cor_bound(z, CorVariant::c, br, bd) : cor_bound(z, CorVariant::d, br, bd, bj);
    rep.method = Method::cor_d;
    rep.params.j = bj;
    return rep;
}

std::pair<Int, Int> best_rd_a(Int n) {
    require(n >= 1, "n >= 1");
    Int rootn = isqrt_floor(n);
    Int r = rootn * rootn == n ? rootn : rootn + 1, d = 1;
    for (Int td = 1; td <= rootn; ++td) {
        Int tr = isqrt_ceil(mul(mul(td, td), n));
        if (tr * d < td * r) {
            r = tr;
            d = td;
        }
    }
    return {r, d};
}

std::pair<Int, Int> best_rd_b(Int n) {
    require(n >= 1, "n >= 1");
    Int rootn = isqrt_ceil(n);
    Int r = rootn * rootn == n ? rootn : rootn - 1, d = 1;
    for (Int td = 1; td <= rootn; ++td) {
        Int tr = std::min(isqrt_floor(mul(mul(td, td), n)), n);
        if (tr * d > td * r) {
            r = tr;
            d = td;
        }
    }
    return {r, d};
}

BoundReport unloading_alpha(const FatPointSpec& z, Int r, Int d) {
    require(r >= 1 && d >= 1, "r and d must be positive");
    require(static_cast<std::size_t>(r) <= z.size(), "r <= n");
    BoundReport rep = with_rd(alpha_report(Method::unloading, 0), r, d);
    if (z.is_zero()) return rep;
    UnloadSequence seq(working_mults(z, static_cast<std::size_t>(r)), static_cast<std::size_t>(r));
    for (Int t = 0;; ++t) {
        Int ti = t;
        std::size_t k = 0;
        for (;;) {
            const auto& st = seq.at(k);
            if (!(static_cast<__int128>(ti) * d - st.sum_r < 0 && ti >= st.top)) break;
            ti -= d;
            ++k;
        }
        if (ti >= seq.at(k).top) {
            rep.value = t;
            return rep;
        }
    }
}

BoundReport unloading_alpha_formula(Int n, Int m, Int r, Int d) {
    require(n >= 1 && m >= 0, "n >= 1 and m >= 0");
    require(r >= 1 && d >= 1, "r and d must be positive");
    require(r <= n, "r <= n");
    require(2 * r >= n + d * d, "2r >= n + d^2");
    BoundReport rep = with_rd(alpha_report(Method::unloading_formula, 0), r, d);
    if (m == 0) return rep;
    auto [u, rho] = split(n, m, r);
    rep.value = 1 + u * d + std::min(d - 1, ceil_div(rho, d) - 1);
    return rep;
}

BoundReport best_search_alpha(const FatPointSpec& z) {
    require(!z.is_zero(), "Z must be nonzero");
    FatPointSpec s(z.support());
    Int n = static_cast<Int>(s.size());
    BoundReport best = alpha_report(Method::best_unloading, 0);
    for (Int r = 1; r <= n; ++r) {
        for (Int d = 1; (d - 1) * (d - 1) < r; ++d) {
            Int v = unloading_alpha(s, r, d).value;
            if (v > best.value) best = with_rd(alpha_report(Method::best_unloading, v), r, d);
        }
    }
    return best;
}

BoundReport roe_alpha(const FatPointSpec& z) {
    std::vector<Int> w = working_mults(z, 3);
    for (std::size_t i1 = 2; i1 < w.size(); ++i1) {
        auto dot = [&w, i1] {
            __int128 s = w[0];
            for (std::size_t i = 1; i <= i1; ++i) s -= w[i];
            return s;
        };
        while (dot() < 0) {
            w[0] = add(w[0], 1);
            detail::drop_prefix(w, 1, i1 + 1);
        }
    }
    return alpha_report(Method::roe_alpha, w[0]);
}

BoundReport hr_alpha(const FatPointSpec& z, Int r, Int d) {
    require(r >= 1 && d >= 1, "r and d must be positive");
    require(static_cast<std::size_t>(r) <= z.size(), "r <= n");
    BoundReport rep = with_rd(alpha_report(Method::hr_alpha, 0), r, d);
    rep.validity.emplace_back(kCharZero);
    if (z.is_zero()) return rep;
    const Int g = genus(d);
    UnloadSequence seq(working_mults(z, static_cast<std::size_t>(r)), static_cast<std::size_t>(r));
    for (Int t = 0;; ++t) {
        Int ti = t;
        std::size_t k = 0;
        for (;;) {
            const auto& st = seq.at(k);
            __int128 ft = static_cast<__int128>(ti) * d - st.sum_r;
            bool on_curve = ft < g && ti >= d - 2;
            bool few_forms = static_cast<__int128>(ti + 1) * (ti + 2) <= 2 * static_cast<__int128>(st.sum_r) && ti < d && ti >= 0;
            if (!(on_curve || few_forms)) break;
            ti -= d;
            ++k;
        }
        if (ti >= seq.at(k).top) {
            rep.value = t;
            return rep;
        }
    }
}

BoundReport hr_alpha_formula_a(Int n, Int m, Int r, Int d) {
    require(n >= 1 && m >= 0, "n >= 1 and m >= 0");
    require(r >= 1 && d >= 1, "r and d must be positive");
    require(r <= n, "r <= n");
    require(2 * r >= n + d * d, "2r >= n + d^2");
    BoundReport rep = with_rd(alpha_report(Method::hr_alpha_formula_a, 0), r, d);
    rep.validity.emplace_back(kCharZero);
    if (m == 0) return rep;
    auto [u, rho] = split(n, m, r);
    rep.value = hr_s(rho, d) + u * d + 1;
    return rep;
}

BoundReport hr_alpha_formula_b(Int n, Int m, Int r, Int d) {
    require(n >= 1 && m >= 0, "n >= 1 and m >= 0");
    require(r >= 1 && d >= 1, "r and d must be positive");
    require(2 * r >= d * (d + 1), "d(d+1)/2 <= r");
    require(r <= n && r <= d * d, "r <= min(n, d^2)");
    BoundReport rep = with_rd(alpha_report(Method::hr_alpha_formula_b, 0), r, d);
    rep.validity.emplace_back(kCharZero);
    if (m == 0) return rep;
    auto [u, rho] = split(n, m, r);
    Int direct = floor_div(add(mul(m, r), genus(d) - 1), d);
    rep.value = 1 + std::min(direct, hr_s(rho, d) + u * d);
    return rep;
}

BoundReport psi_alpha_bound(const FatPointSpec& z) {
    require(!z.is_zero(), "Z must be nonzero");
    Int t = find_alpha(z);
    for (;;) {
        DivisorClass red = reduce_class(z.at_degree(t));
        if (!(red.degree >= red.mults[0] && red.degree >= 0)) break;
        --t;
    }
    return alpha_report(Method::psi, t + 1);
}

Int nagata_ref(Int n, Int m) {
    require(n >= 1 && m >= 1, "n >= 1 and m >= 1");
    return isqrt_floor(mul(mul(m, m), n)) + 1;
}

} // namespace fatpoints
