#include "fatpoints/tau_bounds.hpp"

#include "unload.hpp"

#include <algorithm>

namespace fatpoints {

namespace {

using detail::UnloadSequence;
using detail::working_mults;

BoundReport tau_report(Method m, Int value) {
    BoundReport rep;
    rep.method = m;
    rep.direction = Direction::tau_upper;
    rep.value = value;
    return rep;
}

BoundReport with_rd(BoundReport rep, Int r, Int d) {
    rep.params.r = r;
    rep.params.d = d;
    return rep;
}

Int genus(Int d) { return (d - 1) * (d - 2) / 2; }

// Largest f with f(f+1) <= 2s.
Int tri_root(Int s) {
    Int f = isqrt_floor(mul(2, s));
    while (f * (f + 1) > 2 * s) --f;
    return f;
}

} // namespace

BoundReport segre_tau(Int n, Int m) {
    require(n > 9, "n > 9");
    require(m >= 1, "m >= 1");
    return tau_report(Method::segre, mul(m, n) / 2);
}

BoundReport cubic_tau(Int n, Int m) {
    require(n > 9, "n > 9");
    require(m >= 1, "m >= 1");
    return tau_report(Method::cubic, mul(m, n) / 3);
}

BoundReport gimigliano_tau(const FatPointSpec& z) {
    require(!z.is_zero(), "Z must be nonzero");
    std::vector<Int> w = z.support();
    Int n = static_cast<Int>(w.size());
    Int d = 0;
    while (d * (d + 3) < 2 * n) ++d;
    Int s = 0;
    for (Int i = 0; i < d; ++i) s = add(s, w[static_cast<std::size_t>(i)]);
    return tau_report(Method::gimigliano, s);
}

BoundReport hirschowitz_tau(const FatPointSpec& z) {
    require(!z.is_zero(), "Z must be nonzero");
    __int128 s = 0;
    for (Int m : z.mults()) s += static_cast<__int128>(m) * (m + 1);
    Int t = z.max_mult();
    while (2 * static_cast<__int128>(ceil_div(t + 3, 2)) * ceil_div(t + 2, 2) <= s) ++t;
    return tau_report(Method::hirschowitz, t);
}

BoundReport catalisano_tau(const FatPointSpec& z) {
    std::vector<Int> w = z.support();
    const std::size_t n = w.size();
    require(n >= 5, "at least 5 nonzero multiplicities");
    // Runs of equal multiplicity: vs holds cumulative counts, vm the values.
    std::vector<Int> vs, vm;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (w[i] > w[i + 1]) {
            vs.push_back(static_cast<Int>(i + 1));
            vm.push_back(w[i]);
        }
    }
    vs.push_back(static_cast<Int>(n));
    vm.push_back(w[n - 1]);
    std::vector<Int> v(vm.size());
    v.back() = vm.back();
    for (std::size_t i = vm.size() - 1; i > 0; --i) v[i - 1] = vm[i - 1] - vm[i];
    std::vector<Int> vf, vr;
    for (Int s : vs) {
        Int f = tri_root(s);
        vf.push_back(f);
        vr.push_back(s - f * (f + 1) / 2);
    }
    Int t = vr.back() == 0 ? -1 : 0;
    Int d1 = t + vf.back();
    for (std::size_t i = 0; i < vs.size(); ++i) t = add(t, mul(vf[i], v[i]));
    Int five = w[0] + w[1] + w[2] + w[3] + w[4];
    if (2 * t + 1 < five) t = ceil_div(five - 1, 2);
    t = std::max(t, w[0] + w[1] - 1);
    const Int nn = static_cast<Int>(n);
    if (vr[0] == vf[0] && nn >= 9 && w[0] == w[n - 1] && w[0] > 1) t = w[0] * d1 + 1;
    if (vr[0] == 0 && nn > 9 && w[0] == w[n - 2] && w[n - 1] == 1) t = w[0] * d1 + 1;
    BoundReport rep = tau_report(Method::catalisano, t);
    rep.validity.emplace_back("point-count threshold read as the number of nonzero multiplicities");
    return rep;
}

BoundReport catalisano_tau_uniform(Int n, Int m) {
    require(n >= 5, "n >= 5");
    require(m >= 1, "m >= 1");
    Int f = tri_root(n);
    Int r = n - f * (f + 1) / 2;
    Int d1 = r == 0 ? f - 1 : f;
    Int t = add(d1, mul(m - 1, f));
    if (2 * t + 1 < 5 * m) t = ceil_div(5 * m - 1, 2);
    t = std::max(t, 2 * m - 1);
    if (r == f && n >= 9) t = m * d1 + 1;
    return tau_report(Method::catalisano, t);
}

BoundReport ballico_tau(Int n, Int m) {
    require(n >= 1 && m >= 0, "n >= 1 and m >= 0");
    const __int128 c = static_cast<__int128>(n) * m * (m + 1);
    Int t = 0;
    while (static_cast<__int128>(t) * (t + 3) - c < static_cast<__int128>(2) * t * (m - 1) - 2) ++t;
    return tau_report(Method::ballico, t);
}

BoundReport xu_tau(Int n, Int m) {
    require(n >= 1 && m >= 0, "n >= 1 and m >= 0");
    const __int128 c = static_cast<__int128>(10) * n * (m + 1) * (m + 1);
    Int t = 0;
    while (static_cast<__int128>(9) * (t + 3) * (t + 3) <= c) ++t;
    return tau_report(Method::xu, t);
}

BoundReport hhf_tau(Int n, Int m) {
    require(n >= 9, "n >= 9");
    require(m >= 0, "m >= 0");
    Int c = isqrt_ceil(n);
    return tau_report(Method::hhf, add(mul(m, c), ceil_div(c - 3, 2)));
}

BoundReport roe_tau(const FatPointSpec& z) {
    require(z.size() >= 2, "n >= 2");
    std::vector<Int> w = working_mults(z, 2);
    for (std::size_t i1 = 1; i1 + 1 < w.size(); ++i1) {
        auto dot = [&w, i1] {
            __int128 s = w[0];
            for (std::size_t i = 1; i <= i1 + 1; ++i) s -= w[i];
            return s;
        };
        while (dot() < -1) {
            w[0] = add(w[0], 1);
            detail::drop_prefix(w, 1, i1 + 1);
        }
    }
    return tau_report(Method::roe_tau, std::max<Int>(0, w[0] + w[1] - 1));
}

BoundReport hr_tau(const FatPointSpec& z, Int r, Int d) {
    require(r >= 1 && d >= 1, "r and d must be positive");
    require(static_cast<std::size_t>(r) <= z.size(), "r <= n");
    BoundReport rep = with_rd(tau_report(Method::hr_tau, 0), r, d);
    rep.validity.emplace_back(kCharZero);
    if (z.is_zero()) return rep;
    const Int g = genus(d);
    UnloadSequence seq(working_mults(z, static_cast<std::size_t>(r)), static_cast<std::size_t>(r));
    for (Int t = 0;; ++t) {
        Int ti = t;
        std::size_t k = 0;
        for (;;) {
            const auto& st = seq.at(k);
            if (!(static_cast<__int128>(ti) * d - st.sum_r >= g - 1 && ti >= d - 2 && st.top > 0)) break;
            ti -= d;
            ++k;
        }
        if (seq.at(k).top == 0) {
            rep.value = t;
            return rep;
        }
    }
}

BoundReport hr_tau_formula_a(Int n, Int m, Int r, Int d) {
    require(n >= 1 && m >= 0, "n >= 1 and m >= 0");
    require(r >= 1 && d >= 1, "r and d must be positive");
    require(r <= n, "r <= n");
    require(2 * r >= n + d * d, "2r >= n + d^2");
    BoundReport rep = with_rd(tau_report(Method::hr_tau_formula_a, 0), r, d);
    rep.validity.emplace_back(kCharZero);
    if (m == 0) return rep;
    Int u = ceil_div(mul(m, n), r) - 1;
    rep.value = std::max(ceil_div(add(mul(m, r), genus(d) - 1), d), (u + 1) * d - 2);
    return rep;
}

BoundReport hr_tau_formula_b(Int n, Int m, Int r, Int d) {
    require(n >= 1 && m >= 0, "n >= 1 and m >= 0");
    require(r >= 1 && d >= 1, "r and d must be positive");
    require(r <= n, "r <= n");
    require(r <= d * d, "r <= d^2");
    BoundReport rep = with_rd(tau_report(Method::hr_tau_formula_b, 0), r, d);
    rep.validity.emplace_back(kCharZero);
    if (m == 0) return rep;
    Int mn = mul(m, n);
    Int u = ceil_div(mn, r) - 1;
    Int rho = mn - u * r;
    rep.value = std::max(ceil_div(rho + genus(d) - 1, d) + u * d, (u + 1) * d - 2);
    return rep;
}

BoundReport ran_tau(Int n, Int m, const Rational& c) {
    require(c > Rational(0), "c > 0");
    require(n >= 1 && m >= 0, "n >= 1 and m >= 0");
    BoundReport rep = tau_report(Method::ran, 0);
    rep.params.c = c;
    // n/c >= sqrt(n) exactly when n >= c^2.
    if (static_cast<__int128>(n) * c.den() * c.den() >= static_cast<__int128>(c.num()) * c.num()) {
        __int128 num = static_cast<__int128>(m + 1) * n * c.den();
        __int128 q = num / c.num();
        if (num % c.num() != 0) ++q;
        rep.value = narrow(q) - 3;
    } else {
        rep.value = isqrt_ceil(mul(mul(m + 1, m + 1), n)) - 3;
    }
    return rep;
}

} // namespace fatpoints
