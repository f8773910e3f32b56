#include "fatpoints/resolution.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

namespace fatpoints {

namespace {

constexpr std::size_t kSlots = 8;

struct ExcRep {
    Int degree;
    std::array<Int, kSlots> mults;
    Int threshold;
    bool strict; // the line test uses < instead of <=
};

// Sorted representatives of the exceptional orbits on eight points, in the
// order the case analysis tries them.
constexpr std::array<ExcRep, 6> kReps = {{
    {6, {3, 2, 2, 2, 2, 2, 2, 2}, 2, false},
    {5, {2, 2, 2, 2, 2, 2, 1, 1}, 1, false},
    {4, {2, 2, 2, 1, 1, 1, 1, 1}, 1, false},
    {3, {2, 1, 1, 1, 1, 1, 1, 0}, 0, false},
    {2, {1, 1, 1, 1, 1, 0, 0, 0}, 0, false},
    {1, {1, 1, 0, 0, 0, 0, 0, 0}, 0, true},
}};

std::vector<Int> to_slots(const std::vector<Int>& mults) {
    std::vector<Int> nz;
    for (Int m : mults)
        if (m != 0) nz.push_back(m);
    if (nz.size() > kSlots) throw PreconditionError("at most 8 nonzero multiplicities");
    nz.resize(kSlots, 0);
    return nz;
}

Int dot_rep(const ExcRep& c, const std::vector<Int>& w, Int d) {
    __int128 acc = static_cast<__int128>(c.degree) * d;
    for (std::size_t i = 0; i < kSlots; ++i) acc -= static_cast<__int128>(c.mults[i]) * w[i];
    return narrow(acc);
}

Int e_at(Int d, std::vector<Int> w) { return expected_dim(DivisorClass(d, std::move(w))); }

Int third_diff(const std::function<Int(Int)>& h, Int t) {
    return h(t) - 3 * h(t - 1) + 3 * h(t - 2) - h(t - 3);
}

std::string fail_msg(const FatPointSpec& z, Int t, const char* what) {
    std::ostringstream os;
    os << "betti table of " << z << " at t=" << t << ": " << what;
    return os.str();
}

} // namespace

const BettiRow* BettiTable::row(Int t) const {
    for (const auto& r : rows)
        if (r.t == t) return &r;
    return nullptr;
}

Int BettiTable::nu_at(Int t) const {
    const BettiRow* r = row(t);
    return r ? r->nu : 0;
}

ExcInvariants exc_invariants(const DivisorClass& c) {
    require(intersection(c, c) == -1 && intersection(c, canonical_class(c.size())) == -1,
            "class is not exceptional (needs C.C = -1 and C.K = -1)");
    if (c.degree == 0) return {};
    Int mc = c.mults.empty() ? 0 : *std::max_element(c.mults.begin(), c.mults.end());
    Int rest = sub(c.degree, mc);
    return {std::min(mc, rest), std::max(mc, rest), mc};
}

Int ker_mu_dim(const DivisorClass& f) {
    std::vector<Int> w = to_slots(f.mults);
    Int d = f.degree;
    for (;;) {
        for (auto& m : w) m = std::max<Int>(m, 0);
        std::sort(w.begin(), w.end(), std::greater<>());
        if (e_at(d, w) == 0) return 0;
        bool hit = false;
        for (const auto& c : kReps) {
            Int v = dot_rep(c, w, d);
            if (c.strict ? v < c.threshold : v <= c.threshold) {
                d = sub(d, c.degree);
                for (std::size_t i = 0; i < kSlots; ++i) w[i] = sub(w[i], c.mults[i]);
                hit = true;
                break;
            }
        }
        if (!hit) break;
    }
    if (d == w[0] + w[1]) {
        // The line through the two heaviest points splits off.
        std::vector<Int> a = w, b = w;
        a[0] -= 1;
        b[1] -= 1;
        return add(e_at(d - 1, a), e_at(d - 1, b));
    }
    Int r = w[7];
    if (d == 8 * r + 3 && std::all_of(w.begin(), w.begin() + 7, [r](Int m) { return m == 3 * r + 1; }))
        return r + 1;
    Int e0 = e_at(d, w), e1 = e_at(d + 1, w);
    return std::max<Int>(0, 3 * e0 - e1);
}

BettiTable betti_table(const FatPointSpec& z) {
    std::vector<Int> slots = to_slots(z.mults());
    FatPointSpec zz(slots);
    BettiTable table;
    table.z = z;
    table.alpha = find_alpha(zz);
    table.tau = find_tau(zz);
    std::vector<Int> ts, h, ker;
    for (Int t = table.alpha - 2; t <= table.tau + 2; ++t) {
        ts.push_back(t);
        h.push_back(expected_dim(zz.at_degree(t)));
        ker.push_back(t < table.alpha ? 0 : ker_mu_dim(zz.at_degree(t)));
    }
    for (std::size_t i = 0; i < ts.size(); ++i) {
        BettiRow row{ts[i], h[i], 0, 0};
        if (i >= 2) row.nu = h[i] - 3 * h[i - 1] + ker[i - 1];
        if (i >= 3) row.s = row.nu - (h[i] - 3 * h[i - 1] + 3 * h[i - 2] - h[i - 3]);
        table.rows.push_back(row);
    }
    return table;
}

void verify_betti_table(const BettiTable& table) {
    auto h = [&table](Int t) -> Int {
        if (const BettiRow* r = table.row(t)) return r->h;
        if (t < table.alpha) return 0;
        return hilbert_polynomial(table.z, t);
    };
    Int total = 0;
    for (const auto& r : table.rows) {
        if (r.h < 0 || r.nu < 0 || r.s < 0) throw InvariantError(fail_msg(table.z, r.t, "negative entry"));
        if (r.nu - r.s != third_diff(h, r.t)) throw InvariantError(fail_msg(table.z, r.t, "nu - s differs from the third difference"));
        if (r.t == table.alpha && r.nu != r.h) throw InvariantError(fail_msg(table.z, r.t, "nu at alpha differs from h"));
        if (r.t > table.tau + 1 && r.nu != 0) throw InvariantError(fail_msg(table.z, r.t, "generator past tau+1"));
        total += r.nu;
    }
    if (total > table.alpha + 1) throw InvariantError(fail_msg(table.z, table.alpha, "more than alpha+1 generators"));
}

QuasiUniformResolution quasi_uniform_resolution(const FatPointSpec& z) {
    const auto& m = z.mults();
    require(m.size() >= 9, "quasi-uniform needs at least 9 points");
    require(std::is_sorted(m.begin(), m.end(), std::greater<>()), "quasi-uniform needs nonincreasing mults");
    require(m[0] == m[8], "quasi-uniform needs m1 = m9");
    auto h = [&z](Int t) { return std::max<Int>(hilbert_polynomial(z, t), 0); };
    QuasiUniformResolution out;
    Int t = 0;
    while (hilbert_polynomial(z, t) <= 0) t = add(t, 1);
    out.alpha = t;
    out.a = h(t);
    Int next = h(t + 1);
    out.b = std::max<Int>(next - 3 * out.a, 0);
    out.c = std::max<Int>(3 * out.a - next, 0);
    out.d = out.a + out.b - out.c - 1;
    out.label = "conjectural: predicted quasi-uniform resolution";
    return out;
}

ClassicalNuBounds classical_nu_bounds(const HilbertTable& table, Int alpha, Int beta, Int tau) {
    require(alpha <= beta && beta <= tau + 1, "need alpha <= beta <= tau+1");
    auto h = [&table, alpha](Int t) -> Int { return t < alpha ? 0 : table.value_at(t); };
    auto eps = [&](Int t) -> Int {
        if (t < alpha) return 0;
        return t < beta ? 1 : 2;
    };
    ClassicalNuBounds out;
    out.total_cap = alpha + 1;
    out.refined_total_cap = alpha + beta - tau;
    for (Int t = alpha - 2; t <= tau + 2; ++t) {
        NuBounds b{t, 0, 0};
        if (t <= tau + 1) b.upper = std::max<Int>(h(t) - 2 * h(t - 1) + h(t - 2) - eps(t - 1), 0);
        Int eps_prime = t == beta ? 1 : 0;
        b.lower = std::max({h(t) - 3 * h(t - 1) + 3 * h(t - 2) - h(t - 3), eps_prime, Int{0}});
        out.rows.push_back(b);
    }
    return out;
}

NuRange mybound_nu(const FatPointSpec& z, Int t) {
    require(z.max_mult() > 0, "needs a point of positive multiplicity");
    const auto& m = z.mults();
    std::size_t p1 = static_cast<std::size_t>(std::max_element(m.begin(), m.end()) - m.begin());
    std::vector<Int> less = m, more = m;
    less[p1] -= 1;
    more[p1] += 1;
    FatPointSpec z2(less), z1(more);
    Int base = expected_dim(z.at_degree(t + 1)) - 3 * expected_dim(z.at_degree(t)) + expected_dim(z2.at_degree(t - 1));
    return {std::max<Int>(base, 0), base + expected_dim(z1.at_degree(t))};
}

} // namespace fatpoints
