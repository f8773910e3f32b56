#include "fatpoints/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace fatpoints {

namespace {

using Row = std::vector<std::uint32_t>;

bool is_prime(Int p) {
    if (p < 2) return false;
    for (Int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

// Monomials x^k y^l z^(t-k-l) of degree t, indexed by (k, l).
struct Monomials {
    Int t;
    std::vector<std::pair<Int, Int>> list;
    std::map<std::pair<Int, Int>, std::size_t> index;
    explicit Monomials(Int deg) : t(deg) {
        for (Int k = 0; k <= t; ++k)
            for (Int l = 0; l + k <= t; ++l) {
                index[{k, l}] = list.size();
                list.emplace_back(k, l);
            }
    }
};

// Binomials mod p up to row n.
std::vector<std::vector<std::uint32_t>> binomials(Int n, std::uint64_t p) {
    std::vector<std::vector<std::uint32_t>> c(static_cast<std::size_t>(n + 1));
    for (Int i = 0; i <= n; ++i) {
        auto& row = c[static_cast<std::size_t>(i)];
        row.assign(static_cast<std::size_t>(i + 1), 1);
        for (Int j = 1; j < i; ++j) {
            const auto& prev = c[static_cast<std::size_t>(i - 1)];
            row[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>((prev[static_cast<std::size_t>(j - 1)] + prev[static_cast<std::size_t>(j)]) % p);
        }
    }
    return c;
}

// One row per derivative d^(i+j)/dx^i dy^j with i+j < m at each point,
// evaluated on the dehomogenized monomials x^k y^l (scaled by 1/(i! j!),
// which leaves the rank alone since p > t).
std::vector<Row> condition_rows(const PointConfig& cfg, const FatPointSpec& z, const Monomials& mons) {
    const std::uint64_t p = static_cast<std::uint64_t>(cfg.prime);
    auto c = binomials(mons.t, p);
    std::vector<Row> rows;
    for (std::size_t pt = 0; pt < z.size(); ++pt) {
        Int m = z.mults()[pt];
        auto [a, b] = cfg.points[pt];
        for (Int i = 0; i < m; ++i) {
            for (Int j = 0; i + j < m; ++j) {
                Row row(mons.list.size(), 0);
                for (std::size_t col = 0; col < mons.list.size(); ++col) {
                    auto [k, l] = mons.list[col];
                    if (k < i || l < j) continue;
                    std::uint64_t v = c[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
                    v = v * c[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)] % p;
                    v = v * pow_mod(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(k - i), p) % p;
                    v = v * pow_mod(static_cast<std::uint64_t>(b), static_cast<std::uint64_t>(l - j), p) % p;
                    row[col] = static_cast<std::uint32_t>(v);
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<Row>& rows, std::size_t cols, std::uint64_t p) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        std::uint64_t inv = pow_mod(rows[r][col], p - 2, p);
        for (std::size_t k = col; k < cols; ++k) rows[r][k] = static_cast<std::uint32_t>(rows[r][k] * inv % p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            std::uint64_t f = p - rows[i][col];
            for (std::size_t k = col; k < cols; ++k)
                rows[i][k] = static_cast<std::uint32_t>((rows[i][k] + f * rows[r][k]) % p);
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

// Basis of the forms of degree t through Z, as coefficient vectors.
std::vector<Row> ideal_basis(const PointConfig& cfg, const FatPointSpec& z, const Monomials& mons) {
    const std::uint64_t p = static_cast<std::uint64_t>(cfg.prime);
    const std::size_t cols = mons.list.size();
    auto rows = condition_rows(cfg, z, mons);
    auto pivots = rref(rows, cols, p);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Row> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Row v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = static_cast<std::uint32_t>((p - rows[i][free]) % p);
        basis.push_back(std::move(v));
    }
    return basis;
}

void check_degree(const PointConfig& cfg, const FatPointSpec& z, Int t) {
    validate(cfg);
    require(cfg.points.size() == z.size(), "one point per multiplicity");
    require(t < cfg.prime, "degree must be below the prime");
}

OracleVote vote(const std::function<Int(const PointConfig&)>& eval, std::size_t n, std::uint64_t seed, Int prime) {
    std::map<Int, int> tally;
    OracleVote out;
    auto draw = [&](int count) {
        for (int i = 0; i < count; ++i) {
            ++tally[eval(PointConfig::random(n, seed + static_cast<std::uint64_t>(out.samples), prime))];
            ++out.samples;
        }
    };
    draw(3);
    if (tally.size() > 1) draw(2);
    for (auto [v, c] : tally)
        if (c > out.votes) {
            out.value = v;
            out.votes = c;
        }
    return out;
}

} // namespace

PointConfig PointConfig::random(std::size_t n, std::uint64_t seed, Int prime) {
    require(prime > 2 && prime < (Int{1} << 31) && is_prime(prime), "modulus must be an odd prime below 2^31");
    PointConfig cfg;
    cfg.prime = prime;
    cfg.seed = seed;
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<Int> coord(0, prime - 1);
    std::set<std::pair<Int, Int>> seen;
    while (cfg.points.size() < n) {
        std::pair<Int, Int> pt{coord(gen), coord(gen)};
        if (seen.insert(pt).second) cfg.points.push_back(pt);
    }
    return cfg;
}

void validate(const PointConfig& cfg) {
    require(cfg.prime > 2 && cfg.prime < (Int{1} << 31) && is_prime(cfg.prime), "modulus must be an odd prime below 2^31");
    std::set<std::pair<Int, Int>> seen;
    for (auto pt : cfg.points) {
        require(pt.first >= 0 && pt.first < cfg.prime && pt.second >= 0 && pt.second < cfg.prime,
                "coordinates must lie in [0, p)");
        require(seen.insert(pt).second, "points must be distinct");
    }
}

Int rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, Int prime) {
    if (rows.empty()) return 0;
    std::size_t cols = rows.front().size();
    return static_cast<Int>(rref(rows, cols, static_cast<std::uint64_t>(prime)).size());
}

Int actual_hilbert(const PointConfig& cfg, const FatPointSpec& z, Int t) {
    check_degree(cfg, z, t);
    if (t < 0) return 0;
    Monomials mons(t);
    Int cols = static_cast<Int>(mons.list.size());
    return cols - rank_mod_p(condition_rows(cfg, z, mons), cfg.prime);
}

Int actual_nu(const PointConfig& cfg, const FatPointSpec& z, Int t) {
    check_degree(cfg, z, t);
    if (t < 0) return 0;
    Int dim_t = actual_hilbert(cfg, z, t);
    if (t == 0) return dim_t;
    Monomials lower(t - 1), upper(t);
    auto basis = ideal_basis(cfg, z, lower);
    std::vector<Row> products;
    for (const auto& f : basis) {
        Row fx(upper.list.size(), 0), fy(upper.list.size(), 0), fz(upper.list.size(), 0);
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] == 0) continue;
            auto [k, l] = lower.list[i];
            fx[upper.index.at({k + 1, l})] = f[i];
            fy[upper.index.at({k, l + 1})] = f[i];
            fz[upper.index.at({k, l})] = f[i];
        }
        products.push_back(std::move(fx));
        products.push_back(std::move(fy));
        products.push_back(std::move(fz));
    }
    return dim_t - rank_mod_p(std::move(products), cfg.prime);
}

OracleVote vote_hilbert(const FatPointSpec& z, Int t, std::uint64_t seed, Int prime) {
    return vote([&](const PointConfig& cfg) { return actual_hilbert(cfg, z, t); }, z.size(), seed, prime);
}

OracleVote vote_nu(const FatPointSpec& z, Int t, std::uint64_t seed, Int prime) {
    return vote([&](const PointConfig& cfg) { return actual_nu(cfg, z, t); }, z.size(), seed, prime);
}

} // namespace fatpoints
