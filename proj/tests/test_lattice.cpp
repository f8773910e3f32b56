#include "fatpoints/lattice.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace fatpoints;

namespace {

DivisorClass random_class(std::mt19937_64& gen, Int dmin = -5, Int dmax = 40, Int mmax = 15) {
    std::uniform_int_distribution<std::size_t> len(0, 10);
    std::uniform_int_distribution<Int> deg(dmin, dmax);
    std::uniform_int_distribution<Int> mult(-2, mmax);
    DivisorClass f;
    f.degree = deg(gen);
    f.mults.resize(len(gen));
    for (auto& m : f.mults) m = mult(gen);
    return f;
}

} // namespace

TEST_CASE("intersection form basics") {
    DivisorClass k = canonical_class(8);
    CHECK(intersection(k, k) == 1);
    CHECK(intersection(canonical_class(9), canonical_class(9)) == 0);
    DivisorClass e = exceptional_curve(2, 5);
    CHECK(intersection(e, e) == -1);
    CHECK(intersection(e, canonical_class(5)) == -1);
    CHECK(intersection(DivisorClass(3, {1, 1}), DivisorClass(2, {1})) == 5);
    CHECK(same_class(DivisorClass(2, {1, 0, 0}), DivisorClass(2, {1})));
    CHECK_FALSE(same_class(DivisorClass(2, {1, 0, 1}), DivisorClass(2, {1})));
}

TEST_CASE("FatPointSpec accessors") {
    FatPointSpec z({3, 0, 5, 3});
    CHECK(z.nonzero_count() == 3);
    CHECK(z.max_mult() == 5);
    CHECK(z.sorted() == std::vector<Int>{5, 3, 3, 0});
    CHECK(z.support() == std::vector<Int>{5, 3, 3});
    CHECK(z.at_degree(7) == DivisorClass(7, {3, 0, 5, 3}));
    CHECK(FatPointSpec::uniform(3, 2).mults() == std::vector<Int>{2, 2, 2});
    CHECK(FatPointSpec({0, 0}).is_zero());
    CHECK_THROWS_AS(FatPointSpec({1, -1}), PreconditionError);
}

TEST_CASE("quadratic transform examples") {
    CHECK(cremona_quad(DivisorClass(1, {1, 1})) == DivisorClass(0, {0, 0, -1}));
    CHECK(cremona_quad(DivisorClass(2, {1, 1, 1})) == DivisorClass(1, {0, 0, 0}));
    CHECK(cremona_quad(exceptional_curve(0, 3)) == DivisorClass(1, {0, 1, 1}));
}

TEST_CASE("reduction examples") {
    CHECK(reduce_class(DivisorClass(5, {2, 2, 2, 2, 2, 2})) == DivisorClass(1, {0, 0, 0, 0, 0, 0}));
    auto red = reduce_fundamental(DivisorClass(1, {1, 1, 1}));
    CHECK(red.reduced.degree < 0);
    CHECK(reduce_class(DivisorClass(6, {3, 3, 3, 3, 3})).degree >= 0);
}

TEST_CASE("quad is an involution and an isometry fixing K") {
    std::mt19937_64 gen(11);
    for (int i = 0; i < 20000; ++i) {
        DivisorClass f = random_class(gen), g = random_class(gen);
        DivisorClass q = cremona_quad(f);
        REQUIRE(same_class(cremona_quad(q), f));
        REQUIRE(intersection(cremona_quad(f), cremona_quad(g)) == intersection(f, g));
        std::size_t n = std::max<std::size_t>(3, f.size());
        REQUIRE(intersection(q, canonical_class(n)) == intersection(f, canonical_class(n)));
    }
    CHECK(same_class(cremona_quad(canonical_class(4)), canonical_class(4)));
}

TEST_CASE("reduce and apply_inverse round trip") {
    std::mt19937_64 gen(12);
    for (int i = 0; i < 20000; ++i) {
        DivisorClass f = random_class(gen);
        Reduction r = reduce_fundamental(f);
        REQUIRE(same_class(apply_inverse(r.word, r.reduced), f));
        REQUIRE(same_class(r.word.apply(f), r.reduced));
        REQUIRE(r.reduced == reduce_class(f));
        const auto& m = r.reduced.mults;
        if (r.reduced.degree >= 0) {
            REQUIRE(std::is_sorted(m.rbegin(), m.rend()));
            REQUIRE(r.reduced.degree >= m[0] + m[1] + m[2]);
        }
        REQUIRE(intersection(r.reduced, r.reduced) == intersection(f, f));
    }
}

TEST_CASE("tracked sort is stable") {
    auto s = sort_desc_tracked(DivisorClass(4, {1, 3, 1, 2}), DivisorClass(0, {10, 20, 30, 40}));
    CHECK(s.primary.mults == std::vector<Int>{3, 2, 1, 1});
    CHECK(s.companion.mults == std::vector<Int>{20, 40, 10, 30});
    CHECK(same_class(s.word.apply_inverse(s.primary), DivisorClass(4, {1, 3, 1, 2})));
}

TEST_CASE("psi decomposition examples") {
    auto dec = psi_decompose(DivisorClass(7, {3, 3, 3, 3, 3}));
    REQUIRE(dec.in_psi);
    CHECK(same_class(dec.h_part, DivisorClass(5, {2, 2, 2, 2, 2})));
    REQUIRE(dec.n_part.size() == 1);
    CHECK(same_class(dec.n_part[0].curve, DivisorClass(2, {1, 1, 1, 1, 1})));
    CHECK(dec.n_part[0].multiplicity == 1);

    CHECK_FALSE(in_psi(DivisorClass(1, {1, 1, 1})));
    CHECK(in_psi(DivisorClass(0, {-1})));
    CHECK(in_psi(DivisorClass(3, {1, 1, 1, 1, 1, 1, 1, 1, 1})));
}

TEST_CASE("psi decompositions reconstruct and are orthogonal") {
    std::mt19937_64 gen(13);
    int members = 0;
    for (int i = 0; i < 20000; ++i) {
        DivisorClass f = random_class(gen, 0, 40, 12);
        PsiDecomposition dec = psi_decompose(f);
        REQUIRE(dec.in_psi == in_psi(f));
        if (!dec.in_psi) continue;
        ++members;
        REQUIRE_NOTHROW(verify_psi_decomposition(f, dec));
        DivisorClass sum = dec.h_part;
        for (const auto& p : dec.n_part) {
            REQUIRE(p.multiplicity > 0);
            REQUIRE(intersection(p.curve, p.curve) == -1);
            REQUIRE(intersection(dec.h_part, p.curve) == 0);
            sum = sum + p.multiplicity * p.curve;
        }
        REQUIRE(same_class(sum, f));
        for (std::size_t a = 0; a < dec.n_part.size(); ++a)
            for (std::size_t b = a + 1; b < dec.n_part.size(); ++b)
                REQUIRE(intersection(dec.n_part[a].curve, dec.n_part[b].curve) == 0);
    }
    CHECK(members > 1000);
}

TEST_CASE("printing") {
    std::ostringstream os;
    os << DivisorClass(4, {2, 1}) << ' ' << FatPointSpec({3, 3});
    CHECK(os.str() == "(4; 2,1) (3,3)");
}
