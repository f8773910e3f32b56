#ifndef FATPOINTS_LATTICE_HPP
#define FATPOINTS_LATTICE_HPP

// Divisor classes on the blow-up of the plane at n points.
// A class d*E0 - sum m_i*E_i is stored as (degree d; mults m_1..m_n), so the
// exceptional curve E_i has a single mult of -1 and the canonical class is
// (-3; -1,...,-1).

#include "fatpoints/integer.hpp"

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace fatpoints {

struct DivisorClass {
    Int degree = 0;
    std::vector<Int> mults;

    DivisorClass() = default;
    DivisorClass(Int d, std::vector<Int> m) : degree(d), mults(std::move(m)) {}

    std::size_t size() const noexcept { return mults.size(); }
    /// Multiplicity at slot i, zero past the end.
    Int mult(std::size_t i) const noexcept { return i < mults.size() ? mults[i] : 0; }
    /// Copy padded with zero mults up to at least n slots.
    DivisorClass padded(std::size_t n) const;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Equality as lattice vectors: trailing zero mults are ignored.
bool same_class(const DivisorClass& a, const DivisorClass& b);

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator*(Int k, const DivisorClass& a);

std::ostream& operator<<(std::ostream& os, const DivisorClass& f);

/// The canonical class on n points.
DivisorClass canonical_class(std::size_t n);
/// E_i for a 0-based slot i, at length n.
DivisorClass exceptional_curve(std::size_t i, std::size_t n);

/// d*d' - sum m_i*m_i', shorter list zero padded.
Int intersection(const DivisorClass& f, const DivisorClass& g);

/// A fat point subscheme m_1 p_1 + ... + m_n p_n at general points.
class FatPointSpec {
public:
    FatPointSpec() = default;
    explicit FatPointSpec(std::vector<Int> mults);
    static FatPointSpec uniform(std::size_t n, Int m);

    const std::vector<Int>& mults() const noexcept { return mults_; }
    std::size_t size() const noexcept { return mults_.size(); }
    std::size_t nonzero_count() const noexcept;
    bool is_zero() const noexcept { return nonzero_count() == 0; }
    Int max_mult() const noexcept;
    /// Mults sorted nonincreasing.
    std::vector<Int> sorted() const;
    /// Nonzero mults sorted nonincreasing.
    std::vector<Int> support() const;
    /// F_t(Z) = t*E0 - sum m_i*E_i.
    DivisorClass at_degree(Int t) const { return DivisorClass(t, mults_); }

    friend bool operator==(const FatPointSpec&, const FatPointSpec&) = default;

private:
    std::vector<Int> mults_;
};

std::ostream& operator<<(std::ostream& os, const FatPointSpec& z);

/// One generator step of the Weyl group action on mult slots.
struct WeylMove {
    enum class Kind { permute, quad };
    Kind kind = Kind::quad;
    /// For permute: new[k] = old[perm[k]].
    std::vector<std::size_t> perm;
};

class WeylWord {
public:
    explicit WeylWord(std::size_t length = 0) : length_(length) {}

    /// Identity permutations are dropped.
    void push_permutation(std::vector<std::size_t> perm);
    void push_quad();

    const std::vector<WeylMove>& moves() const noexcept { return moves_; }
    std::size_t size() const noexcept { return moves_.size(); }
    bool empty() const noexcept { return moves_.empty(); }
    /// Slot count the word was built for (0 for the empty word).
    std::size_t length() const noexcept { return length_; }

    DivisorClass apply(const DivisorClass& f) const;
    DivisorClass apply_inverse(const DivisorClass& f) const;

private:
    DivisorClass fit(const DivisorClass& f) const;

    std::vector<WeylMove> moves_;
    std::size_t length_ = 0;
};

struct TrackedSort {
    DivisorClass primary;
    DivisorClass companion;
    WeylWord word;
};

/// Stable nonincreasing sort of primary's mults (ties keep index order);
/// the same permutation is applied to companion.
TrackedSort sort_desc_tracked(const DivisorClass& primary, const DivisorClass& companion);

DivisorClass clamp_nonneg(const DivisorClass& f);

/// The quadratic transform on the first three slots (padding to three).
DivisorClass cremona_quad(const DivisorClass& f);

struct Reduction {
    DivisorClass reduced;
    WeylWord word;
};

/// Sort, then apply the quadratic transform while degree < m1+m2+m3 and
/// degree >= 0. The result has at least three slots.
Reduction reduce_fundamental(const DivisorClass& f);

/// Same terminal class as reduce_fundamental without recording moves.
DivisorClass reduce_class(const DivisorClass& f);

DivisorClass apply_inverse(const WeylWord& word, const DivisorClass& f);

struct PsiComponent {
    DivisorClass curve;
    Int multiplicity = 0;
};

struct PsiDecomposition {
    bool in_psi = false;
    DivisorClass h_part;
    std::vector<PsiComponent> n_part;
};

/// Splits F = H + N with N a sum of disjoint exceptional classes.
PsiDecomposition psi_decompose(const DivisorClass& f);

/// Membership only; skips building the decomposition.
bool in_psi(const DivisorClass& f);

/// Throws InvariantError if the decomposition of f breaks reconstruction,
/// orthogonality or the exceptional-class identities.
void verify_psi_decomposition(const DivisorClass& f, const PsiDecomposition& dec);

} // namespace fatpoints

#endif
