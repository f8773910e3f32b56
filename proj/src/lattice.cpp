#include "fatpoints/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

namespace fatpoints {

DivisorClass DivisorClass::padded(std::size_t n) const {
    DivisorClass out = *this;
    if (out.mults.size() < n) out.mults.resize(n, 0);
    return out;
}

bool same_class(const DivisorClass& a, const DivisorClass& b) {
    if (a.degree != b.degree) return false;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a.mult(i) != b.mult(i)) return false;
    return true;
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    std::size_t n = std::max(a.size(), b.size());
    DivisorClass out(add(a.degree, b.degree), std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i) out.mults[i] = add(a.mult(i), b.mult(i));
    return out;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    std::size_t n = std::max(a.size(), b.size());
    DivisorClass out(sub(a.degree, b.degree), std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i) out.mults[i] = sub(a.mult(i), b.mult(i));
    return out;
}

DivisorClass operator*(Int k, const DivisorClass& a) {
    DivisorClass out(mul(k, a.degree), a.mults);
    for (auto& m : out.mults) m = mul(k, m);
    return out;
}

std::ostream& operator<<(std::ostream& os, const DivisorClass& f) {
    os << '(' << f.degree << ';';
    for (std::size_t i = 0; i < f.mults.size(); ++i) os << (i ? "," : " ") << f.mults[i];
    return os << ')';
}

DivisorClass canonical_class(std::size_t n) { return DivisorClass(-3, std::vector<Int>(n, -1)); }

DivisorClass exceptional_curve(std::size_t i, std::size_t n) {
    DivisorClass e(0, std::vector<Int>(std::max(n, i + 1), 0));
    e.mults[i] = -1;
    return e;
}

Int intersection(const DivisorClass& f, const DivisorClass& g) {
    __int128 acc = static_cast<__int128>(f.degree) * g.degree;
    std::size_t n = std::min(f.size(), g.size());
    for (std::size_t i = 0; i < n; ++i) acc -= static_cast<__int128>(f.mults[i]) * g.mults[i];
    return narrow(acc);
}

// ---------------------------------------------------------------- FatPointSpec

FatPointSpec::FatPointSpec(std::vector<Int> mults) : mults_(std::move(mults)) {
    for (Int m : mults_) require(m >= 0, "multiplicities must be nonnegative");
}

FatPointSpec FatPointSpec::uniform(std::size_t n, Int m) { return FatPointSpec(std::vector<Int>(n, m)); }

std::size_t FatPointSpec::nonzero_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(mults_.begin(), mults_.end(), [](Int m) { return m != 0; }));
}

Int FatPointSpec::max_mult() const noexcept {
    return mults_.empty() ? 0 : *std::max_element(mults_.begin(), mults_.end());
}

std::vector<Int> FatPointSpec::sorted() const {
    std::vector<Int> v = mults_;
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

std::vector<Int> FatPointSpec::support() const {
    std::vector<Int> v = sorted();
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

std::ostream& operator<<(std::ostream& os, const FatPointSpec& z) {
    os << '(';
    for (std::size_t i = 0; i < z.size(); ++i) os << (i ? "," : "") << z.mults()[i];
    return os << ')';
}

// ---------------------------------------------------------------- Weyl words

namespace {

bool is_identity(const std::vector<std::size_t>& perm) {
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != i) return false;
    return true;
}

void permute_forward(std::vector<Int>& v, const std::vector<std::size_t>& perm) {
    std::vector<Int> out(v.size());
    for (std::size_t k = 0; k < perm.size(); ++k) out[k] = v[perm[k]];
    v = std::move(out);
}

void permute_backward(std::vector<Int>& v, const std::vector<std::size_t>& perm) {
    std::vector<Int> out(v.size());
    for (std::size_t k = 0; k < perm.size(); ++k) out[perm[k]] = v[k];
    v = std::move(out);
}

// Indices of v in stable nonincreasing order.
std::vector<std::size_t> sorting_permutation(const std::vector<Int>& v) {
    std::vector<std::size_t> perm(v.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
    return perm;
}

void quad_in_place(DivisorClass& w) {
    Int d = w.degree;
    Int m1 = w.mults[0], m2 = w.mults[1], m3 = w.mults[2];
    w.degree = sub(sub(sub(mul(2, d), m1), m2), m3);
    w.mults[0] = sub(sub(d, m2), m3);
    w.mults[1] = sub(sub(d, m1), m3);
    w.mults[2] = sub(sub(d, m1), m2);
}

bool needs_quad(const DivisorClass& w) {
    return w.degree >= 0 && static_cast<__int128>(w.degree) < static_cast<__int128>(w.mults[0]) + w.mults[1] + w.mults[2];
}

} // namespace

void WeylWord::push_permutation(std::vector<std::size_t> perm) {
    if (length_ == 0) length_ = perm.size();
    require(perm.size() == length_, "permutation length matches the word");
    if (is_identity(perm)) return;
    moves_.push_back(WeylMove{WeylMove::Kind::permute, std::move(perm)});
}

void WeylWord::push_quad() {
    if (length_ < 3) length_ = 3;
    moves_.push_back(WeylMove{WeylMove::Kind::quad, {}});
}

DivisorClass WeylWord::fit(const DivisorClass& f) const {
    if (moves_.empty()) return f;
    if (f.size() > length_) throw PreconditionError("mult length mismatch: class is longer than the word");
    return f.padded(length_);
}

DivisorClass WeylWord::apply(const DivisorClass& f) const {
    DivisorClass w = fit(f);
    for (const auto& mv : moves_) {
        if (mv.kind == WeylMove::Kind::quad)
            quad_in_place(w);
        else
            permute_forward(w.mults, mv.perm);
    }
    return w;
}

DivisorClass WeylWord::apply_inverse(const DivisorClass& f) const {
    DivisorClass w = fit(f);
    for (auto it = moves_.rbegin(); it != moves_.rend(); ++it) {
        if (it->kind == WeylMove::Kind::quad)
            quad_in_place(w);
        else
            permute_backward(w.mults, it->perm);
    }
    return w;
}

TrackedSort sort_desc_tracked(const DivisorClass& primary, const DivisorClass& companion) {
    if (primary.size() != companion.size()) throw PreconditionError("equal mult lengths required for paired sort");
    auto perm = sorting_permutation(primary.mults);
    TrackedSort out{primary, companion, WeylWord(primary.size())};
    permute_forward(out.primary.mults, perm);
    permute_forward(out.companion.mults, perm);
    out.word.push_permutation(std::move(perm));
    return out;
}

DivisorClass clamp_nonneg(const DivisorClass& f) {
    DivisorClass out = f;
    for (auto& m : out.mults) m = std::max<Int>(m, 0);
    return out;
}

DivisorClass cremona_quad(const DivisorClass& f) {
    DivisorClass w = f.padded(3);
    quad_in_place(w);
    return w;
}

Reduction reduce_fundamental(const DivisorClass& f) {
    Reduction out{f.padded(3), WeylWord(std::max<std::size_t>(f.size(), 3))};
    auto resort = [&out] {
        auto perm = sorting_permutation(out.reduced.mults);
        permute_forward(out.reduced.mults, perm);
        out.word.push_permutation(std::move(perm));
    };
    resort();
    while (needs_quad(out.reduced)) {
        quad_in_place(out.reduced);
        out.word.push_quad();
        resort();
    }
    return out;
}

DivisorClass reduce_class(const DivisorClass& f) {
    DivisorClass w = f.padded(3);
    auto& v = w.mults;
    std::sort(v.begin(), v.end(), std::greater<>());
    while (needs_quad(w)) {
        quad_in_place(w);
        // Only the first three slots moved; the tail is still sorted.
        std::sort(v.begin(), v.begin() + 3, std::greater<>());
        std::inplace_merge(v.begin(), v.begin() + 3, v.end(), std::greater<>());
    }
    return w;
}

DivisorClass apply_inverse(const WeylWord& word, const DivisorClass& f) { return word.apply_inverse(f); }

// ---------------------------------------------------------------- Psi

namespace {

bool reduced_in_psi(const DivisorClass& r) { return r.degree >= 0 && r.degree >= r.mults[0]; }

} // namespace

bool in_psi(const DivisorClass& f) { return reduced_in_psi(reduce_class(f)); }

PsiDecomposition psi_decompose(const DivisorClass& f) {
    PsiDecomposition dec;
    Reduction red = reduce_fundamental(f);
    DivisorClass cur = red.reduced;
    if (!reduced_in_psi(cur)) return dec;
    dec.in_psi = true;

    const std::size_t n = cur.size();
    std::vector<PsiComponent> reduced_parts;
    Int d = cur.degree, m1 = cur.mults[0], m2 = cur.mults[1];
    if (static_cast<__int128>(d) < static_cast<__int128>(m1) + m2) {
        // The line through the first two points is a fixed component.
        DivisorClass line(1, std::vector<Int>(n, 0));
        line.mults[0] = 1;
        line.mults[1] = 1;
        reduced_parts.push_back({line, sub(add(m1, m2), d)});
        cur.degree = sub(sub(mul(2, d), m1), m2);
        cur.mults[0] = sub(d, m2);
        cur.mults[1] = sub(d, m1);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (cur.mults[i] < 0) reduced_parts.push_back({exceptional_curve(i, n), sub(0, cur.mults[i])});

    dec.h_part = red.word.apply_inverse(clamp_nonneg(cur));
    for (auto& part : reduced_parts)
        dec.n_part.push_back({red.word.apply_inverse(part.curve), part.multiplicity});
    return dec;
}

void verify_psi_decomposition(const DivisorClass& f, const PsiDecomposition& dec) {
    if (!dec.in_psi) return;
    auto fail = [&f](const std::string& what) {
        std::ostringstream os;
        os << "decomposition of " << f << ": " << what;
        throw InvariantError(os.str());
    };
    DivisorClass sum = dec.h_part;
    std::size_t n = std::max(f.size(), dec.h_part.size());
    for (const auto& part : dec.n_part) {
        if (part.multiplicity <= 0) fail("nonpositive component multiplicity");
        sum = sum + part.multiplicity * part.curve;
        n = std::max(n, part.curve.size());
    }
    if (!same_class(sum, f)) fail("H + N does not reconstruct F");
    DivisorClass k = canonical_class(n);
    for (std::size_t i = 0; i < dec.n_part.size(); ++i) {
        const auto& v = dec.n_part[i].curve;
        if (intersection(v, v) != -1) fail("component with self-intersection other than -1");
        if (intersection(v, k) != -1) fail("component with K-degree other than -1");
        if (intersection(v, dec.h_part) != 0) fail("H meets a component");
        for (std::size_t j = i + 1; j < dec.n_part.size(); ++j)
            if (intersection(v, dec.n_part[j].curve) != 0) fail("components meet");
    }
    DivisorClass h = reduce_class(dec.h_part);
    if (h.degree < 0 || static_cast<__int128>(h.degree) < static_cast<__int128>(h.mults[0]) + h.mults[1] + h.mults[2])
        fail("H does not reduce into the fundamental domain");
    for (Int m : h.mults)
        if (m < 0) fail("H reduces to a class with a negative multiplicity");
}

} // namespace fatpoints
