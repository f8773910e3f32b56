#ifndef FATPOINTS_SRC_UNLOAD_HPP
#define FATPOINTS_SRC_UNLOAD_HPP

// Shared by the alpha and tau unloading procedures. Repeatedly subtracting
// d*E0 - (E1+..+Er) touches the mults the same way whatever the starting
// degree, so the mult states are computed once and reused across degrees.

#include "fatpoints/lattice.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace fatpoints::detail {

/// Nonzero mults sorted nonincreasing, zero padded to at least len slots.
inline std::vector<Int> working_mults(const FatPointSpec& z, std::size_t len) {
    std::vector<Int> v = z.support();
    if (v.size() < len) v.resize(len, 0);
    return v;
}

/// Subtract one from slots [first, last) of a nonincreasing nonnegative list
/// (the slots before first must stay largest), clamp, restore the order. O(n).
inline void drop_prefix(std::vector<Int>& v, std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i) v[i] = std::max<Int>(v[i] - 1, 0);
    std::inplace_merge(v.begin() + static_cast<std::ptrdiff_t>(first), v.begin() + static_cast<std::ptrdiff_t>(last),
                       v.end(), std::greater<>());
}

class UnloadSequence {
public:
    struct State {
        Int sum_r = 0; ///< m_1 + .. + m_r
        Int top = 0;   ///< m_1
    };

    UnloadSequence(std::vector<Int> sorted, std::size_t r) : cur_(std::move(sorted)), r_(r) { push(); }

    const State& at(std::size_t k) {
        while (states_.size() <= k) {
            if (states_.back().top == 0) {
                states_.push_back(states_.back());
                continue;
            }
            drop_prefix(cur_, 0, r_);
            push();
        }
        return states_[k];
    }

private:
    void push() {
        Int s = 0;
        for (std::size_t i = 0; i < r_; ++i) s = add(s, cur_[i]);
        states_.push_back({s, cur_.empty() ? 0 : cur_[0]});
    }

    std::vector<Int> cur_;
    std::size_t r_;
    std::vector<State> states_;
};

} // namespace fatpoints::detail

#endif
