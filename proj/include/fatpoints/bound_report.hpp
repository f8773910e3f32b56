#ifndef FATPOINTS_BOUND_REPORT_HPP
#define FATPOINTS_BOUND_REPORT_HPP

#include "fatpoints/integer.hpp"
#include "fatpoints/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fatpoints {

enum class Method {
    find_alpha,
    find_tau,
    beta,
    nef_test,
    cor_a,
    cor_b,
    cor_c,
    cor_d,
    unloading,
    unloading_formula,
    best_unloading,
    roe_alpha,
    hr_alpha,
    hr_alpha_formula_a,
    hr_alpha_formula_b,
    psi,
    nagata,
    segre,
    cubic,
    gimigliano,
    hirschowitz,
    catalisano,
    ballico,
    xu,
    hhf,
    roe_tau,
    hr_tau,
    hr_tau_formula_a,
    hr_tau_formula_b,
    ran,
};

enum class Direction { alpha_lower, tau_upper, exact, shgh_conjectural };

std::string_view to_string(Method m);
std::string_view to_string(Direction d);

struct BoundParams {
    std::optional<Int> r;
    std::optional<Int> d;
    std::optional<Int> j;
    std::vector<Rational> weights;
    std::optional<Rational> c; ///< alpha/m constant fed to the Ran bound

    bool empty() const { return !r && !d && !j && weights.empty() && !c; }
};

struct BoundReport {
    Method method = Method::find_alpha;
    Direction direction = Direction::alpha_lower;
    Int value = 0;
    BoundParams params;
    std::vector<std::string> validity;
};

inline constexpr std::string_view kCharZero = "characteristic 0";
inline constexpr std::string_view kShgh = "SHGH-conditional";

} // namespace fatpoints

#endif
