#include "fatpoints/bound_report.hpp"

namespace fatpoints {

std::string_view to_string(Method m) {
    switch (m) {
    case Method::find_alpha: return "find-alpha";
    case Method::find_tau: return "find-tau";
    case Method::beta: return "beta";
    case Method::nef_test: return "nef-test";
    case Method::cor_a: return "cor-a";
    case Method::cor_b: return "cor-b";
    case Method::cor_c: return "cor-c";
    case Method::cor_d: return "cor-d";
    case Method::unloading: return "unloading";
    case Method::unloading_formula: return "unloading-formula";
    case Method::best_unloading: return "best-unloading";
    case Method::roe_alpha: return "roe-alpha";
    case Method::hr_alpha: return "hr-alpha";
    case Method::hr_alpha_formula_a: return "hr-alpha-formula-a";
    case Method::hr_alpha_formula_b: return "hr-alpha-formula-b";
    case Method::psi: return "psi";
    case Method::nagata: return "nagata";
    case Method::segre: return "segre";
    case Method::cubic: return "cubic";
    case Method::gimigliano: return "gimigliano";
    case Method::hirschowitz: return "hirschowitz";
    case Method::catalisano: return "catalisano";
    case Method::ballico: return "ballico";
    case Method::xu: return "xu";
    case Method::hhf: return "hhf";
    case Method::roe_tau: return "roe-tau";
    case Method::hr_tau: return "hr-tau";
    case Method::hr_tau_formula_a: return "hr-tau-formula-a";
    case Method::hr_tau_formula_b: return "hr-tau-formula-b";
    case Method::ran: return "ran";
    }
    return "unknown";
}

std::string_view to_string(Direction d) {
    switch (d) {
    case Direction::alpha_lower: return "alpha-lower";
    case Direction::tau_upper: return "tau-upper";
    case Direction::exact: return "exact";
    case Direction::shgh_conjectural: return "shgh-conjectural";
    }
    return "unknown";
}

} // namespace fatpoints
