#include "fatpoints/cli.hpp"

#include "fatpoints/alpha_bounds.hpp"
#include "fatpoints/hilbert.hpp"
#include "fatpoints/oracle.hpp"
#include "fatpoints/resolution.hpp"
#include "fatpoints/tau_bounds.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace fatpoints::cli {

namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Searches over every (r, d) pair are skipped above this many points unless
// asked for explicitly.
constexpr Int kSearchLimit = 100;

struct Options {
    std::string mults;
    std::string uniform;
    std::string window;
    std::string weights;
    std::string method;
    std::string c;
    Int r = 0;
    Int d = 0;
    Int j = 0;
    Int degree = 0;
    Int prime = kDefaultPrime;
    std::uint64_t seed = 1;
    bool json = false;
    bool exhaustive = false;
};

Int parse_int(std::string_view s, const char* what) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    Int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size())
        throw UsageError(std::string("malformed ") + what + ": '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::pair<Int, Int> parse_pair(const std::string& s, const char* what) {
    auto parts = split(s, ':');
    if (parts.size() != 2) throw UsageError(std::string(what) + " must look like A:B");
    return {parse_int(parts[0], what), parse_int(parts[1], what)};
}

FatPointSpec parse_input(const Options& o) {
    if (o.mults.empty() == o.uniform.empty()) throw UsageError("give exactly one of --mults or --uniform");
    if (!o.uniform.empty()) {
        auto [n, m] = parse_pair(o.uniform, "--uniform");
        if (n < 0) throw UsageError("--uniform needs N >= 0");
        return FatPointSpec::uniform(static_cast<std::size_t>(n), m);
    }
    std::vector<Int> v;
    for (auto part : split(o.mults, ',')) v.push_back(parse_int(part, "multiplicity list"));
    return FatPointSpec(std::move(v));
}

std::vector<Rational> parse_weights(const std::string& s) {
    std::vector<Rational> w;
    for (auto part : split(s, ',')) {
        try {
            w.push_back(Rational::parse(part));
        } catch (const PreconditionError&) {
            throw UsageError("malformed weight '" + std::string(part) + "'");
        }
    }
    return w;
}

// Uniform shape (n nonzero points of multiplicity m), if any.
std::optional<std::pair<Int, Int>> uniform_shape(const FatPointSpec& z) {
    auto s = z.support();
    if (s.empty() || s.front() != s.back()) return std::nullopt;
    return std::pair<Int, Int>{static_cast<Int>(s.size()), s.front()};
}

std::pair<Int, Int> need_uniform(const FatPointSpec& z) {
    auto u = uniform_shape(z);
    if (!u) throw PreconditionError("method needs uniform multiplicities");
    return *u;
}

Int nonzero(const FatPointSpec& z) { return static_cast<Int>(z.nonzero_count()); }

json rational_json(const Rational& q) {
    if (q.is_integer()) return q.num();
    return q.str();
}

json input_json(const FatPointSpec& z) {
    return json{{"mults", z.mults()}, {"n", z.size()}};
}

json report_json(const BoundReport& rep, const json& input) {
    json params = json::object();
    if (rep.params.r) params["r"] = *rep.params.r;
    if (rep.params.d) params["d"] = *rep.params.d;
    if (rep.params.j) params["j"] = *rep.params.j;
    if (rep.params.c) params["c"] = rational_json(*rep.params.c);
    if (!rep.params.weights.empty()) {
        json w = json::array();
        for (const auto& q : rep.params.weights) w.push_back(rational_json(q));
        params["weights"] = w;
    }
    return json{{"input", input},
                {"method", to_string(rep.method)},
                {"direction", to_string(rep.direction)},
                {"value", rep.value},
                {"params", params},
                {"validity", rep.validity}};
}

std::string params_text(const BoundParams& p) {
    std::vector<std::string> parts;
    if (p.r) parts.push_back("r=" + std::to_string(*p.r));
    if (p.d) parts.push_back("d=" + std::to_string(*p.d));
    if (p.j) parts.push_back("j=" + std::to_string(*p.j));
    if (p.c) parts.push_back("c=" + p.c->str());
    if (!p.weights.empty()) {
        std::string w = "weights=";
        for (std::size_t i = 0; i < p.weights.size(); ++i) w += (i ? "," : "") + p.weights[i].str();
        parts.push_back(w);
    }
    if (parts.empty()) return {};
    std::string s = " (";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
    return s + ")";
}

std::string report_text(const BoundReport& rep) {
    std::string s = std::string(to_string(rep.method)) + params_text(rep.params) + ": " + std::to_string(rep.value);
    for (const auto& v : rep.validity) s += " [" + v + "]";
    return s;
}

std::string describe(const FatPointSpec& z) {
    std::ostringstream os;
    if (auto u = uniform_shape(z); u && static_cast<Int>(z.size()) == u->first)
        os << u->first << " points of multiplicity " << u->second;
    else
        os << z.size() << " points, multiplicities " << z;
    return os.str();
}

// "Value" when exact, "Expected value (SHGH)" beyond nine points.
std::string value_label(const FatPointSpec& z) {
    return exactness_of(z) == Exactness::exact ? "Value" : "Expected value (SHGH)";
}

Direction exact_direction(const FatPointSpec& z) {
    return exactness_of(z) == Exactness::exact ? Direction::exact : Direction::shgh_conjectural;
}

BoundReport character_report(Method m, Int value, const FatPointSpec& z) {
    BoundReport rep;
    rep.method = m;
    rep.value = value;
    rep.direction = exact_direction(z);
    if (rep.direction == Direction::shgh_conjectural) rep.validity.emplace_back(kShgh);
    return rep;
}

Int floor_root(Int n) { return isqrt_floor(n); }

struct Context {
    const Options& o;
    const CLI::App* sub;
    FatPointSpec z;

    bool given(const char* name) const {
        const CLI::Option* opt = sub->get_option_no_throw(name);
        return opt && opt->count() > 0;
    }
    std::pair<Int, Int> rd_or(std::pair<Int, Int> fallback) const {
        if (given("--r") != given("--d")) throw UsageError("--r and --d go together");
        return given("--r") ? std::pair<Int, Int>{o.r, o.d} : fallback;
    }
};

BoundReport alpha_method(const Context& cx, const std::string& name) {
    const FatPointSpec& z = cx.z;
    const Options& o = cx.o;
    auto n_or_one = [&z] { return std::max<Int>(nonzero(z), 1); };
    if (name.empty() || name == "find-alpha") return character_report(Method::find_alpha, find_alpha(z), z);
    if (name == "nef-test") {
        if (!cx.given("--weights") || !cx.given("--r") || !cx.given("--d"))
            throw UsageError("nef-test needs --weights, --r and --d");
        return nef_test_bound(z, parse_weights(o.weights), o.r, o.d);
    }
    if (name == "cor-a") {
        auto [r, d] = cx.rd_or(best_rd_a(n_or_one()));
        return cor_bound(z, CorVariant::a, r, d);
    }
    if (name == "cor-b") {
        auto [r, d] = cx.rd_or(best_rd_b(n_or_one()));
        return cor_bound(z, CorVariant::b, r, d);
    }
    if (name == "cor-c" || name == "cor-d") {
        if (!cx.given("--r") || !cx.given("--d")) throw UsageError(name + " needs --r and --d");
        if (name == "cor-c") return cor_bound(z, CorVariant::c, o.r, o.d);
        return cor_bound(z, CorVariant::d, o.r, o.d, o.j);
    }
    if (name == "best-cor-d") return best_cor_d(z);
    if (name == "unloading") {
        auto [r, d] = cx.rd_or(best_rd_a(n_or_one()));
        return unloading_alpha(z, r, d);
    }
    if (name == "unloading-formula") {
        auto [n, m] = need_uniform(z);
        auto [r, d] = cx.rd_or(best_rd_a(n));
        return unloading_alpha_formula(n, m, r, d);
    }
    if (name == "best-unloading") return best_search_alpha(z);
    if (name == "roe-alpha") return roe_alpha(z);
    if (name == "hr-alpha") {
        auto [r, d] = cx.rd_or(best_rd_a(n_or_one()));
        return hr_alpha(z, r, d);
    }
    if (name == "hr-alpha-formula-a" || name == "hr-alpha-formula-b") {
        auto [n, m] = need_uniform(z);
        Int d0 = floor_root(n);
        if (name == "hr-alpha-formula-a") {
            auto [r, d] = cx.rd_or({isqrt_ceil(d0 * d0 * n), d0});
            return hr_alpha_formula_a(n, m, r, d);
        }
        auto [r, d] = cx.rd_or({d0 * d0, d0});
        return hr_alpha_formula_b(n, m, r, d);
    }
    if (name == "psi") return psi_alpha_bound(z);
    if (name == "nagata") {
        auto [n, m] = need_uniform(z);
        BoundReport rep;
        rep.method = Method::nagata;
        rep.value = nagata_ref(n, m);
        rep.validity.emplace_back("conjectural reference value");
        return rep;
    }
    throw UsageError("unknown alpha method '" + name + "'");
}

BoundReport tau_method(const Context& cx, const std::string& name) {
    const FatPointSpec& z = cx.z;
    const Options& o = cx.o;
    auto n_or_one = [&z] { return std::max<Int>(nonzero(z), 1); };
    if (name.empty() || name == "find-tau") return character_report(Method::find_tau, find_tau(z), z);
    if (name == "segre" || name == "cubic" || name == "ballico" || name == "xu" || name == "hhf") {
        auto [n, m] = need_uniform(z);
        if (name == "segre") return segre_tau(n, m);
        if (name == "cubic") return cubic_tau(n, m);
        if (name == "ballico") return ballico_tau(n, m);
        if (name == "xu") return xu_tau(n, m);
        return hhf_tau(n, m);
    }
    if (name == "gimigliano") return gimigliano_tau(z);
    if (name == "hirschowitz") return hirschowitz_tau(z);
    if (name == "catalisano") {
        if (auto u = uniform_shape(z)) return catalisano_tau_uniform(u->first, u->second);
        return catalisano_tau(z);
    }
    if (name == "roe-tau") return roe_tau(z);
    if (name == "hr-tau") {
        auto [r, d] = cx.rd_or(best_rd_a(n_or_one()));
        return hr_tau(z, r, d);
    }
    if (name == "hr-tau-formula-a" || name == "hr-tau-formula-b") {
        auto [n, m] = need_uniform(z);
        Int d0 = floor_root(n);
        if (name == "hr-tau-formula-a") {
            auto [r, d] = cx.rd_or({isqrt_ceil(d0 * d0 * n), d0});
            return hr_tau_formula_a(n, m, r, d);
        }
        auto [r, d] = cx.rd_or({d0 * d0, d0});
        return hr_tau_formula_b(n, m, r, d);
    }
    if (name == "ran") {
        auto [n, m] = need_uniform(z);
        Rational c;
        if (cx.given("--c")) {
            try {
                c = Rational::parse(o.c);
            } catch (const PreconditionError&) {
                throw UsageError("malformed --c");
            }
        } else {
            // The larger of the two constants from cor-a and cor-b.
            auto [ra, da] = best_rd_a(n);
            auto [rb, db] = best_rd_b(n);
            c = std::max(Rational(mul(n, da), ra), Rational(rb, db));
        }
        return ran_tau(n, m, c);
    }
    throw UsageError("unknown tau method '" + name + "'");
}

// ----------------------------------------------------------------- commands

int cmd_hilb(const Context& cx, std::ostream& out) {
    std::optional<Int> lo, hi;
    if (cx.given("--window")) std::tie(lo, hi) = parse_pair(cx.o.window, "--window");
    if (lo && *lo > *hi) throw UsageError("--window needs lo <= hi");
    HilbertTable table = hilbert_table(cx.z, lo, hi);
    if (cx.o.json) {
        json rows = json::array();
        for (const auto& r : table.rows) rows.push_back({{"t", r.t}, {"value", r.value}});
        out << json{{"input", input_json(cx.z)},
                    {"method", "hilbert"},
                    {"direction", to_string(table.exactness)},
                    {"alpha", table.alpha},
                    {"tau", table.tau},
                    {"rows", rows}}
                   .dump()
            << '\n';
        return 0;
    }
    out << describe(cx.z) << '\n'
        << "alpha = " << table.alpha << ", tau = " << table.tau << " (" << to_string(table.exactness) << ")\n"
        << "  t  dim I_t\n";
    for (const auto& r : table.rows) out << "  " << r.t << "  " << r.value << '\n';
    return 0;
}

int print_report(const Context& cx, const BoundReport& rep, std::ostream& out) {
    if (cx.o.json)
        out << report_json(rep, input_json(cx.z)).dump() << '\n';
    else
        out << report_text(rep) << '\n';
    return 0;
}

int cmd_beta(const Context& cx, std::ostream& out) {
    return print_report(cx, character_report(Method::beta, beta_expected(cx.z), cx.z), out);
}

int cmd_res(const Context& cx, std::ostream& out) {
    const FatPointSpec& z = cx.z;
    if (z.nonzero_count() > 8) {
        QuasiUniformResolution q = quasi_uniform_resolution(z);
        if (cx.o.json) {
            out << json{{"input", input_json(z)}, {"method", "quasi-uniform"}, {"direction", "shgh-conjectural"},
                        {"alpha", q.alpha},       {"a", q.a},                  {"b", q.b},
                        {"c", q.c},               {"d", q.d},                  {"label", q.label}}
                       .dump()
                << '\n';
            return 0;
        }
        out << describe(z) << '\n'
            << q.label << '\n'
            << "alpha = " << q.alpha << '\n'
            << "0 -> R[-" << q.alpha + 2 << "]^" << q.d << " + R[-" << q.alpha + 1 << "]^" << q.c << " -> R[-"
            << q.alpha + 1 << "]^" << q.b << " + R[-" << q.alpha << "]^" << q.a << " -> I -> 0\n";
        return 0;
    }
    BettiTable table = betti_table(z);
    verify_betti_table(table);
    std::vector<BettiRow> rows = table.rows;
    if (cx.given("--window")) {
        auto [lo, hi] = parse_pair(cx.o.window, "--window");
        if (lo > hi) throw UsageError("--window needs lo <= hi");
        rows.clear();
        for (Int t = lo; t <= hi; ++t) {
            if (const BettiRow* r = table.row(t)) {
                rows.push_back(*r);
                continue;
            }
            Int h = t < table.alpha ? 0 : hilbert_polynomial(z, t);
            rows.push_back({t, h, 0, 0});
        }
    }
    if (cx.o.json) {
        json js = json::array();
        for (const auto& r : rows) js.push_back({{"t", r.t}, {"h", r.h}, {"nu", r.nu}, {"s", r.s}});
        out << json{{"input", input_json(z)},
                    {"method", "betti"},
                    {"direction", "exact"},
                    {"alpha", table.alpha},
                    {"tau", table.tau},
                    {"rows", js}}
                   .dump()
            << '\n';
        return 0;
    }
    out << describe(z) << '\n'
        << "alpha = " << table.alpha << ", tau = " << table.tau << '\n'
        << "  t  h  nu  s\n";
    for (const auto& r : rows) out << "  " << r.t << "  " << r.h << "  " << r.nu << "  " << r.s << '\n';
    return 0;
}

int cmd_bounds(const Context& cx, std::ostream& out, std::ostream& err) {
    const FatPointSpec& z = cx.z;
    if (z.is_zero()) throw PreconditionError("Z must be nonzero");
    const Int n = nonzero(z);
    const bool search = cx.o.exhaustive || n <= kSearchLimit;
    const auto uniform = uniform_shape(z);
    auto [ra, da] = best_rd_a(n);
    auto [rb, db] = best_rd_b(n);
    Int d0 = floor_root(n);
    FatPointSpec s(z.support());

    using Thunk = std::function<BoundReport()>;
    std::vector<Thunk> alpha_list = {
        [&] { return psi_alpha_bound(z); },
        [&] { return roe_alpha(z); },
        [&] { return cor_bound(z, CorVariant::a, ra, da); },
        [&] { return cor_bound(z, CorVariant::b, rb, db); },
    };
    if (search) alpha_list.push_back([&] { return best_cor_d(z); });
    alpha_list.push_back([&] { return unloading_alpha(s, ra, da); });
    alpha_list.push_back([&] { return unloading_alpha(s, rb, db); });
    if (uniform) {
        alpha_list.push_back([&] { return unloading_alpha_formula(n, uniform->second, ra, da); });
        alpha_list.push_back([&] { return hr_alpha_formula_a(n, uniform->second, isqrt_ceil(d0 * d0 * n), d0); });
        alpha_list.push_back([&] { return hr_alpha_formula_b(n, uniform->second, d0 * d0, d0); });
    }
    alpha_list.push_back([&] { return hr_alpha(s, ra, da); });
    alpha_list.push_back([&] { return hr_alpha(s, rb, db); });
    if (search) alpha_list.push_back([&] { return best_search_alpha(z); });

    std::vector<Thunk> tau_list;
    if (uniform) {
        Int m = uniform->second;
        tau_list.push_back([=] { return segre_tau(n, m); });
        tau_list.push_back([=] { return cubic_tau(n, m); });
    }
    tau_list.push_back([&] { return hirschowitz_tau(z); });
    tau_list.push_back([&] { return gimigliano_tau(z); });
    tau_list.push_back([&] {
        return uniform ? catalisano_tau_uniform(n, uniform->second) : catalisano_tau(z);
    });
    if (uniform) {
        Int m = uniform->second;
        tau_list.push_back([=] { return ballico_tau(n, m); });
        tau_list.push_back([=] { return xu_tau(n, m); });
        tau_list.push_back([=] { return hhf_tau(n, m); });
    }
    tau_list.push_back([&] {
        auto v = z.support();
        v.resize(std::max<std::size_t>(v.size(), 2), 0);
        return roe_tau(FatPointSpec(std::move(v)));
    });
    if (uniform) {
        Int m = uniform->second;
        tau_list.push_back([=] { return hr_tau_formula_a(n, m, isqrt_ceil(d0 * d0 * n), d0); });
        tau_list.push_back([=] { return hr_tau_formula_b(n, m, d0 * d0, d0); });
    }
    tau_list.push_back([&] { return hr_tau(s, ra, da); });
    tau_list.push_back([&] { return hr_tau(s, rb, db); });
    if (uniform) {
        Int m = uniform->second;
        Rational c = std::max(Rational(mul(n, da), ra), Rational(rb, db));
        tau_list.push_back([=] { return ran_tau(n, m, c); });
    }

    auto collect = [&err](const std::vector<Thunk>& list) {
        std::vector<BoundReport> reps;
        for (const auto& f : list) {
            try {
                reps.push_back(f());
            } catch (const PreconditionError& e) {
                err << "skipped a method: " << e.what() << '\n';
            }
        }
        return reps;
    };
    BoundReport alpha = character_report(Method::find_alpha, find_alpha(z), z);
    BoundReport tau = character_report(Method::find_tau, find_tau(z), z);
    std::vector<BoundReport> lower = collect(alpha_list);
    std::vector<BoundReport> upper = collect(tau_list);
    if (!search) err << "exhaustive (r, d) searches skipped for more than " << kSearchLimit << " points; pass --exhaustive\n";

    if (cx.o.json) {
        json input = input_json(z);
        json all = json::array();
        all.push_back(report_json(alpha, input));
        for (const auto& r : lower) all.push_back(report_json(r, input));
        all.push_back(report_json(tau, input));
        for (const auto& r : upper) all.push_back(report_json(r, input));
        out << all.dump() << '\n';
        return 0;
    }
    const std::string label = value_label(z);
    out << describe(z) << "\n\n" << label << " of alpha: " << alpha.value << '\n';
    if (alpha.direction == Direction::shgh_conjectural) out << "  (an upper bound for the actual alpha)\n";
    out << "Lower bounds on alpha:\n";
    for (const auto& r : lower) out << "  " << report_text(r) << '\n';
    out << '\n' << label << " of tau: " << tau.value << '\n';
    if (tau.direction == Direction::shgh_conjectural) out << "  (a lower bound for the actual tau)\n";
    out << "Upper bounds on tau:\n";
    for (const auto& r : upper) out << "  " << report_text(r) << '\n';
    return 0;
}

json class_json(const DivisorClass& f) { return json{{"degree", f.degree}, {"mults", f.mults}}; }

std::string class_text(const DivisorClass& f) {
    std::ostringstream os;
    os << f;
    return os.str();
}

int cmd_decomp(const Context& cx, std::ostream& out) {
    if (!cx.given("--degree")) throw UsageError("decomp needs --degree");
    DivisorClass f = cx.z.at_degree(cx.o.degree);
    PsiDecomposition dec = psi_decompose(f);
    verify_psi_decomposition(f, dec);
    if (cx.o.json) {
        json parts = json::array();
        for (const auto& p : dec.n_part) parts.push_back({{"curve", class_json(p.curve)}, {"multiplicity", p.multiplicity}});
        json js{{"input", input_json(cx.z)}, {"class", class_json(f)}, {"in_psi", dec.in_psi}};
        if (dec.in_psi) {
            js["h_part"] = class_json(dec.h_part);
            js["n_part"] = parts;
        }
        out << js.dump() << '\n';
        return 0;
    }
    out << "F = " << class_text(f) << '\n';
    if (!dec.in_psi) {
        out << "not in Psi\n";
        return 0;
    }
    out << "H = " << class_text(dec.h_part) << '\n';
    if (dec.n_part.empty()) out << "N = 0\n";
    for (const auto& p : dec.n_part) out << "fixed " << class_text(p.curve) << " with multiplicity " << p.multiplicity << '\n';
    return 0;
}

int cmd_psi(const Context& cx, std::ostream& out) {
    if (!cx.given("--degree")) return print_report(cx, psi_alpha_bound(cx.z), out);
    bool member = in_psi(cx.z.at_degree(cx.o.degree));
    if (cx.o.json)
        out << json{{"input", input_json(cx.z)}, {"degree", cx.o.degree}, {"in_psi", member}}.dump() << '\n';
    else
        out << "F_" << cx.o.degree << (member ? " is" : " is not") << " in Psi\n";
    return 0;
}

int cmd_oracle(const Context& cx, std::ostream& out) {
    const FatPointSpec& z = cx.z;
    PointConfig cfg = PointConfig::random(z.size(), cx.o.seed, cx.o.prime);
    Int lo = 0, hi = 0;
    if (cx.given("--degree")) {
        lo = hi = cx.o.degree;
    } else if (cx.given("--window")) {
        std::tie(lo, hi) = parse_pair(cx.o.window, "--window");
        if (lo > hi) throw UsageError("--window needs lo <= hi");
    } else {
        lo = std::max<Int>(0, find_alpha(z) - 1);
        hi = find_tau(z) + 1;
    }
    std::optional<BettiTable> betti;
    if (z.nonzero_count() <= 8) betti = betti_table(z);
    json rows = json::array();
    std::ostringstream text;
    text << describe(z) << '\n' << "prime " << cfg.prime << ", seed " << cfg.seed << '\n' << "  t  e  h  nu";
    if (betti) text << "  nu_expected";
    text << '\n';
    for (Int t = lo; t <= hi; ++t) {
        Int e = expected_dim(z.at_degree(t));
        Int h = actual_hilbert(cfg, z, t);
        Int nu = actual_nu(cfg, z, t);
        json row{{"t", t}, {"expected", e}, {"hilbert", h}, {"nu", nu}};
        text << "  " << t << "  " << e << "  " << h << "  " << nu;
        if (betti) {
            row["nu_expected"] = betti->nu_at(t);
            text << "  " << betti->nu_at(t);
        }
        text << '\n';
        rows.push_back(row);
    }
    if (cx.o.json)
        out << json{{"input", input_json(z)}, {"method", "oracle"}, {"prime", cfg.prime}, {"seed", cfg.seed}, {"rows", rows}}.dump()
            << '\n';
    else
        out << text.str();
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Numerical characters of fat points in the plane", "fatpoints"};
    app.require_subcommand(1);

    auto add_input = [&o](CLI::App* sub) {
        sub->add_option("--mults", o.mults, "comma separated multiplicities, e.g. 3,3,2");
        sub->add_option("--uniform", o.uniform, "N:M for N points of multiplicity M");
        sub->add_flag("--json", o.json, "structured output");
    };
    auto add_rd = [&o](CLI::App* sub) {
        sub->add_option("--r", o.r, "number of points on the auxiliary curve");
        sub->add_option("--d", o.d, "degree of the auxiliary curve");
    };
    std::map<std::string, CLI::App*> subs;
    subs["hilb"] = app.add_subcommand("hilb", "expected Hilbert function table");
    subs["alpha"] = app.add_subcommand("alpha", "alpha or one of its lower bounds");
    subs["tau"] = app.add_subcommand("tau", "tau or one of its upper bounds");
    subs["beta"] = app.add_subcommand("beta", "least degree with finite base locus");
    subs["res"] = app.add_subcommand("res", "graded Betti numbers (at most 8 points) or quasi-uniform prediction");
    subs["bounds"] = app.add_subcommand("bounds", "every bound on alpha and tau");
    subs["decomp"] = app.add_subcommand("decomp", "decomposition F = H + N of F_t(Z)");
    subs["psi"] = app.add_subcommand("psi", "Psi bound on alpha, or membership of F_t(Z)");
    subs["oracle"] = app.add_subcommand("oracle", "ranks over a prime field at random points");
    for (auto& [name, sub] : subs) add_input(sub);

    subs["hilb"]->add_option("--window", o.window, "lo:hi");
    subs["res"]->add_option("--window", o.window, "lo:hi");
    subs["oracle"]->add_option("--window", o.window, "lo:hi");
    for (const char* name : {"alpha", "tau"}) {
        subs[name]->add_option("--method", o.method, "bound to compute");
        add_rd(subs[name]);
    }
    subs["alpha"]->add_option("--j", o.j, "spreading parameter for cor-d");
    subs["alpha"]->add_option("--weights", o.weights, "a_0,a_1,... rationals for nef-test");
    subs["tau"]->add_option("--c", o.c, "alpha/m constant for ran");
    subs["bounds"]->add_flag("--exhaustive", o.exhaustive, "run (r, d) searches for any number of points");
    for (const char* name : {"decomp", "psi", "oracle"}) subs[name]->add_option("--degree", o.degree, "degree t");
    subs["oracle"]->add_option("--seed", o.seed, "random seed");
    subs["oracle"]->add_option("--prime", o.prime, "field characteristic");

    std::vector<const char*> argv{"fatpoints"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        std::string name;
        const CLI::App* sub = nullptr;
        for (auto& [n, s] : subs)
            if (s->parsed()) {
                name = n;
                sub = s;
            }
        Context cx{o, sub, parse_input(o)};
        if (name == "hilb") return cmd_hilb(cx, out);
        if (name == "alpha") return print_report(cx, alpha_method(cx, o.method), out);
        if (name == "tau") return print_report(cx, tau_method(cx, o.method), out);
        if (name == "beta") return cmd_beta(cx, out);
        if (name == "res") return cmd_res(cx, out);
        if (name == "bounds") return cmd_bounds(cx, out, err);
        if (name == "decomp") return cmd_decomp(cx, out);
        if (name == "psi") return cmd_psi(cx, out);
        return cmd_oracle(cx, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace fatpoints::cli
