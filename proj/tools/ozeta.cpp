// ozeta: exact zeta functions of maximal orders on arithmetic surfaces.
//
// Subcommands compute the closed-form series (local, global, poincare,
// euler, segal, census), run the symbolic Hecke checks (hecke-verify), emit
// brute-force censuses (oracle ...), and cross-check formulas against the
// enumeration oracles (oracle-verify). `run` executes a JSON job config;
// verify commands exit nonzero on the first mismatch and print both values.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ozeta/global.hpp"
#include "ozeta/hecke.hpp"
#include "ozeta/json_io.hpp"
#include "ozeta/local.hpp"
#include "ozeta/oracle.hpp"
#include "ozeta/weil.hpp"

namespace {

using namespace ozeta;
using Params = std::map<std::string, std::string>;

constexpr unsigned kDefaultHardCap = 24;

long param_long(const Params& p, const std::string& key, std::optional<long> fallback = {}) {
    auto it = p.find(key);
    if (it == p.end()) {
        if (fallback) return *fallback;
        throw std::invalid_argument("missing parameter '" + key + "'");
    }
    try {
        std::size_t pos = 0;
        long v = std::stol(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument("parameter '" + key + "': not a decimal integer: '" +
                                    it->second + "'");
    }
}

std::string param_str(const Params& p, const std::string& key, const std::string& fallback = "") {
    auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

unsigned checked_order(const Params& p) {
    long cap = param_long(p, "max_N", long(kDefaultHardCap));
    long n = param_long(p, "N");
    if (n < 0 || n > cap)
        throw std::invalid_argument("N = " + std::to_string(n) + " exceeds the hard cap " +
                                    std::to_string(cap));
    return static_cast<unsigned>(n);
}

// Inline L-data object:
//   {"factors": [{"weight": "2", "poly": ["1", "-3"], "mult": "3"}], "name": "..."}
// with every number a decimal string; "poly" lists coefficients from the
// constant term up.
weil::LData ldata_from_json(const nlohmann::json& j, const Int& q) {
    if (j.is_string()) {
        std::string name = j.get<std::string>();
        return weil::catalog(name, q);
    }
    if (!j.is_object() || !j.contains("factors"))
        throw std::invalid_argument("inline L-data must be an object with a 'factors' array");
    std::vector<weil::LFactor> factors;
    for (const auto& f : j.at("factors")) {
        weil::LFactor lf;
        lf.weight = std::stoi(f.at("weight").get<std::string>());
        lf.mult = f.contains("mult") ? std::stoll(f.at("mult").get<std::string>()) : 1;
        std::vector<Rat> coeffs;
        for (const auto& c : f.at("poly")) coeffs.emplace_back(Int(c.get<std::string>()));
        lf.poly = Polynomial(std::move(coeffs));
        factors.push_back(std::move(lf));
    }
    return weil::LData(q, std::move(factors), false, j.value("name", std::string("inline")));
}

weil::LData parse_surface(const Params& p, const nlohmann::json* structured,
                          const std::string& key, const Int& q) {
    if (structured && structured->contains(key) && !structured->at(key).is_string())
        return ldata_from_json(structured->at(key), q);
    std::string name = param_str(p, key, "P2");
    Int param = 0;
    if (name == "elliptic") param = Int(param_long(p, "trace", 0L));
    return weil::catalog(name, q, param);
}

global::OrderSpec spec_from_params(const Params& p, const nlohmann::json* structured) {
    Int q(param_long(p, "q"));
    unsigned d = static_cast<unsigned>(param_long(p, "d", 1L));
    std::string preset = param_str(p, "preset");
    if (!preset.empty()) {
        unsigned e = static_cast<unsigned>(param_long(p, "e", long(d)));
        Int trace(param_long(p, "trace", 0L));
        return global::nc_plane_preset(global::nc_plane_kind_from_string(preset), d, e, q, trace);
    }
    global::OrderSpec spec{q, d, parse_surface(p, structured, "surface", q), {}, std::nullopt,
                           std::nullopt,  "",
                           false};
    spec.base_surface = spec.azumaya_locus;
    if (structured && structured->contains("strata")) {
        for (const auto& s : structured->at("strata")) {
            unsigned e = static_cast<unsigned>(std::stoul(s.at("e").get<std::string>()));
            spec.strata.push_back({ldata_from_json(s.at("cover"), q), e});
        }
        // the azumaya locus was supplied directly; no base-surface comparison
        spec.base_surface = std::nullopt;
    }
    spec.validate();
    return spec;
}

void echo_params(io::ResultTable& t, const Params& p) {
    for (const auto& [k, v] : p)
        if (k != "format" && k != "out" && k != "expect") t.params[k] = v;
}

// --- command implementations -------------------------------------------------

io::ResultTable cmd_local(const Params& p) {
    unsigned N = checked_order(p);
    local::LocalOrderShape shape{Int(param_long(p, "q")),
                                 static_cast<unsigned>(param_long(p, "r", 1L)),
                                 static_cast<unsigned>(param_long(p, "m", 1L))};
    auto hey = local::hey_zeta(shape, N);
    auto slice = local::slice_zeta(shape, N);
    io::ResultTable t;
    t.command = "local";
    t.columns = {"hey", "slice"};
    for (unsigned k = 0; k <= N; ++k)
        t.rows.push_back({k, {io::rat_str(hey.coeff(k)), io::rat_str(slice.coeff(k))}});
    echo_params(t, p);
    return t;
}

io::ResultTable cmd_global(const Params& p, const nlohmann::json* structured) {
    unsigned N = checked_order(p);
    auto spec = spec_from_params(p, structured);
    auto order = global::order_zeta(spec, N);
    auto euler = global::euler_specialize(global::poincare_zeta(spec, N));
    std::optional<QSeries> ratio;
    if (spec.base_surface) ratio = global::matrix_algebra_ratio(spec, N);
    io::ResultTable t;
    t.command = "global";
    t.columns = {"order", "euler_z_minus_1"};
    if (ratio) t.columns.push_back("ratio_vs_matrix_algebra");
    for (unsigned k = 0; k <= N; ++k) {
        std::vector<std::string> row{io::rat_str(order.coeff(k)), io::rat_str(euler.coeff(k))};
        if (ratio) row.push_back(io::rat_str(ratio->coeff(k)));
        t.rows.push_back({k, row});
    }
    echo_params(t, p);
    if (!spec.satisfies_terminal_assumption())
        t.params["warning"] = "mixed ramification indices (uniform-index assumption violated)";
    return t;
}

io::ResultTable cmd_poincare(const Params& p, const nlohmann::json* structured) {
    unsigned N = checked_order(p);
    auto spec = spec_from_params(p, structured);
    auto t = io::table_of_zseries("poincare", global::poincare_zeta(spec, N));
    echo_params(t, p);
    return t;
}

io::ResultTable cmd_euler(const Params& p, const nlohmann::json* structured) {
    unsigned N = checked_order(p);
    auto spec = spec_from_params(p, structured);
    auto t = io::table_of_series("euler",
                                 global::euler_specialize(global::poincare_zeta(spec, N)));
    echo_params(t, p);
    return t;
}

io::ResultTable cmd_segal(const Params& p) {
    unsigned N = checked_order(p);
    auto t = io::table_of_dirichlet("segal", global::segal_dirichlet(N == 0 ? 1 : N));
    echo_params(t, p);
    return t;
}

io::ResultTable cmd_census(const Params& p, const nlohmann::json* structured) {
    Int q(param_long(p, "q"));
    unsigned K = static_cast<unsigned>(param_long(p, "K", 6L));
    auto l = parse_surface(p, structured, "surface", q);
    auto census = l.closed_point_census(K);
    io::ResultTable t;
    t.command = "census";
    t.columns = {"closed_points"};
    for (unsigned k = 1; k <= K; ++k) t.rows.push_back({k, {census[k - 1].str()}});
    echo_params(t, p);
    return t;
}

// oracle census subcommands: JSON tables keyed by colength
io::ResultTable census_table(const std::string& command,
                             const std::map<unsigned, Int>& by_colength) {
    io::ResultTable t;
    t.command = command;
    t.row_label = "colength";
    t.columns = {"count"};
    for (const auto& [c, n] : by_colength) t.rows.push_back({c, {n.str()}});
    return t;
}

io::ResultTable cmd_oracle_ideals_2d(const Params& p) {
    auto census = oracle::count_ideals_2d(static_cast<unsigned>(param_long(p, "q")),
                                          static_cast<unsigned>(param_long(p, "n", 3L)));
    auto t = census_table("oracle.count-ideals-2d", census.by_colength);
    echo_params(t, p);
    return t;
}

io::ResultTable cmd_oracle_sublattices(const Params& p) {
    auto counts = oracle::count_sublattices(static_cast<unsigned>(param_long(p, "q")),
                                            static_cast<unsigned>(param_long(p, "r", 2L)),
                                            static_cast<unsigned>(param_long(p, "n", 3L)));
    auto t = census_table("oracle.count-sublattices", counts);
    echo_params(t, p);
    return t;
}

io::ResultTable cmd_oracle_census_p2(const Params& p) {
    unsigned q = static_cast<unsigned>(param_long(p, "q"));
    unsigned n = static_cast<unsigned>(param_long(p, "n", 2L));
    std::map<unsigned, Int> counts;
    for (unsigned k = 0; k <= n; ++k) counts[k] = oracle::subscheme_census_p2(q, k);
    auto t = census_table("oracle.census-p2", counts);
    t.row_label = "length";
    echo_params(t, p);
    return t;
}

io::ResultTable cmd_oracle_symbol(const Params& p) {
    unsigned q = static_cast<unsigned>(param_long(p, "q"));
    unsigned e = static_cast<unsigned>(param_long(p, "e", 2L));
    long xi = param_long(p, "xi", -1L);
    unsigned n = static_cast<unsigned>(param_long(p, "n", 2L));
    bool b_unit = param_str(p, "b", "param") == "unit";
    auto alg = oracle::build_symbol(q, e, xi, oracle::SymbolParam::param_u,
                                    b_unit ? oracle::SymbolParam::unit
                                           : oracle::SymbolParam::param_v,
                                    n + 2);
    auto census = oracle::count_ideals_algebra(alg, n);
    auto t = census_table("oracle.symbol-census", census.by_colength);
    echo_params(t, p);
    return t;
}

// --- verify commands ----------------------------------------------------------

int report_mismatch(const std::string& what, unsigned degree, const std::string& got,
                    const std::string& want) {
    std::cout << "FAIL " << what << ": first difference at degree " << degree << ": got " << got
              << ", expected " << want << "\n";
    return 1;
}

int cmd_hecke_verify(const Params& p) {
    Int q(param_long(p, "q", 2L));
    unsigned r = static_cast<unsigned>(param_long(p, "r", 1L));
    unsigned m = static_cast<unsigned>(param_long(p, "m", 1L));
    unsigned D = static_cast<unsigned>(param_long(p, "D", 6L));
    auto chi = hecke::ChiSpec::constant(pow_int(q, r), m);
    auto zbar = hecke::hey_lseries(q, r, m, D);

    // closed form Xi^n(t_i) = q^{rn} t_i z(t_i) ... z^n(t_i), n <= 5
    {
        Rat scalar = 1;
        hecke::LMonomial mm = hecke::LMonomial::generator(0, 0);
        for (unsigned n = 1; n <= 5; ++n) {
            auto [s, next] = hecke::xi(mm, chi);
            scalar *= s;
            mm = next;
            hecke::LMonomial want;
            for (unsigned i = 0; i <= n; ++i) want = want * hecke::LMonomial::generator(i, 0);
            if (!(mm == want) || scalar != Rat(pow_int(q, static_cast<long>(r) * n)))
                return report_mismatch("closed form Xi^n(t_1)", n, mm.str(),
                                       "q^{rn} t_1 z(t_1)...z^n(t_1)");
        }
        std::cout << "closed form Xi^n(t_1) = q^{rn} t_1 z(t_1)...z^n(t_1): OK for n <= 5\n";
    }

    // partial products stabilize onto the local formula
    for (unsigned n = 1; n <= std::min(D, 4u); ++n) {
        auto partial = hecke::rho(hecke::partial_product(zbar, chi, n, D), chi);
        std::cout << "partial product n=" << n << " (rho applied): "
                  << partial.terms().size() << " monomials\n";
    }
    auto zeta = hecke::rho_prime(hecke::multi_param_zeta(chi, zbar, D), r);
    auto direct = local::slice_zeta({q, r, m}, D * r);
    for (unsigned k = 0; k <= D * r; ++k) {
        if (zeta.coeff(k) != direct.coeff(k))
            return report_mismatch("slice theorem vs local formula", k,
                                   io::rat_str(zeta.coeff(k)), io::rat_str(direct.coeff(k)));
    }
    std::cout << "PASS hecke: partial products reproduce the local formula to degree "
              << D * r << "\n";
    return 0;
}

int cmd_oracle_verify(const Params& p) {
    std::string suite = param_str(p, "suite");
    if (suite == "hey") {
        unsigned q = static_cast<unsigned>(param_long(p, "q", 2L));
        unsigned r = static_cast<unsigned>(param_long(p, "r", 2L));
        unsigned n = static_cast<unsigned>(param_long(p, "n", 6L));
        auto counts = oracle::count_sublattices(q, r, n / r);
        auto hey = local::hey_zeta({q, r, 1}, n);
        std::string matched;
        for (const auto& [colength, count] : counts) {
            if (colength > n) continue;
            if (Rat(count) != hey.coeff(colength))
                return report_mismatch("hey vs count_sublattices", colength, count.str(),
                                       io::rat_str(hey.coeff(colength)));
            if (colength > 0) matched += (matched.empty() ? "" : ", ") + count.str();
        }
        std::cout << "PASS hey: matched counts " << matched << "\n";
        return 0;
    }
    if (suite == "slice2d") {
        unsigned q = static_cast<unsigned>(param_long(p, "q", 2L));
        unsigned n = static_cast<unsigned>(param_long(p, "n", 4L));
        auto census = oracle::count_ideals_2d(q, n);
        auto zeta = local::slice_zeta({q, 1, 1}, n);
        std::string matched;
        for (unsigned c = 0; c <= n; ++c) {
            if (Rat(census.count(c)) != zeta.coeff(c))
                return report_mismatch("slice_zeta vs count_ideals_2d", c,
                                       census.count(c).str(), io::rat_str(zeta.coeff(c)));
            matched += (matched.empty() ? "" : ", ") + census.count(c).str();
        }
        std::cout << "PASS slice2d: matched counts " << matched << "\n";
        return 0;
    }
    if (suite == "symbol") {
        unsigned q = static_cast<unsigned>(param_long(p, "q", 3L));
        unsigned n = static_cast<unsigned>(param_long(p, "n", 2L));
        auto alg = oracle::build_symbol(q, 2, -1, oracle::SymbolParam::param_u,
                                        oracle::SymbolParam::param_v, std::max(2 * n + 2, 6u));
        auto slice_report = oracle::check_slice(alg, n);
        if (!slice_report.pass()) {
            std::cout << "FAIL symbol: check_slice found a non-principal submodule\n";
            return 1;
        }
        auto census = oracle::count_ideals_algebra(alg, n);
        auto zeta = local::slice_zeta({q, 1, 1}, n);
        for (unsigned c = 0; c <= n; ++c)
            if (Rat(census.count(c)) != zeta.coeff(c))
                return report_mismatch("slice_zeta vs symbol census", c, census.count(c).str(),
                                       io::rat_str(zeta.coeff(c)));
        std::cout << "PASS symbol: slice check and census match at colength <= " << n << "\n";
        return 0;
    }
    if (suite == "tower") {
        unsigned q = static_cast<unsigned>(param_long(p, "q", 2L));
        unsigned n = static_cast<unsigned>(param_long(p, "n", 3L));
        unsigned bound = static_cast<unsigned>(param_long(p, "bound", 3L));
        auto alg = oracle::build_power_series_2d(q, bound + n + 2);
        auto report = oracle::verify_tower(alg, n, bound);
        if (!report.pass) {
            std::cout << "FAIL tower: " << report.failures.front() << "\n";
            return 1;
        }
        std::cout << "PASS tower: " << report.universe_size << " submodules, T^" << n
                  << " M has " << report.tn_summands << " summands, all checks hold\n";
        return 0;
    }
    if (suite == "p2") {
        unsigned q = static_cast<unsigned>(param_long(p, "q", 2L));
        auto az = global::azumaya_zeta(weil::ldata_p2(q), 1, 2);
        for (unsigned n = 1; n <= 2; ++n) {
            Int census = oracle::subscheme_census_p2(q, n);
            if (Rat(census) != az.coeff(n))
                return report_mismatch("azumaya vs subscheme census", n, census.str(),
                                       io::rat_str(az.coeff(n)));
        }
        std::cout << "PASS p2: subscheme censuses match the azumaya formula\n";
        return 0;
    }
    if (suite == "segal") {
        auto s = global::segal_dirichlet(7);
        for (unsigned prime : {2u, 3u, 5u, 7u}) {
            Int brute = oracle::count_index_p_ideals_zx(prime);
            if (Rat(brute) != s.a(prime))
                return report_mismatch("segal a_p vs brute force", prime, brute.str(),
                                       io::rat_str(s.a(prime)));
        }
        std::cout << "PASS segal: a_p matches brute-force ideal counts for p <= 7\n";
        return 0;
    }
    throw std::invalid_argument("unknown suite '" + suite +
                                "' (expected hey|slice2d|symbol|tower|p2|segal)");
}

// --- dispatch ------------------------------------------------------------------

int emit(const io::ResultTable& table, const Params& p) {
    std::string format = param_str(p, "format", "text");
    std::string out = param_str(p, "out");
    std::string expect = param_str(p, "expect");
    if (!out.empty()) {
        std::ofstream os(out);
        if (!os) throw std::runtime_error("cannot open output file '" + out + "'");
        io::render(table, format, os);
    } else {
        io::render(table, format, std::cout);
    }
    if (!expect.empty()) {
        std::ifstream is(expect);
        if (!is) throw std::runtime_error("cannot open expected-results file '" + expect + "'");
        nlohmann::json j;
        is >> j;
        auto want = io::table_from_json(j);
        auto diff = io::compare_tables(table, want);
        if (diff.differs)
            return report_mismatch("results vs " + expect + " [" + diff.column + "]",
                                   diff.degree, diff.got, diff.want);
        std::cout << "PASS verify: results match " << expect << "\n";
    }
    return 0;
}

int dispatch(const std::string& command, const Params& p,
             const nlohmann::json* structured = nullptr) {
    if (command == "local") return emit(cmd_local(p), p);
    if (command == "global") return emit(cmd_global(p, structured), p);
    if (command == "poincare") return emit(cmd_poincare(p, structured), p);
    if (command == "euler") return emit(cmd_euler(p, structured), p);
    if (command == "segal") return emit(cmd_segal(p), p);
    if (command == "census") return emit(cmd_census(p, structured), p);
    if (command == "hecke-verify") return cmd_hecke_verify(p);
    if (command == "oracle-verify") return cmd_oracle_verify(p);
    if (command == "oracle.count-ideals-2d") return emit(cmd_oracle_ideals_2d(p), p);
    if (command == "oracle.count-sublattices") return emit(cmd_oracle_sublattices(p), p);
    if (command == "oracle.census-p2") return emit(cmd_oracle_census_p2(p), p);
    if (command == "oracle.symbol-census") return emit(cmd_oracle_symbol(p), p);
    throw std::invalid_argument("unknown command '" + command + "'");
}

int run_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        is >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("config parse error: ") + e.what());
    }
    if (!j.contains("command"))
        throw std::invalid_argument("config error at /command: missing");
    Params p;
    nlohmann::json structured;
    if (j.contains("params")) {
        if (!j.at("params").is_object())
            throw std::invalid_argument("config error at /params: must be an object");
        structured = j.at("params");
        for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it) {
            if (it.key() == "surface" && !it.value().is_string()) continue;
            if (it.key() == "strata") continue;
            if (!it.value().is_string())
                throw std::invalid_argument("config error at /params/" + it.key() +
                                            ": numbers must be decimal strings");
            p[it.key()] = it.value().get<std::string>();
        }
    }
    if (j.contains("format")) p["format"] = j.at("format").get<std::string>();
    if (j.contains("out")) p["out"] = j.at("out").get<std::string>();
    if (j.contains("expect")) p["expect"] = j.at("expect").get<std::string>();
    return dispatch(j.at("command").get<std::string>(), p, &structured);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact zeta functions of maximal orders on arithmetic surfaces"};
    app.require_subcommand(1);

    Params p;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option_function<std::string>(
            "--format", [&](const std::string& v) { p["format"] = v; },
            "output format: text|json|csv");
        sub->add_option_function<std::string>(
            "--out", [&](const std::string& v) { p["out"] = v; }, "write results to file");
        sub->add_option_function<std::string>(
            "--expect", [&](const std::string& v) { p["expect"] = v; },
            "compare against a stored JSON results file");
        sub->add_option_function<long>(
            "--max-N", [&](long v) { p["max_N"] = std::to_string(v); },
            "raise the truncation hard cap (default 24)");
    };
    auto add_opt = [&](CLI::App* sub, const std::string& flag, const std::string& key,
                       const std::string& help) {
        sub->add_option_function<std::string>(
            flag, [&p, key](const std::string& v) { p[key] = v; }, help);
    };

    std::vector<std::pair<CLI::App*, std::string>> subs;
    auto make = [&](const std::string& name, const std::string& desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        add_common(sub);
        subs.emplace_back(sub, name);
        return sub;
    };

    {
        auto* s = make("local", "Hey and homogeneous-slice local zeta coefficients");
        add_opt(s, "--q", "q", "residue field size");
        add_opt(s, "--r", "r", "matrix size in the residue algebra");
        add_opt(s, "--m", "m", "number of Wedderburn factors");
        add_opt(s, "--N", "N", "truncation order");
    }
    {
        auto* s = make("global", "global order zeta function and ratios");
        add_opt(s, "--preset", "preset", "three_lines|conic_line|nodal_cubic|sklyanin");
        add_opt(s, "--surface", "surface", "catalog surface for the Azumaya case");
        add_opt(s, "--q", "q", "base field size");
        add_opt(s, "--d", "d", "order degree");
        add_opt(s, "--e", "e", "ramification index");
        add_opt(s, "--trace", "trace", "Frobenius trace for elliptic data");
        add_opt(s, "--N", "N", "truncation order");
    }
    {
        auto* s = make("poincare", "Poincare zeta function (z-polynomial coefficients)");
        add_opt(s, "--preset", "preset", "three_lines|conic_line|nodal_cubic|sklyanin");
        add_opt(s, "--surface", "surface", "catalog surface for the Azumaya case");
        add_opt(s, "--q", "q", "base field size");
        add_opt(s, "--d", "d", "order degree");
        add_opt(s, "--e", "e", "ramification index");
        add_opt(s, "--trace", "trace", "Frobenius trace for elliptic data");
        add_opt(s, "--N", "N", "truncation order");
    }
    {
        auto* s = make("euler", "Euler specialization z = -1 of the Poincare zeta");
        add_opt(s, "--preset", "preset", "three_lines|conic_line|nodal_cubic|sklyanin");
        add_opt(s, "--surface", "surface", "catalog surface for the Azumaya case");
        add_opt(s, "--q", "q", "base field size");
        add_opt(s, "--d", "d", "order degree");
        add_opt(s, "--e", "e", "ramification index");
        add_opt(s, "--trace", "trace", "Frobenius trace for elliptic data");
        add_opt(s, "--N", "N", "truncation order");
    }
    {
        auto* s = make("segal", "Dirichlet coefficients of the affine line over Z");
        add_opt(s, "--N", "N", "index bound");
    }
    {
        auto* s = make("census", "closed-point census of a catalog stratum");
        add_opt(s, "--surface", "surface", "catalog name");
        add_opt(s, "--q", "q", "base field size");
        add_opt(s, "--K", "K", "census depth");
        add_opt(s, "--trace", "trace", "Frobenius trace for elliptic data");
    }
    {
        auto* s = make("hecke-verify", "symbolic slice-theorem checks");
        add_opt(s, "--q", "q", "residue field size");
        add_opt(s, "--r", "r", "matrix size");
        add_opt(s, "--m", "m", "number of factors");
        add_opt(s, "--D", "D", "total-degree truncation");
    }
    {
        auto* s = make("oracle-verify", "closed form vs brute-force enumeration");
        add_opt(s, "--suite", "suite", "hey|slice2d|symbol|tower|p2|segal");
        add_opt(s, "--q", "q", "base field size");
        add_opt(s, "--r", "r", "matrix size (hey)");
        add_opt(s, "--n", "n", "colength bound");
        add_opt(s, "--bound", "bound", "tower colength bound");
    }
    {
        auto* oracle_sub = app.add_subcommand("oracle", "brute-force censuses (JSON tables)");
        oracle_sub->require_subcommand(1);
        auto make_oracle = [&](const std::string& name) {
            CLI::App* s = oracle_sub->add_subcommand(name, "");
            add_common(s);
            subs.emplace_back(s, "oracle." + name);
            add_opt(s, "--q", "q", "base field size");
            add_opt(s, "--n", "n", "colength / length bound");
            return s;
        };
        make_oracle("count-ideals-2d");
        auto* lat = make_oracle("count-sublattices");
        add_opt(lat, "--r", "r", "lattice rank");
        auto* cp2 = make_oracle("census-p2");
        (void)cp2;
        auto* sym = make_oracle("symbol-census");
        add_opt(sym, "--e", "e", "symbol degree");
        add_opt(sym, "--xi", "xi", "primitive e-th root of unity");
        add_opt(sym, "--b", "b", "param|unit");
    }
    std::string config_path;
    {
        auto* s = app.add_subcommand("run", "execute a JSON job config");
        s->add_option("--config", config_path, "path to job config")->required();
        subs.emplace_back(s, "run");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        for (const auto& [sub, name] : subs) {
            if (!sub->parsed()) continue;
            if (name == "run") return run_config(config_path);
            // oracle censuses default to JSON tables
            if (name.rfind("oracle.", 0) == 0 && !p.count("format")) p["format"] = "json";
            return dispatch(name, p);
        }
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
