#include "hv/cli.hpp"

#include "hv/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hv::cli {

namespace {

void reject_unknown(const Json& j, std::initializer_list<const char*> allowed, const std::string& what)
{
    if (!j.is_object()) throw ParseError(what + ": expected an object");
    for (const auto& [k, v] : j.items())
        if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }) == allowed.end())
            throw ParseError(what + ": unknown key '" + k + "'");
}

int get_int(const Json& j, const std::string& what)
{
    if (!j.is_number_integer()) throw ParseError(what + ": expected an integer");
    return j.get<int>();
}

KappaTable parse_kappa_list(const std::string& text)
{
    std::map<int, Rational> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw ParseError("--kappa: expected i:value, got '" + item + "'");
        std::size_t used = 0;
        int i = 0;
        try {
            i = std::stoi(item.substr(0, colon), &used);
        } catch (const std::exception&) {
            throw ParseError("--kappa: bad index in '" + item + "'");
        }
        entries[i] = Rational::parse(item.substr(colon + 1));
    }
    return KappaTable::from_map(entries);
}

Json window_json(const CheckWindow& w)
{
    return {{"i_min", w.i_min},     {"i_max", w.i_max},
            {"m_max", w.m_max},     {"deg_max", w.deg_max},
            {"triple_i_max", w.triple_i_max}, {"triple_m_max", w.triple_m_max},
            {"grid_size", w.grid.size()}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace

RunConfig parse_config(const Json& j)
{
    reject_unknown(j, {"algebra", "module", "window", "grid", "suites", "probes", "fixture", "seed"}, "config");
    RunConfig c;
    if (j.contains("algebra")) c.algebra = algebra_params_from_json(j["algebra"]);
    if (j.contains("module")) c.module = module_params_from_json(j["module"]);
    if (j.contains("window")) {
        const Json& w = j["window"];
        reject_unknown(w, {"i_min", "i_max", "m_max", "deg_max", "triple_i_max", "triple_m_max"}, "window");
        if (w.contains("i_min")) c.window.i_min = get_int(w["i_min"], "window.i_min");
        if (w.contains("i_max")) c.window.i_max = get_int(w["i_max"], "window.i_max");
        if (w.contains("m_max")) c.window.m_max = get_int(w["m_max"], "window.m_max");
        if (w.contains("deg_max")) c.window.deg_max = get_int(w["deg_max"], "window.deg_max");
        if (w.contains("triple_i_max")) c.window.triple_i_max = get_int(w["triple_i_max"], "window.triple_i_max");
        if (w.contains("triple_m_max")) c.window.triple_m_max = get_int(w["triple_m_max"], "window.triple_m_max");
    }
    if (j.contains("grid")) {
        const std::string g = j["grid"].get<std::string>();
        if (g != "default" && g != "config") throw ParseError("grid: expected \"default\" or \"config\"");
        c.grid_from_config = g == "config";
    }
    if (j.contains("suites")) {
        const auto known = suite_names();
        for (const auto& s : j["suites"]) {
            std::string name = s.get<std::string>();
            if (std::find(known.begin(), known.end(), name) == known.end()) throw ParseError("suites: unknown suite '" + name + "'");
            c.suites.push_back(std::move(name));
        }
    }
    if (j.contains("probes")) {
        for (const auto& p : j["probes"]) {
            reject_unknown(p, {"seed", "degree_cap", "iter_cap"}, "probe");
            ProbeSpec spec;
            spec.seed = polynomial_from_json(p.at("seed"));
            if (p.contains("degree_cap")) spec.degree_cap = get_int(p["degree_cap"], "probe.degree_cap");
            if (p.contains("iter_cap")) spec.iter_cap = get_int(p["iter_cap"], "probe.iter_cap");
            c.probes.push_back(std::move(spec));
        }
    }
    if (j.contains("fixture")) {
        const std::string f = j["fixture"].get<std::string>();
        if (f != "reference" && f != "corrupted") throw ParseError("fixture: expected \"reference\" or \"corrupted\"");
        c.corrupted = f == "corrupted";
    }
    if (j.contains("seed")) {
        const Json& s = j["seed"];
        if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0))
            throw ParseError("seed: expected a nonnegative integer");
        c.seed = j["seed"].get<std::uint64_t>();
    }
    return c;
}

RunConfig resolve_config(const std::optional<std::string>& config_path, const Overrides& o)
{
    RunConfig c;
    if (config_path) {
        std::ifstream in(*config_path);
        if (!in) throw ConfigError("cannot read config file '" + *config_path + "'");
        Json j;
        try {
            j = Json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("config is not valid JSON: ") + e.what());
        }
        c = parse_config(j);
    }

    if (o.a || o.b || o.eps)
        c.algebra = AlgebraParams(o.a ? Rational::parse(*o.a) : c.algebra.a, o.b ? Rational::parse(*o.b) : c.algebra.b,
                                  o.eps.value_or(c.algebra.epsilon));
    if (o.lambda) c.module.lambda = Rational::parse(*o.lambda);
    if (o.alpha) c.module.alpha = Rational::parse(*o.alpha);
    if (o.beta) c.module.beta = Rational::parse(*o.beta);
    if (o.gamma) c.module.gamma = Rational::parse(*o.gamma);
    if (o.kappa) c.module.kappa = parse_kappa_list(*o.kappa);
    if (o.seed) c.seed = *o.seed;
    if (o.i_min) c.window.i_min = *o.i_min;
    if (o.i_max) c.window.i_max = *o.i_max;
    if (o.m_max) c.window.m_max = *o.m_max;
    if (o.deg_max) c.window.deg_max = *o.deg_max;
    if (o.fixture) {
        if (*o.fixture != "reference" && *o.fixture != "corrupted") throw ParseError("--fixture: expected reference or corrupted");
        c.corrupted = *o.fixture == "corrupted";
    }
    if (!o.suites.empty()) {
        const auto known = suite_names();
        for (const auto& s : o.suites)
            if (std::find(known.begin(), known.end(), s) == known.end()) throw ParseError("unknown suite '" + s + "'");
        c.suites = o.suites;
    }

    if (c.grid_from_config)
        c.window.grid = {c.build_module()};
    else
        c.window.grid = default_grid(c.window.i_min, c.window.i_max);
    c.window.validate();
    return c;
}

Result guarded(const std::function<Result()>& fn)
{
    try {
        return fn();
    } catch (const std::invalid_argument& e) { // ParseError, ConfigError
        return {kUsageError, std::string("error: ") + e.what() + "\n"};
    } catch (const std::domain_error& e) {
        return {kUsageError, std::string("error: ") + e.what() + "\n"};
    } catch (const nlohmann::json::exception& e) {
        return {kUsageError, std::string("error: bad config: ") + e.what() + "\n"};
    }
}

// ---------------------------------------------------------------------------

Result cmd_bracket(const RunConfig& cfg, const std::string& x, const std::string& y, bool json)
{
    AlgebraElement ex = AlgebraElement::parse(x);
    AlgebraElement ey = AlgebraElement::parse(y);
    AlgebraElement r = bracket(cfg.algebra, ex, ey);
    if (!json) return {kPass, r.str() + "\n"};
    Json out = {{"algebra", to_json(cfg.algebra)}, {"x", ex.str()}, {"y", ey.str()}, {"result", r.str()}, {"terms", to_json(r)}};
    return {kPass, dump(out)};
}

Result cmd_act(const RunConfig& cfg, const std::string& x, const std::string& f, bool json)
{
    Module mod = cfg.build_module();
    AlgebraElement ex = AlgebraElement::parse(x);
    Polynomial pf = Polynomial::parse(f);
    Polynomial r = act(mod, ex, pf);
    if (!json) return {kPass, r.str() + "\n"};
    Json out = {{"algebra", to_json(cfg.algebra)}, {"module", to_json(cfg.module)}, {"x", ex.str()},
                {"f", pf.str()},                   {"result", r.str()},               {"coeffs", to_json(r)}};
    return {kPass, dump(out)};
}

Result cmd_verify(const RunConfig& cfg, bool json)
{
    const std::vector<std::string> suites = cfg.suites.empty() ? suite_names() : cfg.suites;
    std::vector<Report> reports;
    for (const auto& name : suites) {
        SuiteOptions opts;
        opts.seed = cfg.seed;
        if (cfg.corrupted) opts.model = corrupted_model(name);
        reports.push_back(run_suite(name, cfg.window, opts));
    }
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.ok(); });
    const int code = ok ? kPass : kCheckFailure;

    if (!json) {
        std::string out;
        for (const auto& r : reports) out += render_text(r);
        out += std::string("overall: ") + (ok ? "PASS" : "FAIL") + "\n";
        return {code, out};
    }
    Json rs = Json::array();
    for (const auto& r : reports) rs.push_back(to_json(r));
    Json out = {{"command", "verify"},
                {"fixture", cfg.corrupted ? "corrupted" : "reference"},
                {"seed", cfg.seed},
                {"window", window_json(cfg.window)},
                {"ok", ok},
                {"reports", rs}};
    return {code, dump(out)};
}

Result cmd_probe(const RunConfig& cfg, bool json)
{
    Module mod = cfg.build_module();
    std::vector<ProbeSpec> probes = cfg.probes;
    if (probes.empty()) {
        probes.push_back({Polynomial::parse("t^2 + 1"), std::nullopt, 50});
        probes.push_back({Polynomial::parse("t"), std::nullopt, 50});
    }

    bool ok = true;
    std::string text;
    Json runs = Json::array();
    for (const auto& p : probes) {
        ProbeResult r = probe_simplicity(mod, p.seed, p.degree_cap, p.iter_cap, cfg.seed);
        ok = ok && r.report.ok();
        text += render_text(r.report);
        runs.push_back({{"seed_polynomial", r.seed.str()}, {"report", to_json(r.report)}, {"span", to_json(r.span)}});
    }
    Json out = {{"command", "probe"},
                {"algebra", to_json(cfg.algebra)},
                {"module", to_json(cfg.module)},
                {"simple_expected", is_simple_expected(cfg.algebra, cfg.module)},
                {"probes", runs}};
    const ModuleParams& mp = cfg.module;
    if (mp.alpha.is_zero() && mp.gamma.is_zero() && mp.kappa.all_zero()) {
        CheckWindow w = cfg.window;
        Report t = check_t_submodule(mod, w);
        ok = ok && t.ok();
        text += render_text(t);
        out["t_submodule"] = to_json(t);
    }
    out["ok"] = ok;
    const int code = ok ? kPass : kCheckFailure;
    if (!json) return {code, text + "overall: " + (ok ? "PASS" : "FAIL") + "\n"};
    return {code, dump(out)};
}

Result cmd_recover(const RunConfig& cfg, bool json)
{
    Module mod = cfg.build_module();
    ModuleParams got = recover_parameters(cfg.algebra, make_oracle(mod));
    const bool same = got == cfg.module;
    const int code = same ? kPass : kCheckFailure;
    if (!json) return {code, got.str() + "\n" + (same ? "matches config\n" : "differs from config\n")};
    Json out = {{"command", "recover"}, {"algebra", to_json(cfg.algebra)}, {"recovered", to_json(got)}, {"matches_config", same}};
    return {code, dump(out)};
}

Result cmd_gen_check(const RunConfig& cfg, bool json)
{
    Report r = check_generating_set(cfg.algebra);
    const int code = r.ok() ? kPass : kCheckFailure;
    if (!json) return {code, render_text(r)};
    Json out = {{"command", "gen-check"}, {"algebra", to_json(cfg.algebra)}, {"report", to_json(r)}};
    return {code, dump(out)};
}

} // namespace hv::cli
