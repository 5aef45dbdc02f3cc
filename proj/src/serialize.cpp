#include "hv/serialize.hpp"

#include "hv/errors.hpp"

#include <set>

namespace hv {

namespace {

void reject_unknown(const Json& j, std::initializer_list<const char*> allowed, const char* what)
{
    if (!j.is_object()) throw ParseError(std::string(what) + ": expected an object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [k, v] : j.items())
        if (!ok.count(k)) throw ParseError(std::string(what) + ": unknown key '" + k + "'");
}

int int_from_json(const Json& j, const char* what)
{
    if (!j.is_number_integer()) throw ParseError(std::string(what) + ": expected an integer");
    return j.get<int>();
}

} // namespace

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const Polynomial& f)
{
    Json out = Json::array();
    for (const auto& c : f.coeffs()) out.push_back(c.str());
    return out;
}

Json to_json(const AlgebraElement& x)
{
    Json out = Json::array();
    for (const auto& [b, c] : x.terms())
        out.push_back({{"kind", b.kind == Kind::L ? "L" : "H"}, {"i", b.i}, {"m", b.m}, {"coeff", c.str()}});
    return out;
}

Json to_json(const DiffOperator& d)
{
    Json out = Json::array();
    for (const auto& [k, c] : d.terms()) out.push_back({{"xexp", k.first}, {"texp", k.second}, {"coeff", c.str()}});
    return out;
}

Json to_json(const AlgebraParams& ap) { return {{"a", ap.a.str()}, {"b", ap.b.str()}, {"epsilon", ap.epsilon}}; }

Json to_json(const ModuleParams& mp)
{
    Json kappa = Json::object();
    if (!mp.kappa.empty())
        for (int i = mp.kappa.lo(); i <= mp.kappa.hi(); ++i) kappa[std::to_string(i)] = mp.kappa.at(i).str();
    return {{"lambda", mp.lambda.str()}, {"alpha", mp.alpha.str()}, {"beta", mp.beta.str()}, {"gamma", mp.gamma.str()}, {"kappa", kappa}};
}

Json to_json(const ReportEntry& e)
{
    Json out = {{"check", e.check}, {"inputs", e.inputs}, {"passed", e.passed}, {"cases", e.cases}};
    if (!e.witness.empty()) out["witness"] = e.witness;
    if (!e.evidence.empty()) out["evidence"] = e.evidence;
    return out;
}

Json to_json(const Report& r)
{
    Json out = {{"suite", r.suite}, {"ok", r.ok()}, {"passed", r.passed()}, {"failed", r.failed()}};
    if (r.seed) out["seed"] = *r.seed;
    Json entries = Json::array();
    for (const auto& e : r.entries) entries.push_back(to_json(e));
    out["entries"] = std::move(entries);
    return out;
}

Json to_json(const SpanBasis& s)
{
    Json rows = Json::array();
    for (const auto& r : s.rows) rows.push_back(to_json(r));
    return {{"rows", rows},
            {"degree_cap", s.degree_cap},
            {"iter_cap", s.iter_cap},
            {"iterations", s.iterations},
            {"saturated", s.saturated},
            {"contains_one", contains_one(s)},
            {"inside_t_omega", in_t_omega(s)}};
}

// ---------------------------------------------------------------------------

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw ParseError("expected a rational as \"p/q\" string or an integer");
}

Polynomial polynomial_from_json(const Json& j)
{
    if (j.is_string()) return Polynomial::parse(j.get<std::string>());
    if (!j.is_array()) throw ParseError("polynomial: expected a coefficient array or a string");
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(rational_from_json(x));
    return Polynomial(std::move(c));
}

AlgebraElement element_from_json(const Json& j)
{
    if (j.is_string()) return AlgebraElement::parse(j.get<std::string>());
    if (!j.is_array()) throw ParseError("element: expected a term array or a string");
    AlgebraElement out;
    for (const auto& t : j) {
        reject_unknown(t, {"kind", "i", "m", "coeff"}, "element term");
        const std::string kind = t.at("kind").get<std::string>();
        if (kind != "L" && kind != "H") throw ParseError("element term: kind must be \"L\" or \"H\"");
        const int m = int_from_json(t.at("m"), "element term m");
        if (m < 0) throw ParseError("element term: negative height");
        out.add_term(BasisVector(kind == "L" ? Kind::L : Kind::H, int_from_json(t.at("i"), "element term i"), m),
                     t.contains("coeff") ? rational_from_json(t["coeff"]) : Rational(1));
    }
    return out;
}

AlgebraParams algebra_params_from_json(const Json& j)
{
    reject_unknown(j, {"a", "b", "epsilon"}, "algebra");
    const int eps = int_from_json(j.at("epsilon"), "algebra epsilon");
    if (eps != 1 && eps != -1) throw ConfigError("algebra: epsilon must be 1 or -1");
    return AlgebraParams(rational_from_json(j.at("a")), rational_from_json(j.at("b")), eps);
}

ModuleParams module_params_from_json(const Json& j)
{
    reject_unknown(j, {"lambda", "alpha", "beta", "gamma", "kappa"}, "module");
    ModuleParams mp;
    if (j.contains("lambda")) mp.lambda = rational_from_json(j["lambda"]);
    if (j.contains("alpha")) mp.alpha = rational_from_json(j["alpha"]);
    if (j.contains("beta")) mp.beta = rational_from_json(j["beta"]);
    if (j.contains("gamma")) mp.gamma = rational_from_json(j["gamma"]);
    if (j.contains("kappa")) {
        const Json& k = j["kappa"];
        if (!k.is_object()) throw ParseError("module: kappa must be an object {\"i\": \"p/q\"}");
        std::map<int, Rational> entries;
        for (const auto& [key, v] : k.items()) {
            std::size_t used = 0;
            int i = 0;
            try {
                i = std::stoi(key, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != key.size() || key.empty()) throw ParseError("module: kappa key '" + key + "' is not an integer");
            entries[i] = rational_from_json(v);
        }
        mp.kappa = KappaTable::from_map(entries);
    }
    return mp;
}

// ---------------------------------------------------------------------------

std::string render_text(const Report& r)
{
    std::string out;
    for (const auto& e : r.entries) {
        out += (e.passed ? "PASS " : "FAIL ") + r.suite + ": " + e.check + " [" + e.inputs + "] cases=" + std::to_string(e.cases);
        if (!e.evidence.empty()) out += " evidence=" + e.evidence;
        out += "\n";
        if (!e.witness.empty()) out += "     witness: " + e.witness + "\n";
    }
    out += r.suite + ": " + std::to_string(r.passed()) + " passed, " + std::to_string(r.failed()) + " failed";
    if (r.seed) out += " (seed " + std::to_string(*r.seed) + ")";
    out += "\n";
    return out;
}

} // namespace hv
