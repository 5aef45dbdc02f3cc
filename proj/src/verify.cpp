#include "hv/verify.hpp"

#include "hv/errors.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace hv {

namespace {

std::vector<BasisVector> basis_box(int i_lo, int i_hi, int m_max, bool with_h = true)
{
    std::vector<BasisVector> out;
    for (Kind k : {Kind::L, Kind::H}) {
        if (k == Kind::H && !with_h) continue;
        for (int i = i_lo; i <= i_hi; ++i)
            for (int m = 0; m <= m_max; ++m) out.emplace_back(k, i, m);
    }
    return out;
}

std::vector<AlgebraParams> distinct_algebras(const CheckWindow& w)
{
    std::vector<AlgebraParams> out;
    for (const auto& mod : w.grid)
        if (std::find(out.begin(), out.end(), mod.algebra()) == out.end()) out.push_back(mod.algebra());
    return out;
}

// Accumulates one report entry: counts cases, keeps the first failure.
class EntryBuilder {
public:
    EntryBuilder(std::string check, std::string inputs)
    {
        e_.check = std::move(check);
        e_.inputs = std::move(inputs);
    }
    void pass() { ++e_.cases; }
    void fail(const std::string& witness)
    {
        ++e_.cases;
        if (e_.passed) e_.witness = witness;
        e_.passed = false;
    }
    void expect(bool ok, const std::function<std::string()>& witness)
    {
        if (ok)
            pass();
        else
            fail(witness());
    }
    ReportEntry done() { return std::move(e_); }

private:
    ReportEntry e_;
};

Polynomial t_pow(int k) { return Polynomial::monomial(k); }

// Memoized x . t^k for one module.
class ActionCache {
public:
    ActionCache(const Module& mod, const Model& model) : mod_(mod), model_(model) {}

    const Polynomial& on_monomial(const BasisVector& x, int k)
    {
        auto key = std::make_pair(x, k);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(key, model_.act_basis(mod_, x, t_pow(k))).first->second;
    }

    // x . f through the monomial cache (act is linear in f).
    Polynomial on(const BasisVector& x, const Polynomial& f)
    {
        Polynomial out;
        auto c = f.coeffs();
        for (std::size_t k = 0; k < c.size(); ++k)
            if (!c[k].is_zero()) out.add_scaled(on_monomial(x, static_cast<int>(k)), c[k]);
        return out;
    }

    Polynomial on(const AlgebraElement& x, const Polynomial& f)
    {
        Polynomial out;
        for (const auto& [b, c] : x.terms()) out.add_scaled(on(b, f), c);
        return out;
    }

private:
    const Module& mod_;
    const Model& model_;
    std::map<std::pair<BasisVector, int>, Polynomial> cache_;
};

std::string label(const Module& mod) { return mod.str(); }

} // namespace

// ---------------------------------------------------------------------------

void CheckWindow::validate() const
{
    if (i_min > i_max) throw ConfigError("window: i_min > i_max");
    if (m_max < 0 || deg_max < 0 || triple_i_max < 0 || triple_m_max < 0)
        throw ConfigError("window: bounds must be nonnegative");
    if (grid.empty()) throw ConfigError("window: empty parameter grid");
}

std::vector<Module> default_grid(int i_min, int i_max)
{
    const int lo = 2 * std::min(i_min, -1) - 2;
    const int hi = 2 * std::max(i_max, 1) + 2;
    std::vector<Rational> kv;
    for (int i = lo; i <= hi; ++i) kv.emplace_back(Rational(i * i - 2 * i + 3, 4));
    const KappaTable kappa(lo, kv);

    std::vector<Module> grid;
    const std::vector<std::pair<Rational, Rational>> ab = {
        {Rational(0), Rational(0)}, {Rational(1, 2), Rational(1)}, {Rational(0), Rational(1)}, {Rational(1, 3), Rational(2)}};
    for (int eps : {1, -1}) {
        for (const auto& [a, b] : ab) {
            AlgebraParams ap(a, b, eps);
            ModuleParams mp;
            if (eps == 1) {
                mp.lambda = 2;
                mp.alpha = Rational(3, 2);
                mp.beta = Rational(-2, 3);
                mp.gamma = Rational(5, 7);
            } else {
                mp.lambda = Rational(-3, 2);
                mp.alpha = Rational(1, 3);
                mp.beta = 2;
                mp.gamma = Rational(-4, 5);
            }
            if (!gamma_active(ap)) mp.gamma = 0;
            if (kappa_active(ap)) mp.kappa = kappa;
            grid.emplace_back(ap, mp);
        }
    }
    return grid;
}

CheckWindow default_window()
{
    CheckWindow w;
    w.grid = default_grid(w.i_min, w.i_max);
    return w;
}

std::size_t Report::passed() const
{
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.passed; }));
}

std::size_t Report::failed() const { return entries.size() - passed(); }

// ---------------------------------------------------------------------------

Model Model::reference()
{
    Model m;
    m.bracket_basis = [](const AlgebraParams& p, const BasisVector& x, const BasisVector& y) { return hv::bracket_basis(p, x, y); };
    m.act_basis = [](const Module& mod, const BasisVector& x, const Polynomial& f) { return hv::act_basis(mod, x, f); };
    m.act_monomial = [](const Module& mod, const BasisVector& x, int k) { return hv::act_monomial(mod, x, k); };
    m.h_on_one = [](const Module& mod, int i, int mm) { return hv::h_on_one(mod, i, mm); };
    m.prop41_lhs = [](int s, const Rational& A, const Rational& beta) { return hv::prop41_lhs(s, A, beta); };
    return m;
}

AlgebraElement Model::bracket(const AlgebraParams& p, const AlgebraElement& x, const AlgebraElement& y) const
{
    AlgebraElement out;
    for (const auto& [bx, cx] : x.terms())
        for (const auto& [by, cy] : y.terms()) out += (cx * cy) * bracket_basis(p, bx, by);
    return out;
}

Polynomial Model::act(const Module& mod, const AlgebraElement& x, const Polynomial& f) const
{
    Polynomial out;
    for (const auto& [b, c] : x.terms()) out.add_scaled(act_basis(mod, b, f), c);
    return out;
}

Model corrupted_model(std::string_view suite)
{
    Model m = Model::reference();
    const Rational delta(1, 7);
    auto perturb_bracket = [&m, delta](BasisVector px, BasisVector py, BasisVector extra) {
        auto base = m.bracket_basis;
        m.bracket_basis = [=](const AlgebraParams& p, const BasisVector& x, const BasisVector& y) {
            AlgebraElement r = base(p, x, y);
            if (x == px && y == py) r.add_term(extra, delta);
            return r;
        };
    };
    auto perturb_action = [&m, delta](BasisVector target, bool constants_only, bool nonconstants_only) {
        auto base = m.act_basis;
        m.act_basis = [=](const Module& mod, const BasisVector& x, const Polynomial& f) {
            Polynomial r = base(mod, x, f);
            const bool constant = f.degree().value_or(0) == 0;
            if (x == target && !(constants_only && !constant) && !(nonconstants_only && constant)) r.add_scaled(f, delta);
            return r;
        };
    };

    if (suite == "antisymmetry" || suite == "realization") {
        perturb_bracket(BasisVector::L(0, 1), BasisVector::L(1, 0), BasisVector::L(1, 1));
    } else if (suite == "jacobi") {
        perturb_bracket(BasisVector::L(1, 1), BasisVector::L(-1, 0), BasisVector::L(0, 1));
    } else if (suite == "shift_isomorphism") {
        perturb_bracket(BasisVector::L(1, 0), BasisVector::H(0, 0), BasisVector::H(1, 0));
    } else if (suite == "module_axiom") {
        perturb_action(BasisVector::L(1, 1), false, false);
    } else if (suite == "equivalent_forms") {
        auto base = m.act_monomial;
        m.act_monomial = [=](const Module& mod, const BasisVector& x, int k) {
            Polynomial r = base(mod, x, k);
            if (x == BasisVector::L(1, 1)) r.add_scaled(Polynomial::monomial(k), delta);
            return r;
        };
    } else if (suite == "closed_forms") {
        auto base = m.h_on_one;
        m.h_on_one = [=](const Module& mod, int i, int mm) {
            Rational r = base(mod, i, mm);
            if (i == 1 && mm == 1) r += delta;
            return r;
        };
    } else if (suite == "lemma_combination") {
        perturb_action(BasisVector::H(1, 2), false, true);
    } else if (suite == "g_recursions") {
        perturb_action(BasisVector::H(1, 1), true, false);
    } else if (suite == "prop41_identity") {
        auto base = m.prop41_lhs;
        m.prop41_lhs = [=](int s, const Rational& A, const Rational& beta) {
            Rational r = base(s, A, beta);
            if (s == 2) r += delta;
            return r;
        };
    } else if (suite == "parameter_liveness") {
        auto base = m.act_basis;
        m.act_basis = [=](const Module& mod, const BasisVector& x, const Polynomial& f) {
            Polynomial r = base(mod, x, f);
            if (x == BasisVector::H(0, 0)) r.add_scaled(f, delta * mod.params().gamma);
            return r;
        };
    } else {
        throw ConfigError("no negative-control fixture for suite '" + std::string(suite) + "'");
    }
    return m;
}

// ---------------------------------------------------------------------------

Report check_antisymmetry(const CheckWindow& w, const Model& model)
{
    Report rep{"antisymmetry", {}, {}};
    const auto basis = basis_box(w.i_min, w.i_max, w.m_max);
    for (const auto& ap : distinct_algebras(w)) {
        EntryBuilder eb("[x,y] + [y,x] = 0", ap.str());
        for (const auto& x : basis)
            for (const auto& y : basis) {
                AlgebraElement s = model.bracket_basis(ap, x, y) + model.bracket_basis(ap, y, x);
                eb.expect(s.is_zero(), [&] { return "[" + x.str() + "," + y.str() + "] + [" + y.str() + "," + x.str() + "] = " + s.str(); });
            }
        rep.entries.push_back(eb.done());
    }
    return rep;
}

Report check_jacobi(const CheckWindow& w, const Model& model)
{
    Report rep{"jacobi", {}, {}};
    const auto basis = basis_box(-w.triple_i_max, w.triple_i_max, w.triple_m_max);
    for (const auto& ap : distinct_algebras(w)) {
        std::map<std::pair<BasisVector, BasisVector>, AlgebraElement> pair_cache;
        auto br = [&](const BasisVector& x, const BasisVector& y) -> const AlgebraElement& {
            auto key = std::make_pair(x, y);
            auto it = pair_cache.find(key);
            if (it != pair_cache.end()) return it->second;
            return pair_cache.emplace(key, model.bracket_basis(ap, x, y)).first->second;
        };
        auto br_elem = [&](const BasisVector& x, const AlgebraElement& e) {
            AlgebraElement out;
            for (const auto& [b, c] : e.terms()) out += c * br(x, b);
            return out;
        };
        EntryBuilder eb("[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0", ap.str());
        for (const auto& x : basis)
            for (const auto& y : basis)
                for (const auto& z : basis) {
                    AlgebraElement j = br_elem(x, br(y, z)) + br_elem(y, br(z, x)) + br_elem(z, br(x, y));
                    eb.expect(j.is_zero(), [&] { return "x=" + x.str() + " y=" + y.str() + " z=" + z.str() + " -> " + j.str(); });
                }
        rep.entries.push_back(eb.done());
    }
    return rep;
}

Report check_realization(int eps, const CheckWindow& w, const Model& model)
{
    Report rep{"realization", {}, {}};
    const AlgebraParams ap(0, 0, eps);
    const auto basis = basis_box(w.i_min, w.i_max, w.m_max, false);
    EntryBuilder eb("[R(x), R(y)] = R([x,y])", "eps=" + std::to_string(eps));
    for (const auto& x : basis)
        for (const auto& y : basis) {
            DiffOperator lhs = op_commutator(eps, realize_L(eps, x), realize_L(eps, y));
            DiffOperator rhs = realize(eps, model.bracket_basis(ap, x, y));
            eb.expect(lhs == rhs, [&] { return x.str() + "," + y.str() + ": commutator " + lhs.str() + " vs bracket " + rhs.str(); });
        }
    rep.entries.push_back(eb.done());
    return rep;
}

Report check_shift_isomorphism(std::span<const int> ks, const CheckWindow& w, const Model& model)
{
    Report rep{"shift_isomorphism", {}, {}};
    const auto basis = basis_box(w.i_min, w.i_max, w.m_max);
    for (const auto& ap : distinct_algebras(w)) {
        for (int k : ks) {
            const AlgebraParams target(ap.a + Rational(k), ap.b, ap.epsilon);
            EntryBuilder eb("Phi_k([x,y]) = [Phi_k x, Phi_k y]'", ap.str() + ",k=" + std::to_string(k));
            for (const auto& x : basis)
                for (const auto& y : basis) {
                    AlgebraElement lhs = shift_isomorphism(k, model.bracket_basis(ap, x, y));
                    AlgebraElement rhs = model.bracket(target, shift_isomorphism(k, x), shift_isomorphism(k, y));
                    eb.expect(lhs == rhs, [&] { return x.str() + "," + y.str() + ": " + lhs.str() + " vs " + rhs.str(); });
                }
            rep.entries.push_back(eb.done());
        }
    }
    return rep;
}

Report check_module_axiom(const CheckWindow& w, const Model& model)
{
    Report rep{"module_axiom", {}, {}};
    const auto basis = basis_box(w.i_min, w.i_max, w.m_max);
    for (const auto& mod : w.grid) {
        ActionCache cache(mod, model);
        EntryBuilder eb("[x,y].f = x.(y.f) - y.(x.f)", label(mod));
        for (const auto& x : basis)
            for (const auto& y : basis) {
                const AlgebraElement xy = model.bracket_basis(mod.algebra(), x, y);
                for (int k = 0; k <= w.deg_max; ++k) {
                    Polynomial lhs = cache.on(xy, t_pow(k));
                    Polynomial rhs = cache.on(x, cache.on_monomial(y, k)) - cache.on(y, cache.on_monomial(x, k));
                    eb.expect(lhs == rhs, [&] {
                        return "x=" + x.str() + " y=" + y.str() + " f=t^" + std::to_string(k) + ": discrepancy " + (lhs - rhs).str();
                    });
                }
            }
        rep.entries.push_back(eb.done());
    }
    return rep;
}

Report check_equivalent_forms(const CheckWindow& w, const Model& model)
{
    Report rep{"equivalent_forms", {}, {}};
    const auto basis = basis_box(w.i_min, w.i_max, w.m_max);
    for (const auto& mod : w.grid) {
        EntryBuilder eb("derivative form = monomial form on t^k", label(mod));
        for (const auto& x : basis)
            for (int k = 0; k <= w.deg_max; ++k) {
                Polynomial d = model.act_basis(mod, x, t_pow(k));
                Polynomial mono = model.act_monomial(mod, x, k);
                eb.expect(d == mono, [&] { return x.str() + " on t^" + std::to_string(k) + ": " + d.str() + " vs " + mono.str(); });
            }
        rep.entries.push_back(eb.done());
    }
    return rep;
}

Report check_closed_forms(const CheckWindow& w, const Model& model)
{
    Report rep{"closed_forms", {}, {}};
    for (const auto& mod : w.grid) {
        EntryBuilder eb("H_{i,m}.1 = closed form", label(mod));
        for (int i = w.i_min; i <= w.i_max; ++i)
            for (int m = 0; m <= w.m_max; ++m) {
                Polynomial direct = model.act_basis(mod, BasisVector::H(i, m), Polynomial::constant(1));
                Rational closed = model.h_on_one(mod, i, m);
                eb.expect(direct == Polynomial::constant(closed), [&] {
                    return "H[" + std::to_string(i) + "," + std::to_string(m) + "].1 = " + direct.str() + ", closed form " + closed.str();
                });
            }
        rep.entries.push_back(eb.done());
    }
    return rep;
}

Report check_lemma_combination(const CheckWindow& w, const Model& model)
{
    Report rep{"lemma_combination", {}, {}};
    for (const auto& mod : w.grid) {
        const AlgebraParams& ap = mod.algebra();
        const int eps = ap.epsilon;
        EntryBuilder eb(eps == 1 ? "H_{i,m}.t^k = sum_s s! C(m,s) C(k,s) (t-a-i)^{k-s} H_{i,m-s}.1"
                                 : "H_{i,m}.t^k = sum_s (-1)^s s! C(m+s-1,s) C(k,s) (t-a-i)^{k-s} H_{i,m+s}.1",
                        label(mod));
        for (int i = w.i_min; i <= w.i_max; ++i) {
            const Rational center = ap.a + Rational(i);
            std::map<int, Polynomial> g; // H_{i,j} . 1
            auto G = [&](int j) -> const Polynomial& {
                auto it = g.find(j);
                if (it != g.end()) return it->second;
                return g.emplace(j, model.act_basis(mod, BasisVector::H(i, j), Polynomial::constant(1))).first->second;
            };
            for (int m = 0; m <= w.m_max; ++m)
                for (int k = 0; k <= w.deg_max; ++k) {
                    Polynomial direct = model.act_basis(mod, BasisVector::H(i, m), t_pow(k));
                    Polynomial combo;
                    if (eps == 1) {
                        for (int s = 0; s <= std::min(m, k); ++s) {
                            Rational c = factorial(s) * gen_binomial(m, s) * gen_binomial(k, s);
                            combo += c * (shift(t_pow(k - s), center) * G(m - s));
                        }
                    } else {
                        for (int s = 0; s <= k; ++s) {
                            Rational c = int_pow(Rational(-1), s) * factorial(s) * gen_binomial(m + s - 1, s) * gen_binomial(k, s);
                            if (c.is_zero()) continue;
                            combo += c * (shift(t_pow(k - s), center) * G(m + s));
                        }
                    }
                    eb.expect(direct == combo, [&] {
                        return "i=" + std::to_string(i) + " m=" + std::to_string(m) + " k=" + std::to_string(k) + ": " + direct.str()
                             + " vs " + combo.str();
                    });
                }
        }
        rep.entries.push_back(eb.done());
    }
    return rep;
}

Report check_G_recursions(const CheckWindow& w, const Model& model)
{
    Report rep{"g_recursions", {}, {}};
    for (const auto& mod : w.grid) {
        const AlgebraParams& ap = mod.algebra();
        const ModuleParams& p = mod.params();
        const HBranch br = mod.branch();
        const int eps = ap.epsilon;
        std::map<std::pair<int, int>, Polynomial> cache;
        auto G = [&](int i, int m) -> const Polynomial& {
            auto key = std::make_pair(i, m);
            auto it = cache.find(key);
            if (it != cache.end()) return it->second;
            return cache.emplace(key, model.act_basis(mod, BasisVector::H(i, m), Polynomial::constant(1))).first->second;
        };
        auto where = [](int i, int m) { return "i=" + std::to_string(i) + " m=" + std::to_string(m); };

        {
            EntryBuilder eb("H_{i,m}.1 is a constant", label(mod));
            for (int i = w.i_min; i <= w.i_max; ++i)
                for (int m = 0; m <= w.m_max + 1; ++m)
                    eb.expect(G(i, m).degree().value_or(0) == 0, [&] { return where(i, m) + ": " + G(i, m).str(); });
            rep.entries.push_back(eb.done());
        }

        auto relation = [&](const std::string& name, auto&& residual, int m_lo) {
            EntryBuilder eb(name, label(mod));
            for (int i = w.i_min; i <= w.i_max; ++i)
                for (int m = m_lo; m <= w.m_max; ++m) {
                    Polynomial r = residual(i, m);
                    eb.expect(r.is_zero(), [&] { return where(i, m) + ": residual " + r.str(); });
                }
            rep.entries.push_back(eb.done());
        };
        auto vanishing = [&]() {
            EntryBuilder eb("G_{i,m} = 0", label(mod));
            for (int i = w.i_min; i <= w.i_max; ++i)
                for (int m = 0; m <= w.m_max + 1; ++m) eb.expect(G(i, m).is_zero(), [&] { return where(i, m) + ": " + G(i, m).str(); });
            rep.entries.push_back(eb.done());
        };
        auto lam = [&](int i) { return int_pow(p.lambda, i); };

        if (br == HBranch::BZero) {
            relation("(a+i)G_{i,m} = (a+i) lambda^i beta^m gamma", [&](int i, int m) {
                Rational ai = ap.a + Rational(i);
                return G(i, m) * ai - Polynomial::constant(ai * lam(i) * int_pow(p.beta, m) * p.gamma);
            }, 0);
        } else if (eps == 1 && br == HBranch::BOneANonzero) {
            relation("(a+i)G_{i,m} - m G_{i,m-1} = a lambda^i beta^m gamma", [&](int i, int m) {
                Polynomial r = G(i, m) * (ap.a + Rational(i));
                if (m >= 1) r -= G(i, m - 1) * Rational(m);
                return r - Polynomial::constant(ap.a * lam(i) * int_pow(p.beta, m) * p.gamma);
            }, 0);
        } else if (eps == 1 && br == HBranch::BOneAZero) {
            relation("i G_{i,m} - m G_{i,m-1} = 0", [&](int i, int m) { return G(i, m) * Rational(i) - G(i, m - 1) * Rational(m); }, 1);
            vanishing();
        } else if (eps == 1 && br == HBranch::Generic) {
            relation("(a+i)G_{i,m} - b m G_{i,m-1} = 0",
                     [&](int i, int m) { return G(i, m) * (ap.a + Rational(i)) - G(i, m - 1) * (ap.b * Rational(m)); }, 1);
            vanishing();
        } else if (eps == -1 && br == HBranch::BOneANonzero) {
            relation("(a+i)G_{i,m} + m G_{i,m+1} = a lambda^i beta^m gamma", [&](int i, int m) {
                return G(i, m) * (ap.a + Rational(i)) + G(i, m + 1) * Rational(m)
                     - Polynomial::constant(ap.a * lam(i) * int_pow(p.beta, m) * p.gamma);
            }, 0);
        } else if (eps == -1 && br == HBranch::BOneAZero) {
            relation("i G_{i,m} + m G_{i,m+1} = 0", [&](int i, int m) { return G(i, m) * Rational(i) + G(i, m + 1) * Rational(m); }, 0);
        } else { // eps = -1, b not in {0, 1}
            EntryBuilder eb("(a+i+bj)G_{i+j,m} + b m G_{i+j,m+1} = 0", label(mod));
            for (int i = w.i_min; i <= w.i_max; ++i)
                for (int j = w.i_min; j <= w.i_max; ++j)
                    for (int m = 0; m <= w.m_max; ++m) {
                        Polynomial r = G(i + j, m) * (ap.a + Rational(i) + ap.b * Rational(j)) + G(i + j, m + 1) * (ap.b * Rational(m));
                        eb.expect(r.is_zero(), [&] { return "i=" + std::to_string(i) + " j=" + std::to_string(j) + " m=" + std::to_string(m) + ": " + r.str(); });
                    }
            rep.entries.push_back(eb.done());
            vanishing();
        }
    }
    return rep;
}

Report check_prop41_identity(int s_max, int samples, std::uint64_t seed, const Model& model)
{
    Report rep{"prop41_identity", {}, seed};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    std::vector<std::pair<Rational, Rational>> points = {{Rational(2), Rational(3)}};
    for (int n = 0; n < samples; ++n) {
        Rational A(num(rng), den(rng));
        Rational beta(num(rng), den(rng));
        points.emplace_back(A, beta);
    }
    for (int s = 0; s <= s_max; ++s) {
        EntryBuilder eb("cancellation sum = (-1)^s beta^{s+1}", "s=" + std::to_string(s));
        for (const auto& [A, beta] : points) {
            Rational lhs = model.prop41_lhs(s, A, beta);
            Rational rhs = int_pow(Rational(-1), s) * int_pow(beta, s + 1);
            eb.expect(lhs == rhs, [&] { return "A=" + A.str() + " beta=" + beta.str() + ": " + lhs.str() + " vs " + rhs.str(); });
        }
        rep.entries.push_back(eb.done());
    }
    return rep;
}

std::optional<int> expected_free_parameters(const AlgebraParams& ap)
{
    if (kappa_active(ap)) return std::nullopt;
    return gamma_active(ap) ? 4 : 3;
}

Report check_parameter_liveness(const CheckWindow& w, const Model& model)
{
    Report rep{"parameter_liveness", {}, {}};
    constexpr int kappa_probe = 5;
    for (const auto& mod : w.grid) {
        const AlgebraParams& ap = mod.algebra();
        const ModuleParams& base = mod.params();
        const int i_lo = std::min(w.i_min, kappa_probe);
        const int i_hi = std::max(w.i_max, kappa_probe);
        const auto basis = basis_box(i_lo, i_hi, w.m_max);

        // Every output the window can observe.
        auto observe = [&](const Module& m, bool l_only) {
            std::vector<Polynomial> out;
            for (const auto& x : basis) {
                if (l_only && x.kind != Kind::L) continue;
                for (int k = 0; k <= w.deg_max; ++k) out.push_back(model.act_basis(m, x, t_pow(k)));
            }
            return out;
        };
        const auto reference = observe(mod, false);

        auto kappa_variant = [&]() {
            ModuleParams mp = base;
            if (mp.kappa.empty()) {
                std::vector<Rational> v(static_cast<std::size_t>(2 * (i_hi - i_lo) + 1));
                mp.kappa = KappaTable(2 * i_lo, v);
            }
            std::vector<Rational> v = mp.kappa.values();
            v[static_cast<std::size_t>(kappa_probe - mp.kappa.lo())] += 1;
            mp.kappa = KappaTable(mp.kappa.lo(), v);
            return mp;
        };

        struct Variant {
            std::string name;
            ModuleParams mp;
        };
        std::vector<Variant> variants;
        {
            ModuleParams v = base;
            v.lambda += 1;
            if (v.lambda.is_zero()) v.lambda += 1;
            variants.push_back({"lambda", v});
        }
        {
            ModuleParams v = base;
            v.alpha += 1;
            variants.push_back({"alpha", v});
        }
        {
            ModuleParams v = base;
            v.beta += 1;
            variants.push_back({"beta", v});
        }
        {
            ModuleParams v = base;
            v.gamma += 1;
            variants.push_back({"gamma", v});
        }
        variants.push_back({"kappa", kappa_variant()});

        int live_scalars = 0;
        bool kappa_live = false;
        std::string live_names;
        for (const auto& v : variants) {
            Module changed = Module::unvalidated(ap, v.mp);
            bool live = observe(changed, false) != reference;
            if (!live) continue;
            live_names += (live_names.empty() ? "" : ",") + v.name;
            if (v.name == "kappa")
                kappa_live = true;
            else
                ++live_scalars;
        }

        const auto expected = expected_free_parameters(ap);
        EntryBuilder eb("free-parameter count", label(mod));
        const bool ok = expected ? (!kappa_live && live_scalars == *expected) : (kappa_live && live_scalars == 4);
        eb.expect(ok, [&] {
            return "live {" + live_names + "}, expected " + (expected ? std::to_string(*expected) : std::string("infinitely many"));
        });
        rep.entries.push_back(eb.done());

        if (kappa_active(ap)) {
            EntryBuilder kb("kappa_5 moves H_{5,1}.1 and no L-action", label(mod));
            Module changed = Module::unvalidated(ap, kappa_variant());
            Polynomial before = model.act_basis(mod, BasisVector::H(kappa_probe, 1), Polynomial::constant(1));
            Polynomial after = model.act_basis(changed, BasisVector::H(kappa_probe, 1), Polynomial::constant(1));
            kb.expect(after - before == Polynomial::constant(1), [&] { return "H[5,1].1: " + before.str() + " -> " + after.str(); });
            kb.expect(observe(changed, true) == observe(mod, true), [] { return std::string("an L-action output changed"); });
            rep.entries.push_back(kb.done());
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------

std::vector<std::string> suite_names()
{
    return {"antisymmetry",      "jacobi",          "realization", "shift_isomorphism", "module_axiom", "equivalent_forms",
            "closed_forms",      "lemma_combination", "g_recursions", "prop41_identity", "parameter_liveness"};
}

Report run_suite(std::string_view name, const CheckWindow& w, const SuiteOptions& opts)
{
    w.validate();
    const Model& m = opts.model;
    if (name == "antisymmetry") return check_antisymmetry(w, m);
    if (name == "jacobi") return check_jacobi(w, m);
    if (name == "realization") {
        Report r = check_realization(1, w, m);
        Report neg = check_realization(-1, w, m);
        r.entries.insert(r.entries.end(), neg.entries.begin(), neg.entries.end());
        return r;
    }
    if (name == "shift_isomorphism") {
        const int ks[] = {-2, -1, 0, 1, 2};
        return check_shift_isomorphism(ks, w, m);
    }
    if (name == "module_axiom") return check_module_axiom(w, m);
    if (name == "equivalent_forms") return check_equivalent_forms(w, m);
    if (name == "closed_forms") return check_closed_forms(w, m);
    if (name == "lemma_combination") return check_lemma_combination(w, m);
    if (name == "g_recursions") return check_G_recursions(w, m);
    if (name == "prop41_identity") return check_prop41_identity(opts.prop41_s_max, opts.prop41_samples, opts.seed, m);
    if (name == "parameter_liveness") return check_parameter_liveness(w, m);
    throw ConfigError("unknown suite '" + std::string(name) + "'");
}

} // namespace hv
