#include "hv/structure_probe.hpp"

#include "hv/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace hv {

namespace {

struct Row {
    Polynomial p;
    std::map<int, Rational> combo;
};

void add_combo(std::map<int, Rational>& into, const std::map<int, Rational>& from, const Rational& s)
{
    for (const auto& [k, c] : from) {
        Rational& slot = into[k];
        slot += s * c;
        if (slot.is_zero()) into.erase(k);
    }
}

// Reduced row-echelon form keyed by leading power.
class Echelon {
public:
    // Reduces v (and its combination) in place.
    void reduce(Polynomial& v, std::map<int, Rational>* combo) const
    {
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            Rational c = v.coeff(it->first);
            if (c.is_zero()) continue;
            v.add_scaled(it->second.p, -c);
            if (combo) add_combo(*combo, it->second.combo, -c);
        }
    }

    // v must already be reduced and nonzero.
    void insert(Polynomial v, std::map<int, Rational> combo)
    {
        const int lead = *v.degree();
        const Rational inv = Rational(1) / v.leading();
        v *= inv;
        for (auto& [k, c] : combo) c *= inv;
        for (auto& [k, row] : rows_) {
            Rational c = row.p.coeff(lead);
            if (c.is_zero()) continue;
            row.p.add_scaled(v, -c);
            add_combo(row.combo, combo, -c);
        }
        rows_.emplace(lead, Row{std::move(v), std::move(combo)});
    }

    void export_to(SpanBasis& s) const
    {
        s.rows.clear();
        s.combos.clear();
        for (const auto& [k, row] : rows_) {
            s.rows.push_back(row.p);
            s.combos.push_back(row.combo);
        }
    }

private:
    std::map<int, Row> rows_;
};

std::vector<BasisVector> basis_box(int i_lo, int i_hi, int m_max)
{
    std::vector<BasisVector> out;
    for (Kind k : {Kind::L, Kind::H})
        for (int i = i_lo; i <= i_hi; ++i)
            for (int m = 0; m <= m_max; ++m) out.emplace_back(k, i, m);
    return out;
}

// Sparse echelon form over algebra elements, pivoting on the largest basis
// vector of each row.
class ElementEchelon {
public:
    AlgebraElement reduce(AlgebraElement e) const
    {
        while (!e.is_zero()) {
            const auto& [b, c] = *e.terms().rbegin();
            auto it = rows_.find(b);
            if (it == rows_.end()) break;
            e -= Rational(c) * it->second;
        }
        return e;
    }

    bool insert(const AlgebraElement& e)
    {
        AlgebraElement r = reduce(e);
        if (r.is_zero()) return false;
        BasisVector lead = r.terms().rbegin()->first;
        Rational inv = Rational(1) / r.terms().rbegin()->second;
        rows_.emplace(lead, inv * r);
        return true;
    }

    bool contains(const AlgebraElement& e) const { return reduce(e).is_zero(); }
    std::size_t dim() const { return rows_.size(); }

private:
    std::map<BasisVector, AlgebraElement> rows_;
};

} // namespace

// ---------------------------------------------------------------------------

Polynomial reduce(const SpanBasis& s, Polynomial f)
{
    for (auto it = s.rows.rbegin(); it != s.rows.rend(); ++it) {
        Rational c = f.coeff(*it->degree());
        if (!c.is_zero()) f.add_scaled(*it, -c);
    }
    return f;
}

bool contains_one(const SpanBasis& s) { return reduce(s, Polynomial::constant(1)).is_zero(); }

bool in_t_omega(const SpanBasis& s)
{
    return std::all_of(s.rows.begin(), s.rows.end(), [](const Polynomial& r) { return r.coeff(0).is_zero(); });
}

std::vector<BasisVector> generating_set(const AlgebraParams& ap, int i_range)
{
    std::vector<BasisVector> out;
    const bool with_h1 = kappa_active(ap);
    for (int i = -i_range; i <= i_range; ++i) {
        out.push_back(BasisVector::L(i, 0));
        out.push_back(BasisVector::L(i, 1));
        out.push_back(BasisVector::H(i, 0));
        if (with_h1) out.push_back(BasisVector::H(i, 1));
    }
    return out;
}

SpanBasis submodule_saturation(const Module& mod, const Polynomial& seed, const std::vector<BasisVector>& generators,
                               std::optional<int> degree_cap, int iter_cap)
{
    if (seed.is_zero()) throw ConfigError("saturation seed must be nonzero");
    const int cap = degree_cap.value_or(*seed.degree() + 3);
    if (cap < *seed.degree()) throw ConfigError("degree_cap is below the degree of the seed");
    if (iter_cap <= 0) throw ConfigError("iter_cap must be positive");

    SpanBasis s;
    s.degree_cap = cap;
    s.iter_cap = iter_cap;

    std::vector<Polynomial> raw{seed};
    s.words.emplace_back();
    Echelon ech;
    ech.insert(seed, {{0, Rational(1)}});

    std::vector<int> frontier{0};
    while (!frontier.empty() && s.iterations < iter_cap) {
        ++s.iterations;
        std::vector<int> next;
        for (int idx : frontier) {
            for (const auto& g : generators) {
                Polynomial v = act_basis(mod, g, raw[static_cast<std::size_t>(idx)]);
                if (v.is_zero() || *v.degree() > cap) continue;
                const int cand = static_cast<int>(raw.size());
                Polynomial r = v;
                std::map<int, Rational> combo{{cand, Rational(1)}};
                ech.reduce(r, &combo);
                if (r.is_zero()) continue;
                raw.push_back(std::move(v));
                auto word = s.words[static_cast<std::size_t>(idx)];
                word.push_back(g);
                s.words.push_back(std::move(word));
                ech.insert(std::move(r), std::move(combo));
                next.push_back(cand);
            }
        }
        frontier = std::move(next);
    }
    s.saturated = frontier.empty();
    ech.export_to(s);
    return s;
}

Polynomial replay_row(const Module& mod, const Polynomial& seed, const SpanBasis& s, std::size_t n)
{
    Polynomial out;
    for (const auto& [k, c] : s.combos.at(n)) {
        Polynomial p = seed;
        for (const auto& g : s.words.at(static_cast<std::size_t>(k))) p = act_basis(mod, g, p);
        out.add_scaled(p, c);
    }
    return out;
}

bool is_simple_expected(const AlgebraParams& ap, const ModuleParams& mp)
{
    if (!mp.alpha.is_zero()) return true;
    if (gamma_active(ap) && !mp.gamma.is_zero()) return true;
    return kappa_active(ap) && !mp.kappa.all_zero();
}

Report check_t_submodule(const Module& mod, const CheckWindow& w)
{
    const ModuleParams& p = mod.params();
    if (!p.alpha.is_zero() || !p.gamma.is_zero() || !p.kappa.all_zero())
        throw ConfigError("the t-submodule check needs alpha = gamma = 0 and kappa = 0");

    Report rep{"t_submodule", {}, {}};
    const auto basis = basis_box(w.i_min, w.i_max, w.m_max);
    ReportEntry mono{"x.t^k in tQ[t] for 1 <= k <= " + std::to_string(w.deg_max), mod.str(), true, 0, {}, "proof"};
    ReportEntry one{"x.1 in tQ[t] (zero action on the quotient)", mod.str(), true, 0, {}, "proof"};
    for (const auto& x : basis) {
        for (int k = 0; k <= w.deg_max; ++k) {
            Polynomial r = act_basis(mod, x, Polynomial::monomial(k));
            ReportEntry& e = k == 0 ? one : mono;
            ++e.cases;
            if (!r.coeff(0).is_zero() && e.passed) {
                e.passed = false;
                e.witness = x.str() + ".t^" + std::to_string(k) + " = " + r.str();
            }
        }
    }
    rep.entries.push_back(std::move(mono));
    rep.entries.push_back(std::move(one));
    return rep;
}

ProbeResult probe_simplicity(const Module& mod, const Polynomial& seed, std::optional<int> degree_cap, int iter_cap,
                             std::uint64_t rng_seed, int replay_rows)
{
    ProbeResult out;
    out.seed = seed;
    out.span = submodule_saturation(mod, seed, generating_set(mod.algebra()), degree_cap, iter_cap);
    out.report = Report{"probe", {}, rng_seed};

    const SpanBasis& s = out.span;
    const bool simple = is_simple_expected(mod.algebra(), mod.params());
    const bool seed_in_t = seed.coeff(0).is_zero();
    const bool found = contains_one(s);
    const std::string inputs = mod.str() + ",seed=" + seed.str() + ",degree_cap=" + std::to_string(s.degree_cap)
                             + ",iter_cap=" + std::to_string(s.iter_cap);

    ReportEntry claim;
    claim.inputs = inputs;
    claim.cases = s.dim();
    if (!seed_in_t || simple) {
        claim.check = seed_in_t ? "1 in <seed> (module predicted simple)" : "1 in <seed> (seed outside tQ[t])";
        claim.passed = found;
        claim.evidence = found ? "proof" : "bounded-evidence";
        if (!found) {
            claim.witness = "1 not reached; span dim " + std::to_string(s.dim()) + (s.saturated ? ", saturated" : ", caps exhausted")
                          + (in_t_omega(s) ? ", span inside tQ[t]" : "");
        }
    } else {
        claim.check = "<seed> stays inside tQ[t] (module predicted not simple)";
        claim.passed = in_t_omega(s);
        claim.evidence = "bounded-evidence";
        if (!claim.passed) claim.witness = "a row with nonzero constant term";
    }
    out.report.entries.push_back(std::move(claim));

    std::vector<std::size_t> idx(s.dim());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::mt19937_64 rng(rng_seed);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(std::min(idx.size(), static_cast<std::size_t>(std::max(replay_rows, 0))));
    std::sort(idx.begin(), idx.end());
    ReportEntry replay{"rows replay from seed through recorded generator words", inputs, true, 0, {}, "proof"};
    for (std::size_t n : idx) {
        ++replay.cases;
        Polynomial r = replay_row(mod, seed, s, n);
        if (r != s.rows[n] && replay.passed) {
            replay.passed = false;
            replay.witness = "row " + std::to_string(n) + ": stored " + s.rows[n].str() + ", replayed " + r.str();
        }
    }
    out.report.entries.push_back(std::move(replay));
    return out;
}

// ---------------------------------------------------------------------------

ActionOracle make_oracle(const Module& mod)
{
    ActionOracle o;
    o.act = [mod](const BasisVector& x, const Polynomial& f) { return act_basis(mod, x, f); };
    const KappaTable& k = mod.params().kappa;
    if (kappa_active(mod.algebra()) && !k.empty()) o.kappa_window = std::make_pair(k.lo(), k.hi());
    return o;
}

ModuleParams recover_parameters(const AlgebraParams& ap, const ActionOracle& oracle)
{
    if (!oracle.act) throw ConfigError("malformed oracle: no action");
    const Polynomial one = Polynomial::constant(1);
    auto constant_of = [&](const BasisVector& x) {
        Polynomial r = oracle.act(x, one);
        if (r.degree().value_or(0) != 0) throw ConfigError("malformed oracle: " + x.str() + ".1 = " + r.str() + " is not constant");
        return r.coeff(0);
    };

    ModuleParams mp;
    Polynomial l10 = oracle.act(BasisVector::L(1, 0), one);
    if (l10.degree() != 1) throw ConfigError("malformed oracle: L[1,0].1 = " + l10.str() + " is not of degree 1");
    mp.lambda = l10.coeff(1);
    mp.alpha = -l10.coeff(0) / mp.lambda;

    Polynomial l01 = oracle.act(BasisVector::L(0, 1), one);
    if (l01.degree().value_or(0) > 1) throw ConfigError("malformed oracle: L[0,1].1 = " + l01.str() + " has degree above 1");
    mp.beta = l01.coeff(1);
    const Rational expected0 = ap.epsilon == 1 ? mp.alpha : -mp.alpha * mp.beta * mp.beta;
    if (l01.coeff(0) != expected0)
        throw ConfigError("malformed oracle: L[0,1].1 = " + l01.str() + " is inconsistent with L[1,0].1 = " + l10.str());

    if (gamma_active(ap)) mp.gamma = constant_of(BasisVector::H(0, 0));
    if (kappa_active(ap) && oracle.kappa_window) {
        const auto [lo, hi] = *oracle.kappa_window;
        if (lo > hi) throw ConfigError("malformed oracle: empty kappa window");
        std::vector<Rational> v;
        for (int i = lo; i <= hi; ++i) v.push_back(constant_of(BasisVector::H(i, 1)));
        mp.kappa = KappaTable(lo, std::move(v));
    }
    return mp;
}

// ---------------------------------------------------------------------------

Report generation_closure(const AlgebraParams& ap, const std::vector<BasisVector>& generators,
                          const std::vector<BasisVector>& targets, int depth_cap, int i_bound, int m_bound)
{
    auto in_box = [&](const AlgebraElement& e) {
        return std::all_of(e.terms().begin(), e.terms().end(),
                           [&](const auto& t) { return std::abs(t.first.i) <= i_bound && t.first.m <= m_bound; });
    };

    ElementEchelon ech;
    std::vector<AlgebraElement> elems; // as produced, kept sparse for bracketing
    for (const auto& g : generators)
        if (in_box(g) && ech.insert(g)) elems.emplace_back(g);

    std::size_t level_start = 0;
    int depth = 0;
    for (; depth < depth_cap; ++depth) {
        const std::size_t level_end = elems.size();
        for (std::size_t v = level_start; v < level_end; ++v) {
            for (std::size_t u = 0; u < level_end; ++u) {
                if (u >= level_start && u >= v) continue; // each new pair once
                AlgebraElement e = bracket(ap, elems[u], elems[v]);
                if (e.is_zero() || !in_box(e)) continue;
                if (ech.insert(e)) elems.push_back(std::move(e));
            }
        }
        if (elems.size() == level_end) break;
        level_start = level_end;
    }

    Report rep{"generation_closure", {}, {}};
    const std::string inputs = ap.str() + ",generators=" + std::to_string(generators.size()) + ",depth_cap="
                             + std::to_string(depth_cap) + ",box=|i|<=" + std::to_string(i_bound) + ",m<=" + std::to_string(m_bound)
                             + ",span_dim=" + std::to_string(ech.dim());
    for (const auto& t : targets) {
        ReportEntry e;
        e.check = "reach " + t.str();
        e.inputs = inputs;
        e.cases = 1;
        e.passed = ech.contains(t);
        e.evidence = e.passed ? "proof" : "bounded-evidence";
        if (!e.passed) e.witness = t.str() + " not in the closure";
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

Report check_generating_set(const AlgebraParams& ap, int depth_cap, int gen_range)
{
    std::vector<BasisVector> targets;
    for (Kind k : {Kind::L, Kind::H})
        for (int i = -2; i <= 2; ++i)
            for (int m = 0; m <= 3; ++m) targets.emplace_back(k, i, m);

    Report rep = generation_closure(ap, generating_set(ap, gen_range), targets, depth_cap, gen_range + 1, 4);
    rep.suite = "generating_set";

    if (kappa_active(ap)) {
        std::vector<BasisVector> smaller;
        for (int i = -2; i <= 2; ++i) {
            smaller.push_back(BasisVector::L(i, 0));
            smaller.push_back(BasisVector::L(i, 1));
            smaller.push_back(BasisVector::H(i, 0));
        }
        Report neg = generation_closure(ap, smaller, {BasisVector::H(0, 1)}, 3, gen_range + 1, 4);
        ReportEntry e = neg.entries.front();
        e.check = "H[0,1] not reached without H[i,1] (depth 3)";
        e.passed = e.evidence == "bounded-evidence";
        e.witness = e.passed ? "" : "H[0,1] reached";
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

} // namespace hv
