#include "hv/module_action.hpp"

#include "hv/errors.hpp"

#include <algorithm>

namespace hv {

KappaTable::KappaTable(int lo, std::vector<Rational> values) : lo_(lo), values_(std::move(values)) {}

KappaTable KappaTable::from_map(const std::map<int, Rational>& entries)
{
    if (entries.empty()) return {};
    int lo = entries.begin()->first;
    std::vector<Rational> v;
    int expect = lo;
    for (const auto& [i, q] : entries) {
        if (i != expect) throw ConfigError("kappa indices must be contiguous (missing " + std::to_string(expect) + ")");
        v.push_back(q);
        ++expect;
    }
    return KappaTable(lo, std::move(v));
}

const Rational& KappaTable::at(int i) const
{
    if (!covers(i)) {
        std::string window = empty() ? "empty" : "[" + std::to_string(lo()) + "," + std::to_string(hi()) + "]";
        throw ConfigError("kappa_" + std::to_string(i) + " requested outside the declared window " + window);
    }
    return values_[static_cast<std::size_t>(i - lo_)];
}

bool KappaTable::all_zero() const
{
    return std::all_of(values_.begin(), values_.end(), [](const Rational& q) { return q.is_zero(); });
}

std::string ModuleParams::str() const
{
    std::string out = "lambda=" + lambda.str() + ",alpha=" + alpha.str() + ",beta=" + beta.str() + ",gamma=" + gamma.str();
    if (!kappa.empty()) {
        out += ",kappa[" + std::to_string(kappa.lo()) + ".." + std::to_string(kappa.hi()) + "]={";
        for (std::size_t n = 0; n < kappa.values().size(); ++n) out += (n ? "," : "") + kappa.values()[n].str();
        out += "}";
    }
    return out;
}

HBranch h_branch(const AlgebraParams& ap)
{
    if (ap.b.is_zero()) return HBranch::BZero;
    if (ap.b == Rational(1)) return ap.a.is_zero() ? HBranch::BOneAZero : HBranch::BOneANonzero;
    return HBranch::Generic;
}

bool gamma_active(const AlgebraParams& ap)
{
    HBranch br = h_branch(ap);
    if (ap.epsilon == 1) return br == HBranch::BZero || br == HBranch::BOneANonzero;
    return br != HBranch::Generic;
}

bool kappa_active(const AlgebraParams& ap)
{
    return ap.epsilon == -1 && ap.b == Rational(1);
}

Module::Module(AlgebraParams ap, ModuleParams mp)
{
    if (mp.lambda.is_zero()) throw ConfigError("lambda must be nonzero");
    if (ap.a.sign() < 0 || ap.a >= Rational(1)) throw ConfigError("module construction requires 0 <= a < 1, got a=" + ap.a.str());
    if (!gamma_active(ap) && !mp.gamma.is_zero())
        throw ConfigError("gamma is not a parameter for " + ap.str() + " and must be zero");
    if (!kappa_active(ap) && !mp.kappa.empty())
        throw ConfigError("kappa is not a parameter for " + ap.str() + " and must be empty");
    ap_ = std::move(ap);
    mp_ = std::move(mp);
    branch_ = h_branch(ap_);
}

Module Module::unvalidated(AlgebraParams ap, ModuleParams mp)
{
    if (mp.lambda.is_zero()) throw ConfigError("lambda must be nonzero");
    Module m;
    m.ap_ = std::move(ap);
    m.mp_ = std::move(mp);
    m.branch_ = h_branch(m.ap_);
    return m;
}

std::string Module::str() const { return ap_.str() + "," + mp_.str(); }

// ---------------------------------------------------------------------------

Rational phi(int i, const Rational& a, const Rational& b)
{
    if (b.is_zero()) return 1;
    if (b == Rational(1)) {
        if (a.is_zero()) return i == 0 ? 1 : 0;
        Rational d = a + Rational(i);
        if (d.is_zero()) throw DomainError("phi: a + i = 0");
        return a / d;
    }
    return 0;
}

Rational varphi(int i, int m, const Rational& a, const ModuleParams& mp)
{
    if (a.is_zero()) throw DomainError("varphi requires a != 0");
    const Rational ai = a + Rational(i);
    if (ai.is_zero()) throw DomainError("varphi: a + i = 0");
    const Rational lam_i = int_pow(mp.lambda, i);
    if (m == 0) return a / ai * lam_i * mp.gamma;

    Rational out = int_pow(Rational(-1), m - 1) / factorial(m - 1) * int_pow(ai, m - 1) * mp.kappa.at(i);
    for (int l = 0; l <= m - 2; ++l) {
        out += factorial(m - l - 2) / factorial(m - 1) * int_pow(Rational(-1), l) * int_pow(ai, l) * a * lam_i
             * int_pow(mp.beta, m - l - 1) * mp.gamma;
    }
    return out;
}

Rational psi(int i, int m, const ModuleParams& mp)
{
    if (m == 0) return i == 0 ? mp.gamma : Rational(0);
    return int_pow(Rational(-i), m - 1) / factorial(m - 1) * mp.kappa.at(i);
}

namespace {

// g_s(t) = f^{(s)}(t - c) for s = 0..deg f.
std::vector<Polynomial> shifted_derivatives(const Polynomial& f, const Rational& c)
{
    std::vector<Polynomial> out;
    const int d = f.degree().value_or(-1);
    for (int s = 0; s <= d; ++s) out.push_back(shift(derivative_n(f, s), c));
    return out;
}

Polynomial act_L(const Module& mod, int i, int m, const Polynomial& f)
{
    const ModuleParams& p = mod.params();
    const Rational lam_i = int_pow(p.lambda, i);
    const Rational ii(i);
    auto g = shifted_derivatives(f, ii);
    const int d = static_cast<int>(g.size()) - 1;
    Polynomial out;
    if (mod.epsilon() == 1) {
        for (int s = 0; s <= std::min(m, d); ++s) {
            // beta^{m-s} (t - i alpha) + (m-s) alpha beta^{m-s-1}; the second
            // term only exists for m - s >= 1, so no negative power of beta.
            Polynomial factor = Polynomial::linear_root(ii * p.alpha) * int_pow(p.beta, m - s);
            if (m - s >= 1) factor += Polynomial::constant(Rational(m - s) * p.alpha * int_pow(p.beta, m - s - 1));
            out += (gen_binomial(m, s) * lam_i) * (factor * g[static_cast<std::size_t>(s)]);
        }
    } else {
        for (int s = 0; s <= d; ++s) {
            Rational c = gen_binomial(-m, s) * lam_i * int_pow(p.beta, m + s);
            if (c.is_zero()) continue;
            Polynomial factor = Polynomial::linear_root(ii * p.alpha + Rational(m + s) * p.alpha * p.beta);
            out += c * (factor * g[static_cast<std::size_t>(s)]);
        }
    }
    return out;
}

Polynomial act_H(const Module& mod, int i, int m, const Polynomial& f)
{
    const AlgebraParams& ap = mod.algebra();
    const ModuleParams& p = mod.params();
    const HBranch br = mod.branch();
    if (br == HBranch::Generic) return {};
    if (mod.epsilon() == 1 && br == HBranch::BOneAZero) return {};

    const Rational lam_i = int_pow(p.lambda, i);
    const Rational shift_by = br == HBranch::BOneAZero ? Rational(i) : ap.a + Rational(i);
    auto g = shifted_derivatives(f, shift_by);
    const int d = static_cast<int>(g.size()) - 1;
    Polynomial out;

    if (mod.epsilon() == 1) {
        const int top = std::min(m, d);
        if (br == HBranch::BZero) {
            for (int s = 0; s <= top; ++s)
                out.add_scaled(g[static_cast<std::size_t>(s)], gen_binomial(m, s) * lam_i * int_pow(p.beta, m - s) * p.gamma);
        } else { // b = 1, a != 0
            const Rational ai = ap.a + Rational(i);
            if (ai.is_zero()) throw DomainError("H action: a + i = 0");
            for (int s = 0; s <= top; ++s) {
                Rational c;
                for (int l = 0; l <= m - s; ++l)
                    c += factorial(m - s) / factorial(m - s - l) * ap.a * lam_i * int_pow(p.beta, m - s - l) * p.gamma
                       / int_pow(ai, l + 1);
                out.add_scaled(g[static_cast<std::size_t>(s)], gen_binomial(m, s) * c);
            }
        }
        return out;
    }

    for (int s = 0; s <= d; ++s) {
        const Rational bin = gen_binomial(-m, s);
        if (bin.is_zero()) continue;
        Rational c;
        switch (br) {
        case HBranch::BZero: c = lam_i * int_pow(p.beta, m + s) * p.gamma; break;
        case HBranch::BOneANonzero: c = varphi(i, m + s, ap.a, p); break;
        case HBranch::BOneAZero: c = psi(i, m + s, p); break;
        case HBranch::Generic: break;
        }
        out.add_scaled(g[static_cast<std::size_t>(s)], bin * c);
    }
    return out;
}

// (t - c)^n by repeated multiplication.
Polynomial power_of_linear(const Rational& c, int n)
{
    Polynomial out = Polynomial::constant(1);
    const Polynomial lin = Polynomial::linear_root(c);
    for (int e = 0; e < n; ++e) out = out * lin;
    return out;
}

} // namespace

Polynomial act_basis(const Module& mod, const BasisVector& x, const Polynomial& f)
{
    if (f.is_zero()) return {};
    return x.kind == Kind::L ? act_L(mod, x.i, x.m, f) : act_H(mod, x.i, x.m, f);
}

Polynomial act(const Module& mod, const AlgebraElement& x, const Polynomial& f)
{
    Polynomial out;
    for (const auto& [b, c] : x.terms()) out.add_scaled(act_basis(mod, b, f), c);
    return out;
}

Polynomial act_monomial(const Module& mod, const BasisVector& x, int k)
{
    const AlgebraParams& ap = mod.algebra();
    const ModuleParams& p = mod.params();
    const int i = x.i, m = x.m;
    const Rational ii(i);
    const Rational lam_i = int_pow(p.lambda, i);
    Polynomial out;

    if (x.kind == Kind::L) {
        if (mod.epsilon() == 1) {
            for (int s = 0; s <= std::min(m, k); ++s) {
                Rational c = factorial(s) * gen_binomial(m, s) * gen_binomial(k, s) * lam_i;
                // beta^{m-s-1} ((m-s) alpha - i alpha beta + beta t), written without beta^{-1}
                Polynomial lin({-ii * p.alpha * int_pow(p.beta, m - s), int_pow(p.beta, m - s)});
                if (m - s >= 1) lin += Polynomial::constant(Rational(m - s) * p.alpha * int_pow(p.beta, m - s - 1));
                out += c * (lin * power_of_linear(ii, k - s));
            }
        } else {
            for (int s = 0; s <= k; ++s) {
                Rational c = int_pow(Rational(-1), s) * factorial(s) * gen_binomial(m + s - 1, s) * gen_binomial(k, s) * lam_i
                           * int_pow(p.beta, m + s);
                if (c.is_zero()) continue;
                Polynomial lin({-ii * p.alpha - Rational(m + s) * p.alpha * p.beta, Rational(1)});
                out += c * (lin * power_of_linear(ii, k - s));
            }
        }
        return out;
    }

    const HBranch br = mod.branch();
    if (br == HBranch::Generic) return out;
    if (mod.epsilon() == 1) {
        if (br == HBranch::BOneAZero) return out;
        const Rational center = ap.a + ii;
        for (int s = 0; s <= std::min(m, k); ++s) {
            Rational c;
            if (br == HBranch::BZero) {
                c = factorial(s) * gen_binomial(m, s) * gen_binomial(k, s) * lam_i * int_pow(p.beta, m - s) * p.gamma;
            } else {
                for (int l = 0; l <= m - s; ++l)
                    c += factorial(s) * factorial(m - s) / factorial(m - s - l) * gen_binomial(m, s) * gen_binomial(k, s) * ap.a
                       * lam_i * int_pow(p.beta, m - s - l) * p.gamma / int_pow(center, l + 1);
            }
            out.add_scaled(power_of_linear(center, k - s), c);
        }
        return out;
    }

    const Rational center = br == HBranch::BOneAZero ? ii : ap.a + ii;
    for (int s = 0; s <= k; ++s) {
        Rational c = int_pow(Rational(-1), s) * factorial(s) * gen_binomial(m + s - 1, s) * gen_binomial(k, s);
        if (c.is_zero()) continue;
        switch (br) {
        case HBranch::BZero: c *= lam_i * int_pow(p.beta, m + s) * p.gamma; break;
        case HBranch::BOneANonzero: c *= varphi(i, m + s, ap.a, p); break;
        case HBranch::BOneAZero: c *= psi(i, m + s, p); break;
        case HBranch::Generic: break;
        }
        out.add_scaled(power_of_linear(center, k - s), c);
    }
    return out;
}

Rational h_on_one(const Module& mod, int i, int m)
{
    const AlgebraParams& ap = mod.algebra();
    const ModuleParams& p = mod.params();
    const HBranch br = mod.branch();
    const Rational lam_i = int_pow(p.lambda, i);
    if (br == HBranch::BZero) return lam_i * int_pow(p.beta, m) * p.gamma;
    if (br == HBranch::Generic) return 0;
    if (mod.epsilon() == 1) {
        if (br == HBranch::BOneAZero) return 0;
        const Rational ai = ap.a + Rational(i);
        if (ai.is_zero()) throw DomainError("H_on_one: a + i = 0");
        Rational sum;
        for (int l = 0; l <= m; ++l) sum += factorial(l) * gen_binomial(m, l) * int_pow(p.beta, m - l) / int_pow(ai, l + 1);
        return ap.a * lam_i * p.gamma * sum;
    }
    return br == HBranch::BOneANonzero ? varphi(i, m, ap.a, p) : psi(i, m, p);
}

Rational prop41_lhs(int s, const Rational& A, const Rational& beta)
{
    Rational out;
    const Rational s_fact = factorial(s);
    for (int l = 0; l <= s - 1; ++l)
        out += factorial(s - l - 1) / s_fact * int_pow(Rational(-1), s + l) * int_pow(A, l + 1) * int_pow(beta, s - l);
    for (int l = 0; l <= s; ++l)
        out += factorial(s - l) / s_fact * int_pow(Rational(-1), s + l) * int_pow(A, l) * int_pow(beta, s - l + 1);
    return out;
}

} // namespace hv
