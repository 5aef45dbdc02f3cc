#include "hv/errors.hpp"
#include "hv/structure_probe.hpp"
#include "support/gen.hpp"

#include <gtest/gtest.h>

using namespace hv;

namespace {

Polynomial P(const char* s) { return Polynomial::parse(s); }

KappaTable kappa_window(int lo, int hi, std::map<int, Rational> nonzero = {})
{
    std::vector<Rational> v;
    for (int i = lo; i <= hi; ++i) v.push_back(nonzero.count(i) ? nonzero[i] : Rational(0));
    return KappaTable(lo, v);
}

Module make(AlgebraParams ap, Rational lambda, Rational alpha, Rational beta, Rational gamma = 0, KappaTable kappa = {})
{
    ModuleParams mp;
    mp.lambda = lambda;
    mp.alpha = alpha;
    mp.beta = beta;
    mp.gamma = gamma;
    mp.kappa = std::move(kappa);
    return Module(ap, mp);
}

SpanBasis span_of(std::vector<Polynomial> rows)
{
    SpanBasis s;
    s.rows = std::move(rows);
    return s;
}

} // namespace

TEST(Span, ContainsOne)
{
    EXPECT_TRUE(contains_one(span_of({P("1"), P("t")})));
    EXPECT_FALSE(contains_one(span_of({P("t"), P("t^2")})));
    EXPECT_TRUE(in_t_omega(span_of({P("t"), P("t^2")})));
    EXPECT_EQ(reduce(span_of({P("1"), P("t")}), P("3t^2 + t + 4")), P("3t^2"));
}

TEST(Saturation, TrivialParametersStayInTOmega)
{
    for (int eps : {1, -1}) {
        Module m = eps == 1 ? make({0, 0, 1}, 2, 0, Rational(1, 2)) : make({0, 1, -1}, 2, 0, Rational(1, 2), 0, kappa_window(-3, 3));
        SpanBasis s = submodule_saturation(m, P("t"), generating_set(m.algebra()));
        EXPECT_TRUE(in_t_omega(s));
        EXPECT_FALSE(contains_one(s));
        EXPECT_TRUE(s.saturated);
    }
}

TEST(Saturation, KappaFindsOneFromQuadraticSeed)
{
    Module m = make({0, 1, -1}, 1, 0, 1, 0, kappa_window(-3, 3, {{1, 1}}));
    SpanBasis s = submodule_saturation(m, P("t^2 + 1"), generating_set(m.algebra()));
    EXPECT_TRUE(contains_one(s));
}

TEST(Saturation, AlphaFindsOneFromT)
{
    for (int eps : {1, -1}) {
        Module m = make({0, 0, eps}, 1, 1, 1);
        EXPECT_TRUE(contains_one(submodule_saturation(m, P("t"), generating_set(m.algebra()))));
    }
}

// The simplicity predicate counts kappa != 0, but for eps = -1, b = 1 the
// constant term of H_{i,m}.f is a multiple of f(0): tQ[t] stays invariant.
TEST(Saturation, KappaOnlyKeepsTOmegaInvariant)
{
    for (Rational a : {Rational(0), Rational(1, 2)}) {
        Module m = make({a, 1, -1}, 2, 0, 3, 0, kappa_window(-3, 3, {{-2, 4}, {1, 1}, {3, -5}}));
        ASSERT_TRUE(is_simple_expected(m.algebra(), m.params()));
        SpanBasis s = submodule_saturation(m, P("t"), generating_set(m.algebra()), 8);
        EXPECT_TRUE(in_t_omega(s));
        EXPECT_TRUE(s.saturated);
        CheckWindow w;
        w.deg_max = 6;
        w.m_max = 3;
        for (int k = 1; k <= 6; ++k)
            for (int i = -3; i <= 3; ++i)
                for (int mm = 0; mm <= 3; ++mm) EXPECT_TRUE(act_basis(m, BasisVector::H(i, mm), Polynomial::monomial(k)).coeff(0).is_zero());
    }
}

// Same for gamma at a = 0: with kappa = 0 only H_{0,0} acts, as gamma * id.
TEST(Saturation, GammaOnlyAZeroKeepsTOmegaInvariant)
{
    Module m = make({0, 1, -1}, 2, 0, 3, 7, kappa_window(-3, 3));
    ASSERT_TRUE(is_simple_expected(m.algebra(), m.params()));
    SpanBasis s = submodule_saturation(m, P("t"), generating_set(m.algebra()), 8);
    EXPECT_TRUE(in_t_omega(s));
    EXPECT_TRUE(s.saturated);
    EXPECT_EQ(act_basis(m, BasisVector::H(0, 0), P("t^2 - t")), P("7t^2 - 7t"));
}

TEST(Saturation, RowsAreMonicEchelon)
{
    Module m = make({Rational(1, 2), 1, 1}, 3, Rational(2, 3), -1, Rational(5, 2));
    SpanBasis s = submodule_saturation(m, P("t^3 - 2t + 5"), generating_set(m.algebra()));
    std::set<int> leads;
    for (const auto& r : s.rows) {
        EXPECT_EQ(r.leading(), Rational(1));
        EXPECT_TRUE(leads.insert(*r.degree()).second);
        for (const auto& other : s.rows) {
            if (&other != &r) {
                EXPECT_TRUE(other.coeff(*r.degree()).is_zero());
            }
        }
        EXPECT_LE(*r.degree(), s.degree_cap);
    }
}

TEST(Saturation, ReplayReproducesEveryRow)
{
    testgen::Gen g(31);
    for (int n = 0; n < 8; ++n) {
        Module m = make({Rational(1, 3), 0, n % 2 ? 1 : -1}, g.nonzero_rational(), g.rational(), g.rational(), g.rational());
        Polynomial seed = g.nonzero_polynomial(3);
        SpanBasis s = submodule_saturation(m, seed, generating_set(m.algebra(), 2));
        for (std::size_t r = 0; r < s.dim(); ++r) EXPECT_EQ(replay_row(m, seed, s, r), s.rows[r]);
    }
}

TEST(Saturation, Monotonicity)
{
    Module m = make({0, 2, 1}, 2, 0, 3);
    const Polynomial seed = P("t^2 - 3t");
    SpanBasis small = submodule_saturation(m, seed, generating_set(m.algebra(), 1), 3);
    SpanBasis capped = submodule_saturation(m, seed, generating_set(m.algebra(), 1), 5);
    SpanBasis wide = submodule_saturation(m, seed, generating_set(m.algebra(), 3), 5);
    for (const auto& r : small.rows) {
        EXPECT_TRUE(reduce(capped, r).is_zero());
        EXPECT_TRUE(reduce(wide, r).is_zero());
    }
    for (const auto& r : capped.rows) EXPECT_TRUE(reduce(wide, r).is_zero());
}

TEST(Saturation, BadArguments)
{
    Module m = make({0, 0, 1}, 1, 0, 1);
    EXPECT_THROW(submodule_saturation(m, Polynomial(), generating_set(m.algebra())), ConfigError);
    EXPECT_THROW(submodule_saturation(m, P("t^3"), generating_set(m.algebra()), 2), ConfigError);
    EXPECT_THROW(submodule_saturation(m, P("t"), generating_set(m.algebra()), 3, 0), ConfigError);
}

TEST(Saturation, IterCapIsReported)
{
    Module m = make({Rational(1, 2), 1, 1}, 3, Rational(2, 3), -1, Rational(5, 2));
    SpanBasis s = submodule_saturation(m, P("t^3"), generating_set(m.algebra()), 8, 1);
    EXPECT_EQ(s.iterations, 1);
    EXPECT_FALSE(s.saturated);
}

TEST(SimplePredicate, Examples)
{
    ModuleParams mp;
    EXPECT_FALSE(is_simple_expected({0, 2, 1}, mp));
    mp.gamma = 3;
    EXPECT_FALSE(is_simple_expected({0, 2, 1}, mp)); // gamma is not a parameter here
    mp.gamma = 0;
    mp.kappa = kappa_window(0, 3, {{3, 5}});
    EXPECT_TRUE(is_simple_expected({0, 1, -1}, mp));
    ModuleParams alpha;
    alpha.alpha = 7;
    for (int eps : {1, -1})
        for (Rational b : {Rational(0), Rational(1), Rational(2)}) EXPECT_TRUE(is_simple_expected({0, b, eps}, alpha));
}

TEST(TSubmodule, TrivialParametersPass)
{
    CheckWindow w;
    w.deg_max = 6;
    for (int eps : {1, -1})
        for (Rational b : {Rational(0), Rational(1), Rational(2)}) {
            KappaTable k = eps == -1 && b == Rational(1) ? kappa_window(-6, 6) : KappaTable{};
            Module m = make({Rational(1, 2), b, eps}, Rational(-2, 3), 0, Rational(5, 4), 0, k);
            Report r = check_t_submodule(m, w);
            EXPECT_TRUE(r.ok()) << m.str();
        }
    EXPECT_THROW(check_t_submodule(make({0, 0, 1}, 1, 1, 1), w), ConfigError);
}

TEST(Probe, ClaimLabels)
{
    Module simple = make({0, 0, 1}, 1, 1, 1);
    ProbeResult r = probe_simplicity(simple, P("t"));
    ASSERT_TRUE(r.report.ok());
    EXPECT_EQ(r.report.entries[0].evidence, "proof");

    Module trivial = make({0, 0, 1}, 1, 0, 1);
    ProbeResult n = probe_simplicity(trivial, P("t^2"));
    ASSERT_TRUE(n.report.ok());
    EXPECT_EQ(n.report.entries[0].evidence, "bounded-evidence");

    Module kappa_only = make({0, 1, -1}, 1, 0, 1, 0, kappa_window(-3, 3, {{1, 1}}));
    ProbeResult f = probe_simplicity(kappa_only, P("t"));
    EXPECT_FALSE(f.report.entries[0].passed);
    EXPECT_EQ(f.report.entries[0].evidence, "bounded-evidence");
}

TEST(Recover, Examples)
{
    Module m = make({0, 2, 1}, 2, 1, 3);
    EXPECT_EQ(recover_parameters(m.algebra(), make_oracle(m)), m.params());

    Module k = make({Rational(1, 2), 1, -1}, 3, 1, 2, Rational(1, 5), KappaTable(0, {1, -2}));
    ModuleParams got = recover_parameters(k.algebra(), make_oracle(k));
    EXPECT_EQ(got.kappa, KappaTable(0, {1, -2}));
    EXPECT_EQ(got, k.params());

    Module g1 = make({0, 0, 1}, 2, 1, 3, 4), g2 = make({0, 0, 1}, 2, 1, 3, 5);
    ModuleParams r1 = recover_parameters(g1.algebra(), make_oracle(g1)), r2 = recover_parameters(g2.algebra(), make_oracle(g2));
    EXPECT_NE(r1.gamma, r2.gamma);
    r1.gamma = r2.gamma;
    EXPECT_EQ(r1, r2);
}

TEST(Recover, RoundTripOnRandomTuples)
{
    testgen::Gen g(32);
    const std::pair<Rational, Rational> ab[] = {{0, 0}, {Rational(1, 2), 1}, {0, 1}, {Rational(1, 3), 2}};
    std::vector<ModuleParams> seen;
    for (int n = 0; n < 4; ++n)
        for (int eps : {1, -1})
            for (const auto& [a, b] : ab) {
                AlgebraParams ap(a, b, eps);
                ModuleParams mp;
                mp.lambda = g.nonzero_rational();
                mp.alpha = g.rational();
                mp.beta = g.rational();
                if (gamma_active(ap)) mp.gamma = g.rational();
                if (kappa_active(ap)) {
                    std::vector<Rational> v;
                    for (int i = 0; i < 5; ++i) v.push_back(g.rational());
                    mp.kappa = KappaTable(g.integer(-3, 0), v);
                }
                Module m(ap, mp);
                EXPECT_EQ(recover_parameters(ap, make_oracle(m)), mp) << m.str();
            }
}

TEST(Recover, MalformedOracle)
{
    AlgebraParams ap(0, 0, 1);
    ActionOracle bad;
    bad.act = [](const BasisVector&, const Polynomial& f) { return f; };
    EXPECT_THROW(recover_parameters(ap, bad), ConfigError);

    Module m = make(ap, 2, 1, 3, 1);
    ActionOracle skewed = make_oracle(m);
    auto inner = skewed.act;
    skewed.act = [inner](const BasisVector& x, const Polynomial& f) {
        Polynomial r = inner(x, f);
        if (x == BasisVector::L(0, 1)) r += Polynomial::constant(1);
        return r;
    };
    EXPECT_THROW(recover_parameters(ap, skewed), ConfigError);

    ActionOracle nonconstant = make_oracle(m);
    auto inner2 = nonconstant.act;
    nonconstant.act = [inner2](const BasisVector& x, const Polynomial& f) {
        Polynomial r = inner2(x, f);
        if (x.kind == Kind::H) r += Polynomial::monomial(1);
        return r;
    };
    EXPECT_THROW(recover_parameters(ap, nonconstant), ConfigError);
    EXPECT_THROW(recover_parameters(ap, ActionOracle{}), ConfigError);
}

TEST(Closure, Examples)
{
    Report r = generation_closure({0, 0, 1}, {BasisVector::L(-1, 1), BasisVector::L(1, 1)}, {BasisVector::L(0, 2)}, 1, 2, 3);
    EXPECT_TRUE(r.entries[0].passed);
    EXPECT_EQ(r.entries[0].evidence, "proof");

    Report h = generation_closure({Rational(1, 3), 0, 1}, {BasisVector::L(-1, 1), BasisVector::H(1, 0)}, {BasisVector::H(0, 1)}, 1, 2, 3);
    EXPECT_TRUE(h.entries[0].passed);

    std::vector<BasisVector> gens;
    for (int i = -2; i <= 2; ++i) {
        gens.push_back(BasisVector::L(i, 0));
        gens.push_back(BasisVector::L(i, 1));
        gens.push_back(BasisVector::H(i, 0));
    }
    Report n = generation_closure({Rational(1, 2), 1, -1}, gens, {BasisVector::H(0, 1)}, 3, 4, 4);
    EXPECT_FALSE(n.entries[0].passed);
    EXPECT_EQ(n.entries[0].evidence, "bounded-evidence");

    // Still out of reach with a deeper closure and a larger box.
    Report deeper = generation_closure({Rational(1, 2), 1, -1}, gens, {BasisVector::H(0, 1)}, 5, 5, 5);
    EXPECT_FALSE(deeper.entries[0].passed);
}

TEST(Closure, GeneratingSetsOnEveryBranch)
{
    for (int eps : {1, -1})
        for (auto [a, b] : {std::pair<Rational, Rational>{0, 0}, {Rational(1, 2), 1}, {0, 1}, {Rational(1, 3), 2}}) {
            Report r = check_generating_set({a, b, eps});
            for (const auto& e : r.entries) EXPECT_TRUE(e.passed) << e.check << " " << e.inputs;
        }
}
