#include "hv/algebra.hpp"
#include "hv/errors.hpp"
#include "support/gen.hpp"

#include <gtest/gtest.h>

using namespace hv;

namespace {

AlgebraElement E(const char* s) { return AlgebraElement::parse(s); }

bool no_zero_stored(const AlgebraElement& e)
{
    for (const auto& [b, c] : e.terms())
        if (c.is_zero()) return false;
    return true;
}

const AlgebraParams kGrid[] = {
    {0, 0, 1}, {Rational(1, 2), 1, 1}, {0, 1, 1}, {Rational(1, 3), 2, 1},
    {0, 0, -1}, {Rational(1, 2), 1, -1}, {0, 1, -1}, {Rational(1, 3), 2, -1},
};

} // namespace

TEST(AlgebraElement, ParseAndRender)
{
    EXPECT_EQ(E("L[1,0] + L[1,1]").str(), "L[1,1] + L[1,0]");
    EXPECT_EQ(E("3/2*H[1,1] - H[1,0]").str(), "3/2*H[1,1] - H[1,0]");
    EXPECT_EQ(E(" -2 * L[ -1 , 3 ] ").str(), "-2*L[-1,3]");
    EXPECT_EQ(E("L[0,0] - L[0,0]").str(), "0");
    EXPECT_TRUE(E("0").is_zero());
    EXPECT_THROW(E("L[0]"), ParseError);
    EXPECT_THROW(E("K[0,0]"), ParseError);
    EXPECT_THROW(E("L[0,-1]"), ParseError);

    testgen::Gen g(11);
    for (int n = 0; n < 200; ++n) {
        AlgebraElement e = g.element(4, 4, 4);
        EXPECT_EQ(E(e.str().c_str()), e) << e.str();
    }
}

TEST(Bracket, Examples)
{
    const AlgebraParams p1(Rational(1, 3), 2, 1), m1(Rational(1, 3), 2, -1);
    EXPECT_TRUE(bracket(p1, E("H[1,0]"), E("H[2,3]")).is_zero());
    EXPECT_EQ(bracket(p1, E("L[0,1]"), E("L[1,0]")), E("L[1,1] + L[1,0]"));
    EXPECT_EQ(bracket(m1, E("L[0,1]"), E("L[1,0]")), E("L[1,1] - L[1,2]"));
    EXPECT_EQ(bracket({Rational(1, 2), 1, 1}, E("L[1,0]"), E("H[0,1]")), E("3/2*H[1,1] - H[1,0]"));
    EXPECT_EQ(bracket(p1, E("2*L[1,0]"), E("L[2,0]")), E("2*L[3,0]"));
    EXPECT_TRUE(bracket(p1, AlgebraElement(), E("L[2,0]")).is_zero());
}

TEST(Bracket, GeneratingSetWitnesses)
{
    // [L_{-1,1}, L_{1,1}] = 2 L_{0,2}
    EXPECT_EQ(bracket({0, 0, 1}, E("L[-1,1]"), E("L[1,1]")), E("2*L[0,2]"));
    // [L_{-1,1}, H_{1,0}] = (a+1) H_{0,1} for b = 0
    EXPECT_EQ(bracket({Rational(1, 3), 0, 1}, E("L[-1,1]"), E("H[1,0]")), E("4/3*H[0,1]"));
}

TEST(Bracket, NegativeHeightTermsVanish)
{
    // eps = 1 lowers heights by one; the coefficient is zero exactly when the
    // target height would be negative.
    for (const auto& p : kGrid)
        for (int i = -3; i <= 3; ++i)
            for (int j = -3; j <= 3; ++j) {
                EXPECT_NO_THROW(bracket_basis(p, BasisVector::L(i, 0), BasisVector::L(j, 0)));
                EXPECT_NO_THROW(bracket_basis(p, BasisVector::L(i, 0), BasisVector::H(j, 0)));
            }
}

TEST(Bracket, AlternatingAndBilinear)
{
    testgen::Gen g(12);
    for (const auto& p : kGrid)
        for (int n = 0; n < 40; ++n) {
            AlgebraElement x = g.element(3, 3, 3), y = g.element(3, 3, 3), z = g.element(3, 3, 3);
            Rational c = g.rational();
            EXPECT_TRUE(bracket(p, x, x).is_zero());
            EXPECT_EQ(bracket(p, x + c * y, z), bracket(p, x, z) + c * bracket(p, y, z));
            AlgebraElement jac = bracket(p, x, bracket(p, y, z)) + bracket(p, y, bracket(p, z, x)) + bracket(p, z, bracket(p, x, y));
            EXPECT_TRUE(jac.is_zero()) << p.str() << " " << jac.str();
            EXPECT_TRUE(no_zero_stored(bracket(p, x, y)));
            EXPECT_TRUE(no_zero_stored(x + y - x));
        }
}

TEST(Shift, Examples)
{
    EXPECT_EQ(shift_isomorphism(2, E("H[3,1]")), E("H[1,1]"));
    EXPECT_EQ(shift_isomorphism(0, E("L[1,2] + H[0,0]")), E("L[1,2] + H[0,0]"));
    EXPECT_EQ(shift_isomorphism(1, E("L[5,2] + H[0,0]")), E("L[5,2] + H[-1,0]"));
}

TEST(Shift, RandomElementsAreHomomorphic)
{
    testgen::Gen g(13);
    for (const auto& p : kGrid)
        for (int k = -2; k <= 2; ++k) {
            AlgebraParams q(p.a + Rational(k), p.b, p.epsilon);
            for (int n = 0; n < 20; ++n) {
                AlgebraElement x = g.element(3, 3, 3), y = g.element(3, 3, 3);
                EXPECT_EQ(shift_isomorphism(k, bracket(p, x, y)), bracket(q, shift_isomorphism(k, x), shift_isomorphism(k, y)));
            }
        }
}

TEST(Realization, Examples)
{
    DiffOperator a;
    a.add_term(0, 0, -1);
    EXPECT_EQ(realize_L(1, BasisVector::L(0, 0)), a);
    DiffOperator b;
    b.add_term(-2, 1, -1);
    EXPECT_EQ(realize_L(1, BasisVector::L(2, 1)), b);
    DiffOperator c;
    c.add_term(1, 0, 1);
    EXPECT_EQ(realize_L(-1, BasisVector::L(1, 0)), c);
    EXPECT_THROW(realize_L(1, BasisVector::H(0, 0)), std::invalid_argument);
}

TEST(Realization, CommutatorExamples)
{
    auto R = [](int eps, int i, int m) { return realize_L(eps, BasisVector::L(i, m)); };
    EXPECT_TRUE(op_commutator(1, R(1, 2, 1), R(1, 2, 1)).is_zero());
    EXPECT_EQ(op_commutator(1, R(1, 0, 1), R(1, 1, 0)), realize(1, E("L[1,1] + L[1,0]")));
    EXPECT_EQ(op_commutator(-1, R(-1, 0, 0), R(-1, 1, 0)), realize(-1, E("L[1,0]")));
}

namespace {

// The derivation with x^2 d/dx in place of x d/dx.
DiffOperator literal_commutator(int eps, const DiffOperator& A, const DiffOperator& B)
{
    auto derive = [eps](const DiffOperator& f) {
        DiffOperator out;
        for (const auto& [k, c] : f.terms()) {
            out.add_term(k.first + 1, k.second, c * Rational(k.first));
            if (k.second != 0) out.add_term(k.first, k.second - eps, c * Rational(k.second));
        }
        return out;
    };
    auto times = [](const DiffOperator& f, const DiffOperator& g) {
        DiffOperator out;
        for (const auto& [fk, fc] : f.terms())
            for (const auto& [gk, gc] : g.terms()) out.add_term(fk.first + gk.first, fk.second + gk.second, fc * gc);
        return out;
    };
    DiffOperator out = times(A, derive(B));
    const DiffOperator back = times(B, derive(A));
    for (const auto& [k, c] : back.terms()) out.add_term(k.first, k.second, -c);
    return out;
}

} // namespace

TEST(Realization, LiteralSquareDerivationDoesNotReproduceBrackets)
{
    for (int eps : {1, -1}) {
        const AlgebraParams p(0, 0, eps);
        int mismatches = 0;
        for (int i = -2; i <= 2; ++i)
            for (int j = -2; j <= 2; ++j)
                if (i != j) {
                    auto x = BasisVector::L(i, 0), y = BasisVector::L(j, 0);
                    if (literal_commutator(eps, realize_L(eps, x), realize_L(eps, y)) != realize(eps, bracket_basis(p, x, y))) ++mismatches;
                }
        EXPECT_GT(mismatches, 0) << "eps=" << eps;
    }
}

TEST(DiffOperator, RejectsNegativeTExponent)
{
    DiffOperator d;
    EXPECT_THROW(d.add_term(0, -1, 1), std::logic_error);
    d.add_term(0, 0, 0);
    EXPECT_TRUE(d.is_zero());
}

TEST(AlgebraParams, Validation)
{
    EXPECT_THROW(AlgebraParams(0, 0, 2), ConfigError);
    EXPECT_NO_THROW(AlgebraParams(Rational(7, 2), 0, -1));
    EXPECT_THROW(BasisVector(Kind::L, 0, -1), std::invalid_argument);
}
