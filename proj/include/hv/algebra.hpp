#pragma once

#include "hv/scalar.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace hv {

/// The parameters (a, b, epsilon) of the algebra HV(a, b; epsilon).
///
/// a is deliberately unrestricted: the shift isomorphism maps the algebra
/// with parameter a onto the one with a + k.  Module construction is where
/// the normalization 0 <= a < 1 is enforced.
struct AlgebraParams {
    Rational a;
    Rational b;
    int epsilon = 1;

    AlgebraParams() = default;
    AlgebraParams(Rational a_, Rational b_, int eps);

    friend bool operator==(const AlgebraParams&, const AlgebraParams&) = default;
    std::string str() const;
};

enum class Kind { L, H };

/// L_{i,m} or H_{i,m}; the height m is never negative.
struct BasisVector {
    Kind kind = Kind::L;
    int i = 0;
    int m = 0;

    BasisVector() = default;
    BasisVector(Kind k, int i_, int m_);

    static BasisVector L(int i, int m) { return {Kind::L, i, m}; }
    static BasisVector H(int i, int m) { return {Kind::H, i, m}; }

    friend bool operator==(const BasisVector&, const BasisVector&) = default;
    friend auto operator<=>(const BasisVector&, const BasisVector&) = default;

    /// "L[i,m]" / "H[i,m]"
    std::string str() const;
};

/// Finite linear combination of basis vectors.  Zero coefficients are never
/// stored; iteration runs L before H, then i ascending, then m ascending.
class AlgebraElement {
public:
    using Terms = std::map<BasisVector, Rational>;

    AlgebraElement() = default;
    AlgebraElement(const BasisVector& x, const Rational& c = 1); // NOLINT(google-explicit-constructor)

    /// Grammar: terms joined by '+'/'-', each "[coeff*]L[i,m]" or
    /// "[coeff*]H[i,m]"; "0" is the zero element.  Whitespace is ignored.
    static AlgebraElement parse(std::string_view text);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    Rational coeff(const BasisVector& x) const;
    std::size_t size() const { return terms_.size(); }

    void add_term(const BasisVector& x, const Rational& c);
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(const Rational& s);

    friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
    friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
    friend AlgebraElement operator*(const Rational& s, AlgebraElement x) { return x *= s; }
    AlgebraElement operator-() const { return Rational(-1) * *this; }

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

    /// Canonical text form, e.g. "L[1,1] + L[1,0]", "3/2*H[1,1] - H[1,0]".
    /// Within one (kind, i) block the heights are written in descending order.
    std::string str() const;

private:
    Terms terms_;
};

/// Structure constants of HV(a, b; epsilon):
///   [L_{i,m}, L_{j,n}] = (j-i) L_{i+j,m+n} - eps (n-m) L_{i+j,m+n-eps}
///   [L_{i,m}, H_{j,n}] = (a+j+bi) H_{i+j,m+n} - eps (n+bm) H_{i+j,m+n-eps}
///   [H_{i,m}, H_{j,n}] = 0
/// A term whose target height would be negative always has a zero
/// coefficient and is skipped; a nonzero one is an internal error.
AlgebraElement bracket_basis(const AlgebraParams& p, const BasisVector& x, const BasisVector& y);

/// Bilinear extension of bracket_basis.
AlgebraElement bracket(const AlgebraParams& p, const AlgebraElement& x, const AlgebraElement& y);

/// L_{i,m} -> L_{i,m}, H_{j,n} -> H_{j-k,n}: the isomorphism from the
/// algebra with parameter a onto the one with parameter a + k.
AlgebraElement shift_isomorphism(int k, const AlgebraElement& x);

/// c(x, t) * D_eps with c a Laurent polynomial in x and a polynomial in t.
/// Keys are (x exponent, t exponent).
class DiffOperator {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, Rational>;

    DiffOperator() = default;

    void add_term(int xexp, int texp, const Rational& c);
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    DiffOperator& operator+=(const DiffOperator& o);
    friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

    std::string str() const;

private:
    Terms terms_;
};

/// Derivation D_eps = x d/dx + t^{1-eps} d/dt applied to x^p t^q:
///   p x^p t^q + q x^p t^{q-eps}.
DiffOperator apply_derivation(int eps, int xexp, int texp);

/// L_{i,m} -> -eps x^{-eps i} t^m D_eps.  Throws std::invalid_argument for H.
DiffOperator realize_L(int eps, const BasisVector& x);

/// Linear extension of realize_L over the L-part of an element; throws if
/// any H term is present.
DiffOperator realize(int eps, const AlgebraElement& x);

/// [f D, g D] = (f D(g) - g D(f)) D.
DiffOperator op_commutator(int eps, const DiffOperator& A, const DiffOperator& B);

} // namespace hv
