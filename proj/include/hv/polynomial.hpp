#pragma once

#include "hv/scalar.hpp"

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hv {

/// Dense univariate polynomial in t with exact rational coefficients.
///
/// coeffs()[k] is the coefficient of t^k.  The highest stored coefficient is
/// never zero; the zero polynomial has no coefficients and no degree.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(int k, const Rational& c = 1);
    /// t - c
    static Polynomial linear_root(const Rational& c);

    /// Parses "3t^2 - 1/2*t + 1", "t^3", "0", ...
    static Polynomial parse(std::string_view text);

    /// Degree, or nullopt for the zero polynomial (degree "minus infinity").
    std::optional<int> degree() const;
    bool is_zero() const { return c_.empty(); }

    std::span<const Rational> coeffs() const { return c_; }
    /// Coefficient of t^k; zero beyond the stored range.
    Rational coeff(int k) const;
    const Rational& leading() const { return c_.back(); }

    Rational eval(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const { return *this * Rational(-1); }

    /// this += s * o, without a temporary.
    void add_scaled(const Polynomial& o, const Rational& s);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial scale(const Polynomial& f, const Rational& s);
Polynomial mul(const Polynomial& f, const Polynomial& g);
Rational eval(const Polynomial& f, const Rational& x);

/// s-fold formal derivative.
Polynomial derivative_n(const Polynomial& f, int s);

/// g(t) = f(t - c), by binomial expansion of each (t - c)^k.
Polynomial shift(const Polynomial& f, const Rational& c);

} // namespace hv
