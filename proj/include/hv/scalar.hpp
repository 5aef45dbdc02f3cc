#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace hv {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class; every arithmetic result is
/// canonicalized before it is returned, so equality is structural.
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I n) // NOLINT(google-explicit-constructor)
    {
        if constexpr (std::is_signed_v<I>)
            v_ = mpq_class(mpz_class(static_cast<long>(n)));
        else
            v_ = mpq_class(mpz_class(static_cast<unsigned long>(n)));
    }

    Rational(long num, long den);

    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Accepts "p", "-p", "p/q"; whitespace around the value is ignored.
    static Rational parse(std::string_view text);

    /// "p/q", or "p" when the denominator is one.
    std::string str() const;

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
    mpq_class v_{0};
};

/// n! for n >= 0.
Rational factorial(int n);

/// Generalized binomial coefficient binom(m, n) for any integer m and n >= 0:
/// 1 when n = 0, otherwise (1/n!) * prod_{i=m-n+1}^{m} i.  Always computed by
/// the falling-factorial product.
Rational gen_binomial(long m, int n);

/// q^e for any integer e.  0^0 = 1; 0^e with e < 0 throws DomainError.
Rational int_pow(const Rational& q, long e);

} // namespace hv
