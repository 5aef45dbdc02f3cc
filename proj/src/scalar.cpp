#include "hv/scalar.hpp"

#include "hv/errors.hpp"

#include <cctype>

namespace hv {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

mpz_class parse_integer(std::string_view s)
{
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational::Rational(long num, long den)
{
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(mpz_class(num), mpz_class(den));
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view s = trim(text);
    auto slash = s.find('/');
    std::string_view num = trim(s.substr(0, slash));
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("malformed rational '" + std::string(text) + "'");
    mpz_class d = parse_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    mpq_class q(parse_integer(num), d);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const
{
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational factorial(int n)
{
    if (n < 0) throw DomainError("factorial of a negative integer");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(mpq_class(r));
}

Rational gen_binomial(long m, int n)
{
    if (n < 0) throw DomainError("binomial with negative lower index");
    if (n == 0) return 1;
    mpz_class prod = 1;
    for (long i = m - n + 1; i <= m; ++i) {
        if (i == 0) return 0;
        prod *= i;
    }
    return Rational(mpq_class(prod)) / factorial(n);
}

Rational int_pow(const Rational& q, long e)
{
    if (e == 0) return 1;
    if (e < 0) {
        if (q.is_zero()) throw DomainError("zero raised to a negative power");
        return Rational(1) / int_pow(q, -e);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), q.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(num, den));
}

} // namespace hv
