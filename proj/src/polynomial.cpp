#include "hv/polynomial.hpp"

#include "hv/errors.hpp"

#include <cctype>

namespace hv {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(int k, const Rational& c)
{
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    v[static_cast<std::size_t>(k)] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_root(const Rational& c) { return Polynomial({-c, Rational(1)}); }

void Polynomial::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::optional<int> Polynomial::degree() const
{
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
}

Rational Polynomial::coeff(int k) const
{
    if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return 0;
    return c_[static_cast<std::size_t>(k)];
}

Rational Polynomial::eval(const Rational& x) const
{
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void Polynomial::add_scaled(const Polynomial& o, const Rational& s)
{
    if (s.is_zero() || o.is_zero()) return;
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k] * s;
    trim();
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    add_scaled(o, 1);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    add_scaled(o, -1);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s)
{
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
}

std::string Polynomial::str() const
{
    if (c_.empty()) return "0";
    std::string out;
    for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) {
        const Rational& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (out.empty())
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        if (k == 0) {
            out += mag.str();
            continue;
        }
        if (mag != Rational(1)) out += mag.is_integer() ? mag.str() : mag.str() + "*";
        out += "t";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

namespace {

struct PolyLexer {
    std::string_view s;
    std::size_t pos = 0;

    void skip()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c)
    {
        skip();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c)
    {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }
    bool at_end()
    {
        skip();
        return pos >= s.size();
    }
    std::string digits()
    {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return std::string(s.substr(start, pos - start));
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("polynomial '" + std::string(s) + "': " + what + " at offset " + std::to_string(pos));
    }
};

} // namespace

Polynomial Polynomial::parse(std::string_view text)
{
    PolyLexer lx{text};
    Polynomial out;
    bool first = true;
    while (!lx.at_end()) {
        int sign = 1;
        if (lx.eat('+')) {
        } else if (lx.eat('-')) {
            sign = -1;
        } else if (!first) {
            lx.fail("expected '+' or '-'");
        }
        first = false;

        Rational c = 1;
        bool have_coeff = false;
        std::string num = lx.digits();
        if (!num.empty()) {
            have_coeff = true;
            std::string den = "1";
            if (lx.eat('/')) {
                den = lx.digits();
                if (den.empty()) lx.fail("expected denominator");
            }
            c = Rational::parse(num + "/" + den);
        }
        int power = 0;
        bool star = have_coeff && lx.eat('*');
        if (lx.eat('t')) {
            power = 1;
            if (lx.eat('^')) {
                std::string e = lx.digits();
                if (e.empty()) lx.fail("expected exponent");
                power = std::stoi(e);
            }
        } else if (star || !have_coeff) {
            lx.fail("expected 't'");
        }
        out.add_scaled(Polynomial::monomial(power), c * Rational(sign));
    }
    if (first) lx.fail("empty input");
    return out;
}

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial scale(const Polynomial& f, const Rational& s) { return f * s; }
Polynomial mul(const Polynomial& f, const Polynomial& g) { return f * g; }
Rational eval(const Polynomial& f, const Rational& x) { return f.eval(x); }

Polynomial derivative_n(const Polynomial& f, int s)
{
    if (s < 0) throw DomainError("negative derivative order");
    auto d = f.degree();
    if (!d || s > *d) return {};
    std::vector<Rational> r(static_cast<std::size_t>(*d - s) + 1);
    for (int k = s; k <= *d; ++k) {
        // d^s/dt^s t^k = k!/(k-s)! t^(k-s)
        r[static_cast<std::size_t>(k - s)] = f.coeff(k) * factorial(k) / factorial(k - s);
    }
    return Polynomial(std::move(r));
}

Polynomial shift(const Polynomial& f, const Rational& c)
{
    auto d = f.degree();
    if (!d || c.is_zero()) return f;
    std::vector<Rational> r(static_cast<std::size_t>(*d) + 1);
    // (t - c)^k = sum_j binom(k, j) (-c)^(k-j) t^j
    std::vector<Rational> neg_pow(static_cast<std::size_t>(*d) + 1);
    neg_pow[0] = 1;
    for (int e = 1; e <= *d; ++e) neg_pow[static_cast<std::size_t>(e)] = neg_pow[static_cast<std::size_t>(e - 1)] * -c;
    for (int k = 0; k <= *d; ++k) {
        const Rational fk = f.coeff(k);
        if (fk.is_zero()) continue;
        for (int j = 0; j <= k; ++j)
            r[static_cast<std::size_t>(j)] += fk * gen_binomial(k, k - j) * neg_pow[static_cast<std::size_t>(k - j)];
    }
    return Polynomial(std::move(r));
}

} // namespace hv
