#include "hv/algebra.hpp"

#include "hv/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <stdexcept>
#include <vector>

namespace hv {

AlgebraParams::AlgebraParams(Rational a_, Rational b_, int eps) : a(std::move(a_)), b(std::move(b_)), epsilon(eps)
{
    if (eps != 1 && eps != -1) throw ConfigError("epsilon must be +1 or -1");
}

std::string AlgebraParams::str() const
{
    return "a=" + a.str() + ",b=" + b.str() + ",eps=" + std::to_string(epsilon);
}

BasisVector::BasisVector(Kind k, int i_, int m_) : kind(k), i(i_), m(m_)
{
    if (m_ < 0) throw std::invalid_argument("basis vector with negative height");
}

std::string BasisVector::str() const
{
    return std::string(kind == Kind::L ? "L" : "H") + "[" + std::to_string(i) + "," + std::to_string(m) + "]";
}

// ---------------------------------------------------------------------------

AlgebraElement::AlgebraElement(const BasisVector& x, const Rational& c) { add_term(x, c); }

Rational AlgebraElement::coeff(const BasisVector& x) const
{
    auto it = terms_.find(x);
    return it == terms_.end() ? Rational() : it->second;
}

void AlgebraElement::add_term(const BasisVector& x, const Rational& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(x, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o)
{
    for (const auto& [x, c] : o.terms_) add_term(x, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o)
{
    for (const auto& [x, c] : o.terms_) add_term(x, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& s)
{
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [x, c] : terms_) c *= s;
    return *this;
}

std::string AlgebraElement::str() const
{
    if (terms_.empty()) return "0";
    std::vector<std::pair<BasisVector, Rational>> order(terms_.begin(), terms_.end());
    // Heights descending inside each (kind, i) block.
    std::stable_sort(order.begin(), order.end(), [](const auto& l, const auto& r) {
        if (l.first.kind != r.first.kind) return l.first.kind < r.first.kind;
        if (l.first.i != r.first.i) return l.first.i < r.first.i;
        return l.first.m > r.first.m;
    });
    std::string out;
    for (const auto& [x, c] : order) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (out.empty())
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        if (mag != Rational(1)) out += mag.str() + "*";
        out += x.str();
    }
    return out;
}

namespace {

struct ElementLexer {
    std::string_view s;
    std::size_t pos = 0;

    void skip()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool at_end()
    {
        skip();
        return pos >= s.size();
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
    void expect(char c)
    {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    std::string digits()
    {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return std::string(s.substr(start, pos - start));
    }
    int integer()
    {
        bool neg = eat('-');
        if (!neg) eat('+');
        std::string d = digits();
        if (d.empty()) fail("expected integer");
        int v = std::stoi(d);
        return neg ? -v : v;
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("element '" + std::string(s) + "': " + what + " at offset " + std::to_string(pos));
    }
};

} // namespace

AlgebraElement AlgebraElement::parse(std::string_view text)
{
    ElementLexer lx{text};
    AlgebraElement out;
    bool first = true;
    bool saw_zero_literal = false;
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
        std::string num = lx.digits();
        if (!num.empty()) {
            std::string den = "1";
            if (lx.eat('/')) {
                den = lx.digits();
                if (den.empty()) lx.fail("expected denominator");
            }
            c = Rational::parse(num + "/" + den);
            if (!lx.eat('*')) {
                if (c.is_zero() && lx.at_end()) {
                    saw_zero_literal = true;
                    continue;
                }
                lx.fail("expected '*' after coefficient");
            }
        }
        Kind kind;
        if (lx.eat('L'))
            kind = Kind::L;
        else if (lx.eat('H'))
            kind = Kind::H;
        else
            lx.fail("expected 'L' or 'H'");
        lx.expect('[');
        int i = lx.integer();
        lx.expect(',');
        int m = lx.integer();
        lx.expect(']');
        if (m < 0) lx.fail("negative height");
        out.add_term(BasisVector(kind, i, m), c * Rational(sign));
    }
    if (first && !saw_zero_literal) lx.fail("empty input");
    return out;
}

// ---------------------------------------------------------------------------

namespace {

void emit(AlgebraElement& out, Kind kind, int i, int m, const Rational& c)
{
    if (c.is_zero()) return;
    assert(m >= 0 && "nonzero structure constant with negative target height");
    if (m < 0) throw std::logic_error("nonzero structure constant with negative target height");
    out.add_term(BasisVector(kind, i, m), c);
}

} // namespace

AlgebraElement bracket_basis(const AlgebraParams& p, const BasisVector& x, const BasisVector& y)
{
    const int eps = p.epsilon;
    AlgebraElement out;
    if (x.kind == Kind::H && y.kind == Kind::H) return out;
    if (x.kind == Kind::H) return -bracket_basis(p, y, x);

    const int i = x.i, m = x.m, j = y.i, n = y.m;
    if (y.kind == Kind::L) {
        emit(out, Kind::L, i + j, m + n, Rational(j - i));
        emit(out, Kind::L, i + j, m + n - eps, Rational(-eps * (n - m)));
    } else {
        emit(out, Kind::H, i + j, m + n, p.a + Rational(j) + p.b * Rational(i));
        emit(out, Kind::H, i + j, m + n - eps, Rational(-eps) * (Rational(n) + p.b * Rational(m)));
    }
    return out;
}

AlgebraElement bracket(const AlgebraParams& p, const AlgebraElement& x, const AlgebraElement& y)
{
    AlgebraElement out;
    for (const auto& [bx, cx] : x.terms())
        for (const auto& [by, cy] : y.terms()) {
            AlgebraElement part = bracket_basis(p, bx, by);
            out += (cx * cy) * part;
        }
    return out;
}

AlgebraElement shift_isomorphism(int k, const AlgebraElement& x)
{
    AlgebraElement out;
    for (const auto& [b, c] : x.terms()) {
        if (b.kind == Kind::L)
            out.add_term(b, c);
        else
            out.add_term(BasisVector::H(b.i - k, b.m), c);
    }
    return out;
}

// ---------------------------------------------------------------------------

void DiffOperator::add_term(int xexp, int texp, const Rational& c)
{
    if (c.is_zero()) return;
    if (texp < 0) throw std::logic_error("differential operator term with negative t exponent");
    auto [it, inserted] = terms_.try_emplace(Key{xexp, texp}, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o)
{
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

std::string DiffOperator::str() const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")*x^" + std::to_string(k.first) + "*t^" + std::to_string(k.second);
    }
    return out + " D";
}

DiffOperator apply_derivation(int eps, int xexp, int texp)
{
    DiffOperator out;
    out.add_term(xexp, texp, Rational(xexp));
    if (texp != 0) out.add_term(xexp, texp - eps, Rational(texp));
    return out;
}

DiffOperator realize_L(int eps, const BasisVector& x)
{
    if (x.kind != Kind::L) throw std::invalid_argument("only L generators have an operator realization");
    DiffOperator out;
    out.add_term(-eps * x.i, x.m, Rational(-eps));
    return out;
}

DiffOperator realize(int eps, const AlgebraElement& x)
{
    DiffOperator out;
    for (const auto& [b, c] : x.terms()) {
        DiffOperator part = realize_L(eps, b);
        for (const auto& [k, v] : part.terms()) out.add_term(k.first, k.second, v * c);
    }
    return out;
}

namespace {

// Coefficient function D(f) where f = sum c x^p t^q.
DiffOperator derive(int eps, const DiffOperator& f)
{
    DiffOperator out;
    for (const auto& [k, c] : f.terms()) {
        DiffOperator d = apply_derivation(eps, k.first, k.second);
        for (const auto& [dk, dc] : d.terms()) out.add_term(dk.first, dk.second, dc * c);
    }
    return out;
}

// Pointwise product of two coefficient functions.
DiffOperator times(const DiffOperator& f, const DiffOperator& g)
{
    DiffOperator out;
    for (const auto& [fk, fc] : f.terms())
        for (const auto& [gk, gc] : g.terms()) out.add_term(fk.first + gk.first, fk.second + gk.second, fc * gc);
    return out;
}

} // namespace

DiffOperator op_commutator(int eps, const DiffOperator& A, const DiffOperator& B)
{
    DiffOperator out = times(A, derive(eps, B));
    const DiffOperator back = times(B, derive(eps, A));
    for (const auto& [k, c] : back.terms()) out.add_term(k.first, k.second, -c);
    return out;
}

} // namespace hv
