#pragma once

#include "hv/algebra.hpp"
#include "hv/polynomial.hpp"
#include "hv/scalar.hpp"

#include <cstdint>
#include <random>

namespace hv::testgen {

// Small deterministic generators for the property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational(int num = 9, int den = 9)
    {
        return Rational(integer(-num, num), integer(1, den));
    }

    Rational nonzero_rational(int num = 9, int den = 9)
    {
        Rational q;
        while (q.is_zero()) q = rational(num, den);
        return q;
    }

    Polynomial polynomial(int max_deg)
    {
        std::vector<Rational> c;
        const int d = integer(0, max_deg);
        for (int k = 0; k <= d; ++k) c.push_back(rational());
        return Polynomial(std::move(c));
    }

    Polynomial nonzero_polynomial(int max_deg)
    {
        Polynomial f;
        while (f.is_zero()) f = polynomial(max_deg);
        return f;
    }

    BasisVector basis(int i_max, int m_max)
    {
        return {integer(0, 1) ? Kind::L : Kind::H, integer(-i_max, i_max), integer(0, m_max)};
    }

    AlgebraElement element(int terms, int i_max, int m_max)
    {
        AlgebraElement e;
        for (int n = 0; n < terms; ++n) e.add_term(basis(i_max, m_max), rational());
        return e;
    }

private:
    std::mt19937_64 rng_;
};

} // namespace hv::testgen
