#pragma once

#include "hv/algebra.hpp"
#include "hv/polynomial.hpp"
#include "hv/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace hv {

/// Finite window [lo, hi] of the family kappa_i.  Lookups outside the window
/// are configuration errors, never an implicit zero.
class KappaTable {
public:
    KappaTable() = default;
    KappaTable(int lo, std::vector<Rational> values);
    /// Keys must form a contiguous integer range.
    static KappaTable from_map(const std::map<int, Rational>& entries);

    bool empty() const { return values_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(values_.size()) - 1; }
    bool covers(int i) const { return !empty() && i >= lo() && i <= hi(); }
    const Rational& at(int i) const;
    bool all_zero() const;
    const std::vector<Rational>& values() const { return values_; }

    friend bool operator==(const KappaTable&, const KappaTable&) = default;

private:
    int lo_ = 0;
    std::vector<Rational> values_;
};

/// (lambda, alpha, beta, gamma, kappa) of a rank-one free module.
struct ModuleParams {
    Rational lambda{1};
    Rational alpha;
    Rational beta;
    Rational gamma;
    KappaTable kappa;

    friend bool operator==(const ModuleParams&, const ModuleParams&) = default;
    std::string str() const;
};

/// How H acts, decided once from (a, b).
enum class HBranch {
    BZero,        ///< b = 0
    BOneANonzero, ///< b = 1, a != 0
    BOneAZero,    ///< b = 1, a = 0
    Generic,      ///< b not in {0, 1}
};

HBranch h_branch(const AlgebraParams& ap);
/// gamma is a genuine parameter iff (eps = 1 and (b = 0 or (b = 1, a != 0)))
/// or (eps = -1 and b in {0, 1}).
bool gamma_active(const AlgebraParams& ap);
/// kappa is a genuine parameter iff eps = -1 and b = 1.
bool kappa_active(const AlgebraParams& ap);

/// A validated pair (AlgebraParams, ModuleParams): the module
/// Omega(lambda, alpha, beta, gamma, kappa) = Q[t] over HV(a, b; eps).
class Module {
public:
    /// Throws ConfigError unless lambda != 0, 0 <= a < 1 and inactive
    /// parameters are stored as zero / empty.
    Module(AlgebraParams ap, ModuleParams mp);

    /// Skips the normalization of a and the inactive-parameter rule, so that a
    /// dead parameter can be varied to observe that nothing changes.  lambda
    /// must still be nonzero.
    static Module unvalidated(AlgebraParams ap, ModuleParams mp);

    const AlgebraParams& algebra() const { return ap_; }
    const ModuleParams& params() const { return mp_; }
    HBranch branch() const { return branch_; }
    int epsilon() const { return ap_.epsilon; }

    std::string str() const;

private:
    Module() = default;
    AlgebraParams ap_;
    ModuleParams mp_;
    HBranch branch_ = HBranch::Generic;
};

/// phi_i(a, b): 1 if b = 0; a/(a+i) if b = 1, a != 0; delta_{i,0} if
/// b = 1, a = 0; 0 otherwise.
Rational phi(int i, const Rational& a, const Rational& b);

/// The eps = -1, b = 1, a != 0 scalar function
///   m = 0:  a/(a+i) lambda^i gamma
///   m >= 1: (-1)^{m-1}/(m-1)! (a+i)^{m-1} kappa_i
///           + sum_{l=0}^{m-2} (m-l-2)!/(m-1)! (-1)^l (a+i)^l a lambda^i beta^{m-l-1} gamma
Rational varphi(int i, int m, const Rational& a, const ModuleParams& mp);

/// The eps = -1, b = 1, a = 0 scalar function
///   m = 0: delta_{i,0} gamma;  m >= 1: (-i)^{m-1}/(m-1)! kappa_i  (0^0 = 1).
Rational psi(int i, int m, const ModuleParams& mp);

/// x . f in the derivative form: a finite sum over s of scalar times
/// (linear factor) times f^{(s)} evaluated at a shifted argument.
Polynomial act_basis(const Module& mod, const BasisVector& x, const Polynomial& f);

/// Linear extension of act_basis.
Polynomial act(const Module& mod, const AlgebraElement& x, const Polynomial& f);

/// x . t^k in the monomial form, expanded with falling products instead of
/// derivatives and powers (t - c)^{k-s} instead of shifts.  Must agree with
/// act_basis(x, t^k).
Polynomial act_monomial(const Module& mod, const BasisVector& x, int k);

/// Closed form of the constant H_{i,m} . 1.
Rational h_on_one(const Module& mod, int i, int m);

/// Left-hand side of the cancellation identity behind the eps = -1 module
/// check:
///   sum_{l=0}^{s-1} (s-l-1)!/s! (-1)^{s+l} A^{l+1} beta^{s-l}
///   + sum_{l=0}^{s} (s-l)!/s! (-1)^{s+l} A^l beta^{s-l+1}
/// which equals (-1)^s beta^{s+1}.
Rational prop41_lhs(int s, const Rational& A, const Rational& beta);

} // namespace hv
