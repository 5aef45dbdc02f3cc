#pragma once

#include "hv/algebra.hpp"
#include "hv/module_action.hpp"
#include "hv/polynomial.hpp"
#include "hv/verify.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace hv {

/// A finite-dimensional piece of a submodule: monic rows in reduced
/// row-echelon form, with distinct leading powers, sorted by leading power.
///
/// Provenance: words[r] is the sequence of generators whose successive
/// actions carry the seed to the r-th raw vector (words[0] is empty, the seed
/// itself), and combos[n] writes rows[n] as a combination of raw vectors.
struct SpanBasis {
    std::vector<Polynomial> rows;
    int degree_cap = 0;
    int iter_cap = 0;
    int iterations = 0;
    bool saturated = false;
    std::vector<std::vector<BasisVector>> words;
    std::vector<std::map<int, Rational>> combos;

    std::size_t dim() const { return rows.size(); }
};

/// Remainder of f after reduction against the rows of s.
Polynomial reduce(const SpanBasis& s, Polynomial f);

/// True iff the constant 1 reduces to zero.
bool contains_one(const SpanBasis& s);

/// True iff every row has zero constant term.
bool in_t_omega(const SpanBasis& s);

/// L_{i,0}, L_{i,1}, H_{i,0} for |i| <= i_range, plus H_{i,1} when kappa is a
/// parameter.
std::vector<BasisVector> generating_set(const AlgebraParams& ap, int i_range = 3);

/// Closes span{seed} under the given generators.  Results of degree above
/// degree_cap are dropped; the loop stops after iter_cap rounds.  Every row
/// of the result lies in the submodule generated by seed.
/// degree_cap defaults to deg(seed) + 3.
SpanBasis submodule_saturation(const Module& mod, const Polynomial& seed, const std::vector<BasisVector>& generators,
                               std::optional<int> degree_cap = std::nullopt, int iter_cap = 50);

/// Recomputes rows[n] from the seed by replaying the recorded words.
Polynomial replay_row(const Module& mod, const Polynomial& seed, const SpanBasis& s, std::size_t n);

/// alpha != 0, or gamma != 0 where gamma is a parameter, or some kappa_i != 0
/// in the declared window where kappa is a parameter.
bool is_simple_expected(const AlgebraParams& ap, const ModuleParams& mp);

/// With alpha = gamma = 0 and kappa = 0: every basis vector in the window maps
/// t^k (1 <= k <= deg_max) and 1 into t Q[t].  Throws ConfigError otherwise.
Report check_t_submodule(const Module& mod, const CheckWindow& w);

struct ProbeResult {
    Report report;
    SpanBasis span;
    Polynomial seed;
};

/// Saturates from seed and checks the outcome against the simplicity
/// predicate.  Finding 1 is a proof; staying inside t Q[t] is bounded
/// evidence.  Also replays up to replay_rows random rows.
ProbeResult probe_simplicity(const Module& mod, const Polynomial& seed, std::optional<int> degree_cap = std::nullopt,
                             int iter_cap = 50, std::uint64_t rng_seed = 20240601, int replay_rows = 10);

/// A black-box module action restricted to the L_{1,0}, L_{0,1}, H_{0,0}
/// probes and H_{i,1} for i in [kappa_lo, kappa_hi].
struct ActionOracle {
    std::function<Polynomial(const BasisVector&, const Polynomial&)> act;
    std::optional<std::pair<int, int>> kappa_window;
};

ActionOracle make_oracle(const Module& mod);

/// Reads (lambda, alpha, beta, gamma, kappa) back off the oracle.  Throws
/// ConfigError if the outputs fit no module of the family.
ModuleParams recover_parameters(const AlgebraParams& ap, const ActionOracle& oracle);

/// Span of the generators closed under brackets up to depth_cap, keeping only
/// elements supported in the box |i| <= i_bound, m <= m_bound.  One entry per
/// target: reached is a proof ("proof"), not reached is "bounded-evidence"
/// and marked failed.
Report generation_closure(const AlgebraParams& ap, const std::vector<BasisVector>& generators,
                          const std::vector<BasisVector>& targets, int depth_cap, int i_bound, int m_bound);

/// The generating-set claims: every L_{i,m}, H_{i,n} with |i| <= 2, m, n <= 3
/// is reached from the generating set over |i| <= gen_range; for eps = -1,
/// b = 1, H_{0,1} is not reached once H_{i,1} is left out.
Report check_generating_set(const AlgebraParams& ap, int depth_cap = 4, int gen_range = 3);

} // namespace hv
