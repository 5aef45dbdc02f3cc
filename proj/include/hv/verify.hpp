#pragma once

#include "hv/algebra.hpp"
#include "hv/module_action.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hv {

/// Index/height/degree bounds for the exhaustive checks, plus the parameter
/// grid they run over.
struct CheckWindow {
    int i_min = -3;
    int i_max = 3;
    int m_max = 3;
    int deg_max = 5;
    // Jacobi runs over triples, so it gets its own (smaller) box.
    int triple_i_max = 2;
    int triple_m_max = 2;
    std::vector<Module> grid;

    /// Throws ConfigError on empty ranges or an empty grid.
    void validate() const;
};

/// Eight modules, one per (a, b) in {(0,0), (1/2,1), (0,1), (1/3,2)} and
/// eps in {1, -1}, with nonzero gamma/kappa wherever they are parameters.
/// kappa tables cover every index a bracket of two in-window vectors reaches.
std::vector<Module> default_grid(int i_min = -3, int i_max = 3);

CheckWindow default_window();

struct ReportEntry {
    std::string check;
    std::string inputs;
    bool passed = true;
    std::size_t cases = 0;
    std::string witness;  ///< first nonzero discrepancy, empty when passed
    std::string evidence; ///< "proof", "bounded-evidence", or empty
};

struct Report {
    std::string suite;
    std::vector<ReportEntry> entries;
    std::optional<std::uint64_t> seed;

    std::size_t passed() const;
    std::size_t failed() const;
    bool ok() const { return failed() == 0; }
};

/// The operations the suites exercise, as replaceable callables.  The
/// reference model binds the real implementations; negative controls swap in
/// a model with one perturbed coefficient.
struct Model {
    std::function<AlgebraElement(const AlgebraParams&, const BasisVector&, const BasisVector&)> bracket_basis;
    std::function<Polynomial(const Module&, const BasisVector&, const Polynomial&)> act_basis;
    std::function<Polynomial(const Module&, const BasisVector&, int)> act_monomial;
    std::function<Rational(const Module&, int, int)> h_on_one;
    std::function<Rational(int, const Rational&, const Rational&)> prop41_lhs;

    static Model reference();

    AlgebraElement bracket(const AlgebraParams& p, const AlgebraElement& x, const AlgebraElement& y) const;
    Polynomial act(const Module& mod, const AlgebraElement& x, const Polynomial& f) const;
};

/// A model that differs from the reference in exactly one coefficient,
/// placed where the named suite is sensitive to it.
Model corrupted_model(std::string_view suite);

Report check_antisymmetry(const CheckWindow& w, const Model& model = Model::reference());
Report check_jacobi(const CheckWindow& w, const Model& model = Model::reference());
Report check_realization(int eps, const CheckWindow& w, const Model& model = Model::reference());
Report check_shift_isomorphism(std::span<const int> ks, const CheckWindow& w, const Model& model = Model::reference());
Report check_module_axiom(const CheckWindow& w, const Model& model = Model::reference());
Report check_equivalent_forms(const CheckWindow& w, const Model& model = Model::reference());
Report check_closed_forms(const CheckWindow& w, const Model& model = Model::reference());
Report check_lemma_combination(const CheckWindow& w, const Model& model = Model::reference());
Report check_G_recursions(const CheckWindow& w, const Model& model = Model::reference());
Report check_prop41_identity(int s_max, int samples, std::uint64_t seed, const Model& model = Model::reference());
/// Which of lambda, alpha, beta, gamma, kappa change some action output in
/// the window, compared against the expected free-parameter count per branch
/// (4, 4, 3, 3 for eps = 1; 4, inf, inf, 3 for eps = -1).
Report check_parameter_liveness(const CheckWindow& w, const Model& model = Model::reference());

/// Number of free parameters of the module family over ap; nullopt means
/// infinitely many.
std::optional<int> expected_free_parameters(const AlgebraParams& ap);

/// All suite names accepted by run_suite, in execution order.
std::vector<std::string> suite_names();

struct SuiteOptions {
    std::uint64_t seed = 20240601;
    int prop41_s_max = 6;
    int prop41_samples = 24;
    Model model = Model::reference();
};

/// Throws ConfigError for an unknown name.
Report run_suite(std::string_view name, const CheckWindow& w, const SuiteOptions& opts = {});

} // namespace hv
