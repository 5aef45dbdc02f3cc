#include "hv/errors.hpp"
#include "hv/serialize.hpp"
#include "hv/structure_probe.hpp"
#include "hv/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hv;

namespace {

Rational q(const py::object& v)
{
    if (py::isinstance<py::int_>(v)) return Rational::parse(py::str(v).cast<std::string>());
    if (py::isinstance<py::str>(v)) return Rational::parse(v.cast<std::string>());
    throw py::type_error("expected an int or a \"p/q\" string");
}

Module make_module(const AlgebraParams& ap, const py::object& lambda, const py::object& alpha, const py::object& beta,
                   const py::object& gamma, const std::map<int, std::string>& kappa)
{
    ModuleParams mp;
    mp.lambda = q(lambda);
    mp.alpha = q(alpha);
    mp.beta = q(beta);
    mp.gamma = q(gamma);
    std::map<int, Rational> k;
    for (const auto& [i, v] : kappa) k[i] = Rational::parse(v);
    mp.kappa = KappaTable::from_map(k);
    return Module(ap, mp);
}

std::string dump(const Json& j) { return j.dump(); }

} // namespace

PYBIND11_MODULE(_hvalgebra, m)
{
    m.doc() = "Exact brackets, module actions and checks for HV(a,b;eps)";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);

    py::class_<AlgebraParams>(m, "AlgebraParams")
        .def(py::init([](const py::object& a, const py::object& b, int eps) { return AlgebraParams(q(a), q(b), eps); }),
             py::arg("a"), py::arg("b"), py::arg("epsilon"))
        .def_property_readonly("a", [](const AlgebraParams& p) { return p.a.str(); })
        .def_property_readonly("b", [](const AlgebraParams& p) { return p.b.str(); })
        .def_property_readonly("epsilon", [](const AlgebraParams& p) { return p.epsilon; })
        .def("__repr__", [](const AlgebraParams& p) { return "AlgebraParams(" + p.str() + ")"; });

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init(&Polynomial::parse), py::arg("text"))
        .def("__str__", &Polynomial::str)
        .def("__repr__", [](const Polynomial& f) { return "Polynomial('" + f.str() + "')"; })
        .def("__eq__", [](const Polynomial& f, const Polynomial& g) { return f == g; })
        .def("__add__", [](const Polynomial& f, const Polynomial& g) { return f + g; })
        .def("__sub__", [](const Polynomial& f, const Polynomial& g) { return f - g; })
        .def("__mul__", [](const Polynomial& f, const Polynomial& g) { return f * g; })
        .def_property_readonly("degree", &Polynomial::degree)
        .def("coeffs", [](const Polynomial& f) {
            std::vector<std::string> out;
            for (const auto& c : f.coeffs()) out.push_back(c.str());
            return out;
        })
        .def("eval", [](const Polynomial& f, const py::object& x) { return f.eval(q(x)).str(); });

    py::class_<AlgebraElement>(m, "Element")
        .def(py::init(&AlgebraElement::parse), py::arg("text"))
        .def("__str__", &AlgebraElement::str)
        .def("__repr__", [](const AlgebraElement& x) { return "Element('" + x.str() + "')"; })
        .def("__eq__", [](const AlgebraElement& x, const AlgebraElement& y) { return x == y; })
        .def("__add__", [](const AlgebraElement& x, const AlgebraElement& y) { return x + y; })
        .def("__sub__", [](const AlgebraElement& x, const AlgebraElement& y) { return x - y; })
        .def("__rmul__", [](const AlgebraElement& x, const py::object& c) { return q(c) * x; })
        .def("is_zero", &AlgebraElement::is_zero);

    py::class_<Module>(m, "Module")
        .def(py::init(&make_module), py::arg("algebra"), py::arg("lam") = 1, py::arg("alpha") = 0, py::arg("beta") = 0,
             py::arg("gamma") = 0, py::arg("kappa") = std::map<int, std::string>{})
        .def_property_readonly("algebra", &Module::algebra)
        .def("params_json", [](const Module& mod) { return dump(to_json(mod.params())); })
        .def("__repr__", [](const Module& mod) { return "Module(" + mod.str() + ")"; });

    m.def("bracket", [](const AlgebraParams& p, const AlgebraElement& x, const AlgebraElement& y) { return bracket(p, x, y); });
    m.def("shift_isomorphism", [](int k, const AlgebraElement& x) { return shift_isomorphism(k, x); });
    m.def("act", [](const Module& mod, const AlgebraElement& x, const Polynomial& f) { return act(mod, x, f); });
    m.def("h_on_one", [](const Module& mod, int i, int mm) { return h_on_one(mod, i, mm).str(); });
    m.def("is_simple_expected", [](const Module& mod) { return is_simple_expected(mod.algebra(), mod.params()); });

    m.def("suite_names", &suite_names);
    m.def(
        "run_suite_json",
        [](const std::string& name, std::uint64_t seed, bool corrupted) {
            SuiteOptions opts;
            opts.seed = seed;
            if (corrupted) opts.model = corrupted_model(name);
            py::gil_scoped_release release;
            return dump(to_json(run_suite(name, default_window(), opts)));
        },
        py::arg("name"), py::arg("seed") = 20240601, py::arg("corrupted") = false);
    m.def(
        "probe_json",
        [](const Module& mod, const Polynomial& seed, std::optional<int> degree_cap, int iter_cap) {
            ProbeResult r = probe_simplicity(mod, seed, degree_cap, iter_cap);
            return dump({{"report", to_json(r.report)}, {"span", to_json(r.span)}});
        },
        py::arg("module"), py::arg("seed"), py::arg("degree_cap") = py::none(), py::arg("iter_cap") = 50);
    m.def("recover_json", [](const Module& mod) { return dump(to_json(recover_parameters(mod.algebra(), make_oracle(mod)))); });
    m.def("generating_set_json", [](const AlgebraParams& ap) { return dump(to_json(check_generating_set(ap))); });
}
