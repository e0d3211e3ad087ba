/*
   Copyright 2026 The polyinv authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyinv/classical.hpp"
#include "polyinv/expr.hpp"
#include "polyinv/invariance.hpp"
#include "polyinv/suites.hpp"

namespace py = pybind11;
using namespace polyinv;

namespace {

struct ContextHandle {
    ContextPtr ptr;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact-arithmetic toolkit for substitution-invariant polynomials";

    py::register_exception<NotInvariantError>(m, "NotInvariantError", PyExc_RuntimeError);
    py::register_exception<BadGeneratorError>(m, "BadGeneratorError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ExprParseError", PyExc_ValueError);

    py::class_<Rational>(m, "Rational")
        .def(py::init<long>())
        .def(py::init<long, long>())
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational(" + r.str() + ")"; })
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def("is_integer", &Rational::is_integer);
    py::implicitly_convertible<py::int_, Rational>();

    py::class_<CycloNum>(m, "Scalar")
        .def("__str__", &format_scalar)
        .def("__repr__", [](const CycloNum& c) { return "Scalar(" + format_scalar(c) + ")"; })
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def("is_zero", &CycloNum::is_zero)
        .def("is_one", &CycloNum::is_one)
        .def("is_rational", &CycloNum::is_rational)
        .def("is_integer", &CycloNum::is_integer)
        .def("pow", &CycloNum::pow);

    m.def("root_of_unity_order", &root_of_unity_order,
          "Least k >= 1 with a^k == 1, or None when a is not a root of unity.");

    py::class_<ContextHandle>(m, "Context")
        .def(py::init([](const std::vector<std::string>& names, unsigned field_index) {
                 return ContextHandle{PolyContext::make(names, field_index)};
             }),
             py::arg("names"), py::arg("field_index") = 1u)
        .def_property_readonly("names",
                               [](const ContextHandle& c) { return c.ptr->names(); })
        .def_property_readonly("field_index",
                               [](const ContextHandle& c) { return c.ptr->field()->index(); })
        .def("variable",
             [](const ContextHandle& c, std::size_t slot) { return MPoly::variable(c.ptr, slot); })
        .def("constant",
             [](const ContextHandle& c, const Rational& r) { return MPoly::constant(c.ptr, r); })
        .def("generator_scalar",
             [](const ContextHandle& c) { return CycloNum::generator(c.ptr->field()); })
        .def("scalar",
             [](const ContextHandle& c, const Rational& r) {
                 return CycloNum::from_rational(c.ptr->field(), r);
             });

    py::class_<MPoly>(m, "Poly")
        .def("__str__", [](const MPoly& f) { return format(f); })
        .def("__repr__", [](const MPoly& f) { return "Poly(" + format(f) + ")"; })
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def(py::self * py::self)
        .def("__pow__", [](const MPoly& f, unsigned k) { return f.pow(k); })
        .def("scaled", &MPoly::scaled)
        .def("is_zero", &MPoly::is_zero)
        .def("is_constant", &MPoly::is_constant)
        .def("constant_value", &MPoly::constant_value)
        .def("term_count", &MPoly::term_count)
        .def("total_degree", &MPoly::total_degree)
        .def("has_integer_coefficients", &MPoly::has_integer_coefficients)
        .def("eval", &MPoly::eval);

    m.def("parse", [](const std::string& text, const ContextHandle& ctx) {
        return parse(text, ctx.ptr);
    });
    m.def("format", [](const MPoly& f) { return format(f); });
    m.def("exact_div", [](const MPoly& f, const MPoly& d) { return exact_div(f, d); },
          "Quotient F/D when the division is exact, else None.");
    m.def("substitute_z", &substitute_z);
    m.def("substitute_var", &substitute_var);
    m.def("degree_in_z", &degree_in_z);
    m.def("eval_z_zero", &eval_z_zero);
    m.def("z_coefficients", &z_coefficients);
    m.def("permute_vars", &permute_vars);
    m.def("linear_coprime_witness", &linear_coprime_witness);

    py::class_<AdequateMap>(m, "AdequateMap")
        .def_static("make", [](const CycloNum& q, const MPoly& r) { return AdequateMap::make(q, r); })
        .def_static("identity",
                    [](const ContextHandle& ctx) { return AdequateMap::identity(ctx.ptr); })
        .def_property_readonly("order", &AdequateMap::order)
        .def_property_readonly("unit", &AdequateMap::unit)
        .def_property_readonly("shift", &AdequateMap::shift)
        .def("image", &AdequateMap::image);

    py::class_<Classification>(m, "Classification")
        .def_property_readonly("kind",
                               [](const Classification& c) {
                                   return std::string(map_kind_name(c.kind));
                               })
        .def_readonly("detail", &Classification::detail)
        .def_readonly("adequate", &Classification::adequate);

    m.def("classify_map", &classify_map);
    m.def("apply_map", [](const MPoly& f, const MPoly& image) {
        return apply_map(f, SubstMap{image});
    });
    m.def("is_invariant", [](const MPoly& f, const MPoly& image) {
        return is_invariant(f, SubstMap{image});
    });
    m.def("iterate_z", &iterate_z);
    m.def("invariant_generator", &invariant_generator);

    py::class_<Decomposition>(m, "Decomposition")
        .def(py::init([](const MPoly& generator, const std::vector<MPoly>& coeffs) {
                 return Decomposition{generator, coeffs};
             }),
             py::arg("generator"), py::arg("coeffs"))
        .def_readonly("generator", &Decomposition::generator)
        .def_readonly("coeffs", &Decomposition::coeffs);

    m.def("decompose", &decompose, py::arg("poly"), py::arg("map"),
          py::arg("generator") = std::nullopt);
    m.def("expand", &expand);
    m.def("iterate_quotients", &iterate_quotients);
    m.def("coprimality_witnesses", [](const AdequateMap& map) {
        std::vector<std::tuple<unsigned, unsigned, MPoly>> out;
        for (const auto& w : coprimality_witnesses(map)) out.emplace_back(w.j, w.k, w.witness);
        return out;
    });

    // classical layer
    m.def("trivariate_context", [] { return ContextHandle{trivariate_context()}; });
    m.def("univariate_context", [] { return ContextHandle{univariate_context()}; });
    m.def("granville_map", &granville_map);
    m.def("power_gap2", &power_gap2);
    m.def("power_gap_univariate", &power_gap_univariate);
    m.def("power_gap3", &power_gap3);
    m.def("cyclotomic_multiplicity", &cyclotomic_multiplicity);

    py::class_<CauchyFactorization>(m, "CauchyFactorization")
        .def_readonly("p", &CauchyFactorization::p)
        .def_readonly("multiplicity", &CauchyFactorization::multiplicity)
        .def_readonly("cauchy", &CauchyFactorization::cauchy);
    m.def("cauchy_factorization", &cauchy_factorization);
    m.def("cauchy_xy", &cauchy_xy);

    m.def("e2_by_division", &e2_by_division);
    m.def("e2_closed_form", &e2_closed_form);
    m.def("e3_by_division", &e3_by_division);
    m.def("e3_alternative", &e3_alternative);

    py::class_<PowerGapExpansion>(m, "PowerGapExpansion")
        .def_readonly("p", &PowerGapExpansion::p)
        .def_readonly("n", &PowerGapExpansion::n)
        .def_readonly("a", &PowerGapExpansion::a);
    m.def("e3_expansion", &e3_expansion);

    py::class_<IdentityReport>(m, "IdentityReport")
        .def_readonly("equal", &IdentityReport::equal)
        .def_readonly("lhs", &IdentityReport::lhs)
        .def_readonly("rhs", &IdentityReport::rhs)
        .def_readonly("difference", &IdentityReport::difference);
    m.def("check_xy_identity", py::overload_cast<unsigned>(&check_xy_identity));
    m.def("check_conjecture", py::overload_cast<unsigned, unsigned>(&check_conjecture));
    m.def("complete_homogeneous", &complete_homogeneous, py::arg("m"), py::arg("power") = 1u);
    m.def("catalan_check", &catalan_check);

    // verification suites
    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("passed", &CheckResult::passed)
        .def_readonly("detail", &CheckResult::detail);
    py::class_<SuiteReport>(m, "SuiteReport")
        .def_readonly("suite", &SuiteReport::suite)
        .def_readonly("checks", &SuiteReport::checks)
        .def("all_passed", &SuiteReport::all_passed);
    m.def("run_cauchy_suite", &run_cauchy_suite, py::arg("max_p") = 31u);
    m.def("run_granville_suite", &run_granville_suite, py::arg("max_p") = 19u);
    m.def("run_catalan_suite", &run_catalan_suite,
          py::arg("ns") = std::vector<unsigned>{5, 7, 9, 11, 13, 15});
    m.def("run_roundtrip_suite", &run_roundtrip_suite, py::arg("cases") = 200u,
          py::arg("seed") = std::uint64_t{42});
    m.def("run_lemma_suite", &run_lemma_suite, py::arg("cases_per_map") = 20u,
          py::arg("seed") = std::uint64_t{42});

#ifdef VERSION_INFO
#define POLYINV_STR_IMPL(x) #x
#define POLYINV_STR(x) POLYINV_STR_IMPL(x)
    m.attr("__version__") = POLYINV_STR(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
