#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "realk3/arith_props.hpp"
#include "realk3/asymptotics.hpp"
#include "realk3/cli.hpp"
#include "realk3/eta_forms.hpp"
#include "realk3/invariants.hpp"
#include "realk3/report_io.hpp"

namespace py = pybind11;
using namespace realk3;

// mpz_class <-> Python int, through the decimal string.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value.set_str(py::str(src).cast<std::string>(), 10);
        return true;
    }

    static handle cast(const mpz_class& x, return_value_policy, handle) {
        return PyLong_FromString(x.get_str().c_str(), nullptr, 10);
    }
};
}  // namespace pybind11::detail

namespace {

CoefficientRing ring_for(std::uint64_t modulus) {
    return modulus == 0 ? CoefficientRing::exact() : CoefficientRing::residues(modulus);
}

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::optional<RealTopology> topology_or_complex(std::optional<int> euler_real) {
    if (!euler_real) return std::nullopt;
    return RealTopology(*euler_real);
}

}  // namespace

PYBIND11_MODULE(_realk3, m) {
    m.doc() = "Exact q-series engine for real and complex rational curve counts on K3 surfaces";

    py::register_exception<InvalidTopology>(m, "InvalidTopology", PyExc_ValueError);
    py::register_exception<RingMismatch>(m, "RingMismatch", PyExc_ValueError);
    py::register_exception<NotInvertible>(m, "NotInvertible", PyExc_ArithmeticError);

    py::class_<TruncatedSeries>(m, "Series")
        .def(py::init([](const std::vector<mpz_class>& coeffs, std::uint64_t modulus) {
                 return TruncatedSeries::from_integers(coeffs, ring_for(modulus));
             }),
             py::arg("coeffs"), py::arg("modulus") = 0)
        .def_property_readonly("order", &TruncatedSeries::order)
        .def_property_readonly("modulus", [](const TruncatedSeries& s) { return s.ring().modulus(); })
        .def("coeffs", &TruncatedSeries::to_integers)
        .def("__getitem__", &TruncatedSeries::coeff)
        .def("__len__", &TruncatedSeries::size)
        .def("__mul__", &ts_mul)
        .def("__pow__", &ts_pow)
        .def("inverse", &ts_inverse)
        .def("truncate", [](const TruncatedSeries& s, std::size_t order) { return realk3::truncate(s, order); })
        .def("reduce_mod", &ts_reduce_mod)
        .def("dissect", &ts_dissect, py::arg("j"), py::arg("r"))
        .def(py::self == py::self)
        .def("__repr__", [](const TruncatedSeries& s) { return to_string(s); });

    m.def(
        "factor_product",
        [](std::size_t step, int sign, long exponent, std::size_t order, std::uint64_t modulus) {
            return ts_factor_product(step, sign, exponent, order, ring_for(modulus));
        },
        "prod_{k>=1} (1 + sign q^{step k})^exponent", py::arg("step"), py::arg("sign"), py::arg("exponent"), py::arg("order"), py::arg("modulus") = 0);
    m.def(
        "yau_zaslow", [](std::size_t order, std::uint64_t modulus) { return yau_zaslow_series(order, ring_for(modulus)); },
        py::arg("order"), py::arg("modulus") = 0);
    m.def(
        "welschinger",
        [](int euler_real, std::size_t order, std::uint64_t modulus) {
            return welschinger_series(RealTopology(euler_real), order, ring_for(modulus));
        },
        py::arg("euler_real"), py::arg("order"), py::arg("modulus") = 0);
    m.def(
        "theta", [](std::size_t order, std::uint64_t modulus) { return gauss_theta_series(order, ring_for(modulus)); },
        py::arg("order"), py::arg("modulus") = 0);
    m.def(
        "klein_qj", [](std::size_t order, std::uint64_t modulus) { return klein_qj_series(order, ring_for(modulus)); },
        py::arg("order"), py::arg("modulus") = 0);
    m.def("sigma3", &sigma3);

    m.def(
        "table",
        [](const std::vector<int>& euler_reals, std::size_t g_max) {
            std::vector<RealTopology> tops(euler_reals.begin(), euler_reals.end());
            const auto t = compute_table(tops, g_max);
            py::list rows;
            for (const auto& row : t.rows) {
                py::dict w;
                for (std::size_t i = 0; i < tops.size(); ++i) w[py::int_(euler_reals[i])] = row.w[i];
                rows.append(py::dict(py::arg("g") = row.g, py::arg("w") = w, py::arg("c") = row.c));
            }
            return rows;
        },
        py::arg("euler_reals") = std::vector<int>{0, -18, 20}, py::arg("g_max") = 20);

    m.def(
        "verify_monotonicity",
        [](int euler_real, std::size_t g_max) {
            const auto r = verify_sign_monotonicity(RealTopology(euler_real), g_max);
            return py::dict(py::arg("passed") = r.passed, py::arg("first_violation") = r.first_violation,
                            py::arg("reason") = r.reason);
        },
        py::arg("euler_real"), py::arg("g_max"));
    m.def("refined_count_bound", &refined_count_bound, py::arg("k"), py::arg("w"));
    m.def("tritangent_bound", &tritangent_bound, py::arg("m"));

    m.def(
        "congruence_suite",
        [](const std::vector<int>& euler_reals, std::size_t g_max, bool exact) {
            std::vector<RealTopology> tops(euler_reals.begin(), euler_reals.end());
            py::list out;
            for (const auto& r : run_congruence_suite(tops, g_max, exact ? Arithmetic::exact : Arithmetic::modular))
                out.append(to_python(congruence_to_json(r)));
            return out;
        },
        py::arg("euler_reals"), py::arg("g_max"), py::arg("exact") = false);
    m.def(
        "check_lehner", [](std::size_t k_max) { return to_python(check_to_json(check_lehner(k_max), "congruences")); },
        py::arg("k_max"));
    m.def("parity_sequence", &parity_sequence, py::arg("k"));

    m.def("partition_p", &partition_P, py::arg("n"));
    m.def("partition_q", &partition_Q, py::arg("n"));
    m.def(
        "hr_estimate",
        [](const std::string& kind, std::size_t n) {
            if (kind != "P" && kind != "Q") throw py::value_error("kind must be 'P' or 'Q'");
            return hr_estimate(kind == "P" ? PartitionKind::P : PartitionKind::Q, n);
        },
        py::arg("kind"), py::arg("n"));
    m.def(
        "predicted_log_count",
        [](std::optional<int> euler_real, std::size_t n) { return predicted_log_count(topology_or_complex(euler_real), n); },
        py::arg("euler_real"), py::arg("n"));
    m.def(
        "convergence_report",
        [](std::optional<int> euler_real, const std::vector<std::size_t>& points) {
            return to_python(convergence_to_json(convergence_report(topology_or_complex(euler_real), points)));
        },
        py::arg("euler_real"), py::arg("points"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::vector<const char*> argv{"realk3"};
            for (const auto& a : args) argv.push_back(a.c_str());
            std::ostringstream out, err;
            const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
