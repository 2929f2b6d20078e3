// Python bindings for the verification laboratory.
//
// The module exposes the main operations with plain python types: datasets
// load into lightweight handle objects, L-values come back as complex
// numbers plus diagnostics, and full verification reports arrive as the
// same dict structure the CLI emits with --json.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "thetalab/characters.hpp"
#include "thetalab/curves.hpp"
#include "thetalab/dataset.hpp"
#include "thetalab/lfunc.hpp"
#include "thetalab/recognition.hpp"
#include "thetalab/tables.hpp"
#include "thetalab/verify.hpp"

namespace py = pybind11;
using namespace thetalab;

namespace {

py::object py_bigint(const mpz_class& z) {
    return py::module_::import("builtins").attr("int")(z.get_str());
}

std::complex<double> to_std(const Complex& c) { return {c.re.to_double(), c.im.to_double()}; }

mpfr_prec_t prec_or_default(long bits) { return bits > 0 ? static_cast<mpfr_prec_t>(bits) : kDefaultPrec; }

VerifyOptions build_options(long bits, int digits, const std::string& denominator_bound, double tol,
                            std::optional<unsigned long> generator, size_t cutoff) {
    VerifyOptions opts;
    opts.precision_bits = prec_or_default(bits);
    opts.target_digits = digits;
    opts.denominator_bound = mpz_class(denominator_bound);
    opts.tolerance = tol;
    opts.generator = generator;
    opts.cutoff_override = cutoff;
    return opts;
}

}  // namespace

PYBIND11_MODULE(_thetalab, m) {
    m.doc() = "equivariant L-value verification laboratory";
    m.attr("__version__") = "0.1.0";

    py::register_exception<InputError>(m, "InputError");

    py::class_<CurveData>(m, "Curve")
        .def_property_readonly("label", [](const CurveData& c) { return c.label; })
        .def_property_readonly("genus", [](const CurveData& c) { return c.genus; })
        .def_property_readonly("conductor", [](const CurveData& c) { return py_bigint(c.conductor); })
        .def_property_readonly("torsion", [](const CurveData& c) { return c.torsion_q; })
        .def_property_readonly("equation", [](const CurveData& c) { return c.equation_str(); })
        .def("__repr__", [](const CurveData& c) {
            std::ostringstream os;
            os << "<Curve " << c.label << ": " << c.equation_str() << ">";
            return os.str();
        });

    py::class_<Dataset>(m, "Dataset")
        .def_property_readonly("labels",
                               [](const Dataset& ds) {
                                   std::vector<std::string> out;
                                   for (const auto& c : ds.curves) out.push_back(c.label);
                                   return out;
                               })
        .def("curve", &Dataset::by_label, py::arg("label"), py::return_value_policy::reference_internal)
        .def("__len__", [](const Dataset& ds) { return ds.curves.size(); })
        .def("__contains__", [](const Dataset& ds, const std::string& label) { return ds.has(label); });

    m.def("load_dataset", &load_dataset, py::arg("path"), "Load and validate a curve dataset from JSON.");

    m.def(
        "count_points",
        [](const CurveData& curve, unsigned long ell, int k) { return count_points(curve, ell, k); },
        py::arg("curve"), py::arg("ell"), py::arg("k") = 1,
        "Number of points on the reduction over the field with ell^k elements (k = 1 or 2), "
        "including points at infinity.");

    m.def(
        "euler_factor",
        [](const CurveData& curve, unsigned long ell) {
            const EulerFactor ef = euler_factor(curve, ell);
            return py::make_tuple(ef.str(), ef.coeffs);
        },
        py::arg("curve"), py::arg("ell"),
        "Euler factor at ell as (display string, coefficient list [1, c1, ...]).");

    m.def(
        "dirichlet_coeffs",
        [](const CurveData& curve, size_t M) {
            const DirichletSeries series = dirichlet_coeffs(curve, M);
            return std::vector<long long>(series.a.begin() + 1, series.a.end());  // drop the unused 0 slot
        },
        py::arg("curve"), py::arg("M"), "Dirichlet coefficients a_1..a_M of the L-series.");

    m.def(
        "period",
        [](const CurveData& curve, long bits) { return curve.period(prec_or_default(bits)).str(30); },
        py::arg("curve"), py::arg("bits") = 0, "Stored real period as a decimal string.");

    m.def(
        "period_agm",
        [](const CurveData& curve, long bits) {
            return elliptic_real_period_agm(curve, prec_or_default(bits)).str(30);
        },
        py::arg("curve"), py::arg("bits") = 0,
        "Recompute the real period of a genus-1 curve by the arithmetic-geometric mean.");

    m.def(
        "gauss_sum",
        [](unsigned p, unsigned q, unsigned j, long bits, std::optional<unsigned long> generator) {
            const FieldSetup setup = make_setup(p, q, generator);
            const DirichletCharacter psi(setup, j % p);
            return to_std(gauss_sum(psi, prec_or_default(bits)));
        },
        py::arg("p"), py::arg("q"), py::arg("j"), py::arg("bits") = 0, py::arg("generator") = py::none(),
        "Gauss sum of the j-th order-p character modulo q (trivial character gives -1).");

    m.def(
        "character_value",
        [](unsigned p, unsigned q, unsigned j, unsigned long n, std::optional<unsigned long> generator) {
            const FieldSetup setup = make_setup(p, q, generator);
            const DirichletCharacter psi(setup, j % p);
            return to_std(psi.value(n, 64));
        },
        py::arg("p"), py::arg("q"), py::arg("j"), py::arg("n"), py::arg("generator") = py::none(),
        "Value of the j-th order-p character modulo q at n (0 on multiples of q).");

    m.def(
        "lvalue",
        [](const CurveData& curve, unsigned p, unsigned q, unsigned j, int digits, long bits,
           std::optional<unsigned long> generator, size_t cutoff) {
            const FieldSetup setup = make_setup(p, q, generator);
            const mpz_class n_eff = j == 0 ? curve.conductor : twisted_conductor(curve, q);
            const size_t M = cutoff ? cutoff : afe_cutoff(n_eff, curve.genus, digits);
            const DirichletSeries series = dirichlet_coeffs(curve, M);
            TwistedLSpec spec;
            spec.d = curve.genus;
            spec.N = n_eff;
            spec.coeffs = &series.a;
            spec.precision_bits = prec_or_default(bits);
            spec.target_digits = digits;
            spec.cutoff_override = M;
            std::optional<DirichletCharacter> psi;
            if (j != 0) {
                psi.emplace(setup, j % p);
                spec.psi = &*psi;
            }
            const LValueResult res = lvalue_s1(spec);
            py::dict out;
            out["value"] = to_std(res.value);
            out["value_str"] = res.value.str(30);
            out["root_number"] = to_std(res.root_number);
            out["err_estimate"] = res.err_estimate.to_double();
            out["terms_used"] = res.terms_used;
            out["conductor_used"] = py_bigint(n_eff);
            return out;
        },
        py::arg("curve"), py::arg("p"), py::arg("q"), py::arg("j"), py::arg("digits") = 12, py::arg("bits") = 0,
        py::arg("generator") = py::none(), py::arg("cutoff") = 0,
        "L(1) of the curve twisted by the j-th order-p character modulo q (j = 0: untwisted).");

    m.def(
        "recognize",
        [](const std::vector<std::complex<double>>& values, unsigned p, const std::string& denominator_bound,
           double tol) {
            std::vector<Complex> tuple;
            const mpfr_prec_t prec = 64;
            for (const auto& v : values) tuple.emplace_back(Real(v.real(), prec), Real(v.imag(), prec));
            const TupleRecognition rec =
                conjugate_tuple_solve(tuple, p, mpz_class(denominator_bound), Real(tol, prec));
            py::dict out;
            out["ok"] = rec.ok;
            if (rec.ok) {
                out["element"] = rec.element.str();
                std::vector<std::string> cs;
                for (const auto& c : rec.element.coeffs()) cs.push_back(rational_str(c));
                out["coeffs"] = cs;
                out["residual"] = rec.residual.to_double();
            } else {
                out["failure"] = rec.failure;
            }
            return out;
        },
        py::arg("values"), py::arg("p"), py::arg("denominator_bound") = "100000000", py::arg("tol") = 1e-8,
        "Recognize a tuple of p-1 conjugate embeddings as an exact cyclotomic number.");

    m.def(
        "verify",
        [](const CurveData& curve, unsigned p, unsigned q, long bits, int digits,
           const std::string& denominator_bound, double tol, std::optional<unsigned long> generator,
           size_t cutoff) {
            const VerifyOptions opts = build_options(bits, digits, denominator_bound, tol, generator, cutoff);
            const VerificationReport rep = verify_pair(curve, p, q, opts);
            return py::module_::import("json").attr("loads")(render_report_json(rep));
        },
        py::arg("curve"), py::arg("p"), py::arg("q"), py::arg("bits") = 0, py::arg("digits") = 12,
        py::arg("denominator_bound") = "100000000", py::arg("tol") = 1e-8, py::arg("generator") = py::none(),
        py::arg("cutoff") = 0,
        "Full verification of one curve at one (p, q); returns the report as a dict.");
}
