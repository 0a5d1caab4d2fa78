// Python bindings for the main operations: field construction, linearised
// polynomials, rank-metric codes, linear sets and the MacWilliams recursion.
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rankgeo/linset.hpp"
#include "rankgeo/macwilliams.hpp"
#include "rankgeo/polyexpr.hpp"

namespace py = pybind11;
using namespace rankgeo;

namespace {

std::vector<BigInt> bigints_from_py(const std::vector<long long>& v) {
    return std::vector<BigInt>(v.begin(), v.end());
}

std::vector<std::string> bigints_to_str(const std::vector<BigInt>& v) {
    std::vector<std::string> out;
    for (const auto& b : v) out.push_back(b.str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_rankgeo, m) {
    m.doc() = "exact rank-metric code and linear-set toolkit";

    py::register_exception<Error>(m, "RankgeoError");

    py::class_<Fe>(m, "Fe")
        .def_readonly("idx", &Fe::idx)
        .def(py::self == py::self)
        .def("__repr__", [](Fe x) {
            return "Fe(" + std::to_string(x.idx) + ")";
        });

    py::class_<FieldContext, std::shared_ptr<FieldContext>>(m, "FieldContext")
        .def_static(
            "make",
            [](std::int64_t p, int e, int n,
               std::optional<std::vector<int>> modulus, std::uint64_t budget) {
                return std::const_pointer_cast<FieldContext>(
                    FieldContext::make(p, e, n, std::move(modulus), budget));
            },
            py::arg("p"), py::arg("e"), py::arg("n"),
            py::arg("modulus") = std::nullopt,
            py::arg("budget") = kDefaultFieldBudget)
        .def_property_readonly("p", &FieldContext::p)
        .def_property_readonly("e", &FieldContext::e)
        .def_property_readonly("n", &FieldContext::n)
        .def_property_readonly("q", &FieldContext::q)
        .def_property_readonly("order", &FieldContext::order)
        .def_property_readonly("modulus", &FieldContext::modulus)
        .def("zero", &FieldContext::zero)
        .def("one", &FieldContext::one)
        .def("generator", &FieldContext::generator)
        .def("digits", &FieldContext::digits)
        .def("from_digits", &FieldContext::from_digits)
        .def("add", &FieldContext::add)
        .def("sub", &FieldContext::sub)
        .def("mul", &FieldContext::mul)
        .def("inv", &FieldContext::inv)
        .def("div", &FieldContext::div)
        .def("pow", &FieldContext::pow)
        .def("frobenius", &FieldContext::frobenius)
        .def("rel_trace", &FieldContext::rel_trace)
        .def("in_subfield", &FieldContext::in_subfield);

    py::class_<LinearizedPoly>(m, "LinearizedPoly")
        .def_readonly("coeffs", &LinearizedPoly::coeffs)
        .def("is_zero", &LinearizedPoly::is_zero)
        .def(py::self == py::self)
        .def("__repr__", [](const LinearizedPoly& f) {
            return render_linearized(f);
        });

    m.def("parse_poly", &parse_linearized, py::arg("text"), py::arg("ctx"));
    m.def("render_poly", &render_linearized);
    m.def("identity_poly", &identity_poly);
    m.def("trace_poly", &trace_poly);
    m.def("monomial", &monomial);
    m.def("eval_poly", &eval);
    m.def("compose", &compose);
    m.def("poly_rank", &rank);
    m.def("kernel_dim", &kernel_dim);

    py::enum_<ScalarField>(m, "ScalarField")
        .value("Fq", ScalarField::Fq)
        .value("Fqn", ScalarField::Fqn);

    py::class_<RankMetricCode>(m, "RankMetricCode")
        .def_readonly("scalar_field", &RankMetricCode::scalar_field)
        .def_readonly("basis", &RankMetricCode::basis);

    m.def("make_code", &make_code, py::arg("ctx"), py::arg("scalar_field"),
          py::arg("basis"));
    m.def("code_dim_over_fq", &code_dim_over_fq);
    m.def(
        "rank_distribution",
        [](const RankMetricCode& c, std::uint64_t budget) {
            auto d = rank_distribution(c, budget);
            return py::make_tuple(d.vector_counts, d.projective_counts);
        },
        py::arg("code"), py::arg("budget") = kDefaultEnumBudget);
    m.def("delsarte_dual", &delsarte_dual);
    m.def("is_mrd", &is_mrd, py::arg("code"),
          py::arg("budget") = kDefaultEnumBudget);
    m.def("common_kernel_trivial", &common_kernel_trivial);
    m.def("companion", &companion);

    py::class_<LinearSetSummary>(m, "LinearSetSummary")
        .def_readonly("rank", &LinearSetSummary::rank)
        .def_readonly("span_dim", &LinearSetSummary::span_dim)
        .def_readonly("w0", &LinearSetSummary::w0)
        .def_property_readonly("points",
                               [](const LinearSetSummary& s) {
                                   std::vector<std::pair<std::vector<Fe>, int>>
                                       out;
                                   for (const auto& [pt, w] : s.points)
                                       out.emplace_back(pt.coords, w);
                                   return out;
                               })
        .def("proper", &LinearSetSummary::proper);

    m.def("build_linear_set", &build_linear_set);
    m.def("hyperplane_weight", &hyperplane_weight);
    m.def("hyperplane_weight_distribution", &hyperplane_weight_distribution,
          py::arg("fs"), py::arg("budget") = kDefaultEnumBudget);
    m.def(
        "classify",
        [](const std::vector<LinearizedPoly>& fs, std::uint64_t budget) {
            auto c = classify(fs, budget);
            return py::make_tuple(c.scattered, c.scattered_wrt_hyperplanes,
                                  c.spans);
        },
        py::arg("fs"), py::arg("budget") = kDefaultEnumBudget);
    m.def(
        "bw_check",
        [](const RankMetricCode& c, std::uint64_t budget) {
            auto r = bw_check(c, budget);
            return py::make_tuple(r.lhs, r.rhs, r.equal);
        },
        py::arg("code"), py::arg("budget") = kDefaultEnumBudget);
    m.def(
        "project_subgeometry",
        [](const RankMetricCode& c) {
            auto r = project_subgeometry(c);
            return py::make_tuple(r.matches, r.projected_points.size());
        },
        py::arg("code"));
    m.def(
        "sigma2_profile",
        [](const RankMetricCode& c, std::uint64_t budget) {
            auto r = sigma2_profile(c, budget);
            return py::make_tuple(r.sigma1_hits, r.sigma2_hits);
        },
        py::arg("code"), py::arg("budget") = kDefaultEnumBudget);

    m.def("gauss", [](int a, int b, long long q) {
        return gauss_int(a, b, BigInt(q)).str();
    });
    m.def("gauss_poly",
          [](int a, int b) { return gauss_poly(a, b).to_string(); });
    m.def(
        "dual_distribution",
        [](const std::vector<long long>& A, int k, int mm, long long log_qC,
           long long q) {
            return bigints_to_str(dual_distribution(
                bigints_from_py(A), DualParams{k, mm, log_qC}, BigInt(q)));
        },
        py::arg("A"), py::arg("k"), py::arg("m"), py::arg("log_qC"),
        py::arg("q"));
    m.def("dual_distribution_symbolic", [](const std::string& A, int k, int mm,
                                           long long log_qC) {
        std::vector<std::string> out;
        for (const auto& b :
             dual_distribution_symbolic(parse_qpoly_list(A),
                                        DualParams{k, mm, log_qC}))
            out.push_back(b.to_string());
        return out;
    });
    m.def("b1_is_zero", [](const std::vector<long long>& A, int n,
                           long long q) {
        return b1_is_zero(bigints_from_py(A), n, BigInt(q));
    });
    m.def("b2_identity", [](const std::vector<long long>& A, int n,
                            long long q) {
        auto r = b2_identity(bigints_from_py(A), n, BigInt(q));
        return py::make_tuple(r.lhs.str(), r.rhs.str(), r.equal);
    });
    m.def("sum_identity_check", [](const std::vector<long long>& A, int n,
                                   long long q) {
        return sum_identity_check(bigints_from_py(A), n, BigInt(q));
    });
}
