#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "numrange/branches.hpp"
#include "numrange/complex_matrix.hpp"
#include "numrange/curves.hpp"
#include "numrange/errors.hpp"
#include "numrange/essrange.hpp"
#include "numrange/gallery.hpp"
#include "numrange/geometry.hpp"
#include "numrange/hermitian_eig.hpp"
#include "numrange/io.hpp"
#include "numrange/support.hpp"

namespace py = pybind11;
using namespace numrange;

namespace {

ComplexMatrix matrix_from_rows(const std::vector<std::vector<cplx>>& rows) {
    const int n = static_cast<int>(rows.size());
    ComplexMatrix A(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw DimensionError("matrix rows must form a square array");
        for (int j = 0; j < n; ++j) A(i, j) = rows[i][j];
    }
    return A;
}

std::vector<std::vector<cplx>> matrix_rows(const ComplexMatrix& A) {
    std::vector<std::vector<cplx>> rows(A.dim(), std::vector<cplx>(A.dim()));
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < A.dim(); ++j) rows[i][j] = A(i, j);
    return rows;
}

const char* verdict_name(SupportVerdict v) {
    switch (v) {
    case SupportVerdict::essential: return "essential";
    case SupportVerdict::discrete: return "discrete";
    default: return "inconclusive";
    }
}

const char* intersect_name(IntersectVerdict v) {
    switch (v) {
    case IntersectVerdict::coincidence: return "coincidence";
    case IntersectVerdict::finite_touch: return "finite-touch";
    default: return "disjoint";
    }
}

} // namespace

PYBIND11_MODULE(numrange, m) {
    m.doc() = "numerical ranges of matrices and finite sections of structured operators";

    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<CurveInvalidError>(m, "CurveInvalidError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);
    py::register_exception<ContainmentError>(m, "ContainmentError", PyExc_RuntimeError);

    py::class_<ComplexMatrix>(m, "ComplexMatrix")
        .def(py::init(&matrix_from_rows), py::arg("rows"))
        .def_static("identity", &ComplexMatrix::identity, py::arg("n"))
        .def_static("diagonal", &ComplexMatrix::diagonal, py::arg("entries"))
        .def_property_readonly("n", &ComplexMatrix::dim)
        .def("rows", &matrix_rows)
        .def("frobenius_norm", &ComplexMatrix::frobenius_norm)
        .def("is_hermitian", &ComplexMatrix::is_hermitian, py::arg("tol") = -1.0)
        .def("__repr__", [](const ComplexMatrix& A) {
            return "ComplexMatrix(n=" + std::to_string(A.dim()) + ")";
        });

    m.def("rayleigh", &rayleigh, py::arg("A"), py::arg("x"));
    m.def("real_part", &real_part);
    m.def("imag_part", &imag_part);
    m.def("rotate", &rotate, py::arg("A"), py::arg("theta"));
    m.def("scale", &scale, py::arg("A"), py::arg("s"));
    m.def("add_scaled_identity", &add_scaled_identity, py::arg("A"), py::arg("s"));
    m.def("direct_sum", &direct_sum);

    py::class_<EigenDecomposition>(m, "EigenDecomposition")
        .def_readonly("values", &EigenDecomposition::values)
        .def_readonly("vectors", &EigenDecomposition::vectors);
    m.def("hermitian_eig", &hermitian_eig, py::arg("A"));

    m.def("convex_hull", &convex_hull, py::arg("points"));
    m.def("hausdorff_distance", &hausdorff_distance, py::arg("p"), py::arg("q"),
          py::arg("closed"));

    py::class_<SupportSample>(m, "SupportSample")
        .def_readonly("theta", &SupportSample::theta)
        .def_readonly("mu", &SupportSample::mu)
        .def_readonly("multiplicity", &SupportSample::multiplicity)
        .def_readonly("gap", &SupportSample::gap)
        .def_readonly("boundary_lo", &SupportSample::boundary_lo)
        .def_readonly("boundary_hi", &SupportSample::boundary_hi)
        .def_readonly("is_segment", &SupportSample::is_segment);
    py::class_<FlatSegment>(m, "FlatSegment")
        .def_readonly("theta", &FlatSegment::theta)
        .def_readonly("lo", &FlatSegment::lo)
        .def_readonly("hi", &FlatSegment::hi);
    py::class_<NumericalRangeBoundary>(m, "NumericalRangeBoundary")
        .def_readonly("samples", &NumericalRangeBoundary::samples)
        .def_readonly("polyline", &NumericalRangeBoundary::polyline)
        .def_readonly("flat_segments", &NumericalRangeBoundary::flat_segments)
        .def_readonly("scale", &NumericalRangeBoundary::scale);
    m.def("support_value", &support_value, py::arg("A"), py::arg("theta"),
          py::arg("degeneracy_tol") = -1.0);
    m.def("boundary_sweep", &boundary_sweep, py::arg("A"), py::arg("grid"),
          py::arg("refine") = false, py::arg("degeneracy_tol") = -1.0);
    m.def("contains_point", &contains_point, py::arg("boundary"), py::arg("z"),
          py::arg("tol"));
    m.def("max_support", &max_support, py::arg("A"), py::arg("grid") = 1024);

    py::class_<Branch>(m, "Branch")
        .def_readonly("thetas", &Branch::thetas)
        .def_readonly("lambdas", &Branch::lambdas)
        .def_readonly("phis", &Branch::phis)
        .def_readonly("zetas", &Branch::zetas)
        .def_readonly("gaps", &Branch::gaps)
        .def_readonly("is_top", &Branch::is_top);
    py::class_<CrossingEvent>(m, "CrossingEvent")
        .def_readonly("theta", &CrossingEvent::theta)
        .def_readonly("branch_a", &CrossingEvent::branch_a)
        .def_readonly("branch_b", &CrossingEvent::branch_b);
    py::class_<TraceResult>(m, "TraceResult")
        .def_readonly("branches", &TraceResult::branches)
        .def_readonly("crossings", &TraceResult::crossings)
        .def_readonly("min_overlap", &TraceResult::min_overlap);
    py::class_<HFReport>(m, "HFReport")
        .def_readonly("max_deviation", &HFReport::max_deviation)
        .def_readonly("skipped", &HFReport::skipped);
    m.def(
        "trace_branches",
        [](const ComplexMatrix& A, double center, double halfwidth, double step, int k_top) {
            return trace_branches(A, center, halfwidth, step, k_top);
        },
        py::arg("A"), py::arg("theta_center"), py::arg("halfwidth"), py::arg("step"),
        py::arg("k_top") = 1);
    m.def("hellmann_feynman_check", &hellmann_feynman_check, py::arg("branch"),
          py::arg("degeneracy_tol"));
    m.def("default_degeneracy_tol", &default_degeneracy_tol, py::arg("A"));

    py::enum_<DiagonalRuleName>(m, "DiagonalRuleName")
        .value("exp_i_over_k", DiagonalRuleName::exp_i_over_k)
        .value("one_then_i_over_k", DiagonalRuleName::one_then_i_over_k);
    py::class_<OperatorFamily>(m, "OperatorFamily")
        .def_static("diagonal", &OperatorFamily::diagonal, py::arg("rule"))
        .def_static("unit_shift", &OperatorFamily::unit_shift)
        .def_static("weighted_shift", &OperatorFamily::weighted_shift, py::arg("weights"))
        .def_static("block_diagonal", &OperatorFamily::block_diagonal, py::arg("blocks"))
        .def_readonly("descriptor", &OperatorFamily::descriptor);
    m.def(
        "truncate",
        [](const OperatorFamily& fam, int n) { return numrange::truncate(fam, n); },
        py::arg("family"), py::arg("n"));
    m.def("tail_compression", &tail_compression, py::arg("family"), py::arg("n"),
          py::arg("N"));

    py::class_<EssOptions>(m, "EssOptions")
        .def(py::init<>())
        .def_readwrite("grid", &EssOptions::grid)
        .def_readwrite("drift_inflation", &EssOptions::drift_inflation);
    py::class_<EssRangeEstimate>(m, "EssRangeEstimate")
        .def_readonly("schedule", &EssRangeEstimate::schedule)
        .def_readonly("polygons", &EssRangeEstimate::polygons)
        .def_readonly("running_intersection", &EssRangeEstimate::running_intersection)
        .def_readonly("intersection", &EssRangeEstimate::intersection)
        .def_readonly("drift", &EssRangeEstimate::drift)
        .def_readonly("inflation", &EssRangeEstimate::inflation)
        .def_readonly("empty", &EssRangeEstimate::empty);
    m.def("ess_range_estimate", &ess_range_estimate, py::arg("family"), py::arg("schedule"),
          py::arg("options") = EssOptions{});
    py::class_<SupportCheckWindow>(m, "SupportCheckWindow")
        .def_readonly("lo", &SupportCheckWindow::lo)
        .def_readonly("hi", &SupportCheckWindow::hi)
        .def_readonly("mu_full", &SupportCheckWindow::mu_full)
        .def_readonly("mu_tail", &SupportCheckWindow::mu_tail)
        .def_readonly("gap", &SupportCheckWindow::gap);
    py::class_<SupportCheckReport>(m, "SupportCheckReport")
        .def_property_readonly(
            "verdict", [](const SupportCheckReport& r) { return verdict_name(r.verdict); })
        .def_readonly("windows", &SupportCheckReport::windows)
        .def_readonly("floor", &SupportCheckReport::floor)
        .def_readonly("delta_slope", &SupportCheckReport::delta_slope)
        .def_readonly("gap_slope", &SupportCheckReport::gap_slope);
    m.def("essential_support_check", &essential_support_check, py::arg("family"),
          py::arg("theta"), py::arg("schedule"), py::arg("options") = EssOptions{});
    m.def("default_schedule", &default_schedule);

    py::class_<ConvexAnalyticCurve>(m, "ConvexAnalyticCurve")
        .def_static("circle", &ConvexAnalyticCurve::circle, py::arg("center"),
                    py::arg("radius"))
        .def_static("ellipse", &ConvexAnalyticCurve::ellipse, py::arg("center"),
                    py::arg("semi_major"), py::arg("semi_minor"), py::arg("tilt") = 0.0)
        .def_static("tabulated", &ConvexAnalyticCurve::tabulated, py::arg("thetas"),
                    py::arg("h"), py::arg("dh"), py::arg("d2h"))
        .def("restricted", &ConvexAnalyticCurve::restricted, py::arg("theta_lo"),
             py::arg("theta_hi"))
        .def("h", &ConvexAnalyticCurve::h, py::arg("theta"))
        .def_property_readonly("is_arc", &ConvexAnalyticCurve::is_arc)
        .def("__repr__", [](const ConvexAnalyticCurve& g) { return g.summary(); });
    m.def("curve_point", &curve_point, py::arg("curve"), py::arg("theta"));
    m.def("curve_polyline", &curve_polyline, py::arg("curve"), py::arg("samples"));

    py::class_<Touch>(m, "Touch")
        .def_readonly("theta", &Touch::theta)
        .def_readonly("point", &Touch::point);
    py::class_<CoincidenceArc>(m, "CoincidenceArc")
        .def_readonly("theta_lo", &CoincidenceArc::theta_lo)
        .def_readonly("theta_hi", &CoincidenceArc::theta_hi)
        .def_readonly("arc_length", &CoincidenceArc::arc_length)
        .def_readonly("max_gap", &CoincidenceArc::max_gap)
        .def_readonly("touches_arc_endpoint", &CoincidenceArc::touches_arc_endpoint);
    py::class_<IntersectionReport>(m, "IntersectionReport")
        .def_property_readonly(
            "verdict", [](const IntersectionReport& r) { return intersect_name(r.verdict); })
        .def_readonly("touches", &IntersectionReport::touches)
        .def_readonly("arcs", &IntersectionReport::arcs)
        .def_readonly("tol", &IntersectionReport::tol)
        .def_readonly("min_arc_length", &IntersectionReport::min_arc_length);
    m.def("intersect_boundary", &intersect_boundary, py::arg("boundary"), py::arg("curve"),
          py::arg("tol") = -1.0, py::arg("min_arc_length") = -1.0);

    py::class_<AndersonOptions>(m, "AndersonOptions")
        .def(py::init<>())
        .def_readwrite("grid", &AndersonOptions::grid)
        .def_readwrite("refine", &AndersonOptions::refine)
        .def_readwrite("tol", &AndersonOptions::tol)
        .def_readwrite("tol_fill", &AndersonOptions::tol_fill);
    py::class_<AndersonRecord>(m, "AndersonRecord")
        .def_readonly("n", &AndersonRecord::n)
        .def_readonly("touch_count", &AndersonRecord::touch_count)
        .def_readonly("coincidence_total_length", &AndersonRecord::coincidence_total_length)
        .def_readonly("hausdorff", &AndersonRecord::hausdorff)
        .def_readonly("conclusion", &AndersonRecord::conclusion)
        .def_readonly("inconsistency", &AndersonRecord::inconsistency)
        .def_readonly("report", &AndersonRecord::report);
    m.def("anderson_check", &anderson_check, py::arg("A"), py::arg("curve"),
          py::arg("options") = AndersonOptions{});

    py::class_<CircumscriptionOptions>(m, "CircumscriptionOptions")
        .def(py::init<>())
        .def_readwrite("ess", &CircumscriptionOptions::ess)
        .def_readwrite("section", &CircumscriptionOptions::section)
        .def_readwrite("tangent_grid", &CircumscriptionOptions::tangent_grid);
    py::class_<CircumscriptionReport>(m, "CircumscriptionReport")
        .def_readonly("containment_ok", &CircumscriptionReport::containment_ok)
        .def_readonly("tangents_clear", &CircumscriptionReport::tangents_clear)
        .def_readonly("tangent_failures", &CircumscriptionReport::tangent_failures)
        .def_readonly("ess", &CircumscriptionReport::ess)
        .def_readonly("largest_section", &CircumscriptionReport::largest_section)
        .def_readonly("coincidence_present", &CircumscriptionReport::coincidence_present)
        .def_readonly("conclusion", &CircumscriptionReport::conclusion);
    m.def("circumscription_experiment", &circumscription_experiment, py::arg("family"),
          py::arg("curve"), py::arg("schedule"),
          py::arg("options") = CircumscriptionOptions{});

    py::class_<SegmentResult>(m, "SegmentResult")
        .def_readonly("empty", &SegmentResult::empty)
        .def_readonly("from_", &SegmentResult::from)
        .def_readonly("to", &SegmentResult::to);
    m.def("segment_coincidence", &segment_coincidence, py::arg("boundary"), py::arg("p"),
          py::arg("q"), py::arg("resolution") = 1e-9);

    py::class_<GalleryItem>(m, "GalleryItem")
        .def_readonly("name", &GalleryItem::name)
        .def_property_readonly("is_family", &GalleryItem::is_family)
        .def("matrix",
             [](const GalleryItem& it) {
                 if (it.is_family())
                     throw PreconditionError("gallery item is an operator family");
                 return it.matrix();
             })
        .def("family",
             [](const GalleryItem& it) {
                 if (!it.is_family())
                     throw PreconditionError("gallery item is a plain matrix");
                 return it.family();
             })
        .def("section", &GalleryItem::section, py::arg("n"))
        .def_property_readonly("summary",
                               [](const GalleryItem& it) { return it.truth.summary; })
        .def_property_readonly("eigenvalues",
                               [](const GalleryItem& it) { return it.truth.eigenvalues; });
    m.def("gallery_build", &gallery_build, py::arg("spec"), py::arg("default_n") = 64);
    m.def("gallery_names", &gallery_names);

    m.def("parse_family", &io::parse_family, py::arg("descriptor"));
    m.def("parse_curve", &io::parse_curve, py::arg("descriptor"));
    m.def("parse_schedule", &io::parse_schedule, py::arg("descriptor"));
}
