#pragma once

#include <iosfwd>

#include "numrange/branches.hpp"
#include "numrange/curves.hpp"

namespace numrange::io {

// {"n": 2, "entries": [[[re, im], ...], ...]} with entries[i][j] = [re, im]
ComplexMatrix read_matrix_json(std::istream& in);
ComplexMatrix read_matrix_json_file(const std::string& path);
void write_matrix_json(std::ostream& out, const ComplexMatrix& A);

// theta,mu,multiplicity,px,py,flat rows; flat samples emit two rows, the low
// then the high end of the segment
void sweep_csv(std::ostream& out, const NumericalRangeBoundary& b);

// theta,branch,lambda,zx,zy,is_top rows followed by a comment line with the
// largest perturbation-identity deviation
void branches_csv(std::ostream& out, const TraceResult& res, double hf_max_deviation);

void ess_json(std::ostream& out, const EssRangeEstimate& est);
void anderson_json(std::ostream& out, const AndersonRecord& rec);
void circumscription_json(std::ostream& out, const CircumscriptionReport& rep);

struct SvgLayer {
    std::vector<cplx> points;
    std::string color = "#1f77b4";
    bool closed = false;
    bool dots = false; // circles at the points instead of a path
};

void svg_plot(std::ostream& out, const std::vector<SvgLayer>& layers, double width = 640.0);

// "unit-shift", "diagonal:exp-i-over-k", "diagonal:one-then-i-over-k",
// "weighted-shift:w1,w2,..."
OperatorFamily parse_family(const std::string& spec);

// "circle:cx:cy:r", "ellipse:cx:cy:a:b[:tilt]", "tabulated:file.json";
// an optional ":arc:lo:hi" suffix restricts to an arc
ConvexAnalyticCurve parse_curve(const std::string& spec);

// "32:64,64:128" -> {(32,64), (64,128)}
std::vector<std::pair<int, int>> parse_schedule(const std::string& spec);

// "x,y" or "x"
cplx parse_complex(const std::string& spec);

} // namespace numrange::io
