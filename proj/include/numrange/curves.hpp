#pragma once

#include <functional>
#include <string>

#include "numrange/essrange.hpp"

namespace numrange {

// A closed strictly convex curve given by its support function h(theta),
// required to satisfy h + h'' > 0; points are gamma(theta) = e^{i theta}
// (h + i h'). Optionally restricted to an arc [theta_lo, theta_hi].
class ConvexAnalyticCurve {
public:
    static ConvexAnalyticCurve circle(cplx center, double radius);
    static ConvexAnalyticCurve ellipse(cplx center, double semi_major, double semi_minor,
                                       double tilt = 0.0);
    // piecewise-linear h, dh, d2h over strictly increasing angles; wraps when
    // the angles span 2 pi
    static ConvexAnalyticCurve tabulated(std::vector<double> thetas, std::vector<double> h,
                                         std::vector<double> dh, std::vector<double> d2h);

    ConvexAnalyticCurve restricted(double theta_lo, double theta_hi) const;

    double h(double theta) const;
    double dh(double theta) const;
    double d2h(double theta) const;

    bool is_arc() const { return is_arc_; }
    double theta_lo() const { return lo_; }
    double theta_hi() const { return hi_; }
    const std::string& summary() const { return summary_; }

private:
    ConvexAnalyticCurve() = default;
    void validate() const;
    std::function<double(double)> h_, dh_, d2h_;
    bool is_arc_ = false;
    double lo_ = 0.0, hi_ = 2.0 * 3.14159265358979323846;
    std::string summary_;
};

cplx curve_point(const ConvexAnalyticCurve& g, double theta);
cplx curve_tangent_direction(const ConvexAnalyticCurve& g, double theta);
std::vector<cplx> curve_polyline(const ConvexAnalyticCurve& g, int samples);

// Arc length of the curve between angles, integrating h + h''.
double curve_arc_length(const ConvexAnalyticCurve& g, double theta_lo, double theta_hi,
                        int samples = 4096);

// Does the tangent line of the curve at theta meet the convex region? Exact
// test on the region's vertices: min <= h(theta) <= max of Re(e^{-i theta} w).
bool tangent_meets_region(const ConvexAnalyticCurve& g, double theta,
                          const std::vector<cplx>& region);

struct Touch {
    double theta;
    cplx point;
};

struct CoincidenceArc {
    double theta_lo;
    double theta_hi;
    double arc_length;
    double max_gap;
    bool touches_arc_endpoint; // refined touch cluster at an endpoint
};

enum class IntersectVerdict { coincidence, finite_touch, disjoint };

struct IntersectionReport {
    IntersectVerdict verdict;
    std::vector<Touch> touches;
    std::vector<CoincidenceArc> arcs;
    double tol;
    double min_arc_length;
};

// Compare a swept numerical-range boundary against the curve: find where the
// boundary reaches the curve (within tol), grouped into coincidence arcs and
// isolated touch points. Throws ContainmentError if any boundary point lies
// outside the curve beyond tol.
IntersectionReport intersect_boundary(const NumericalRangeBoundary& b,
                                      const ConvexAnalyticCurve& g, double tol = -1.0,
                                      double min_arc_length = -1.0);

struct AndersonRecord {
    int n;
    int touch_count;
    double coincidence_total_length;
    double hausdorff; // boundary polyline vs dense curve polyline
    std::string conclusion; // "filled" or "not-filled"
    bool inconsistency; // more than n isolated touches yet not filled
    IntersectionReport report;
};

struct AndersonOptions {
    int grid = 256;
    bool refine = true;
    double tol = -1.0;      // default 1e-6 * scale
    double tol_fill = -1.0; // default 1e-4 * scale
};

// Circumscription census for one matrix: when a closed strictly convex curve
// surrounds the numerical range and the boundary reaches it at more than
// dim(A) points, the range must fill the whole curve.
AndersonRecord anderson_check(const ComplexMatrix& A, const ConvexAnalyticCurve& g,
                              const AndersonOptions& opt = {});

struct CircumscriptionOptions {
    EssOptions ess;
    // applied to the largest scheduled section; coarser than the standalone
    // default because that section is typically a few hundred rows
    AndersonOptions section{128, false, -1.0, -1.0};
    int tangent_grid = 720;
};

// Family-level experiment. The infinite-dimensional filling criterion needs
// every tangent line of the curve to avoid the essential numerical range, so
// tangent_failures lists the sampled angles whose tangent meets the (outer)
// estimate. tangents_clear is sound: a tangent missing the outer estimate
// misses the true essential range; a listed failure is only suspicion, since
// the estimate may overshoot. conclusion is one of "containment-violated",
// "hypothesis-failure", "hypothesis-ok".
struct CircumscriptionReport {
    bool containment_ok;
    bool tangents_clear;
    std::vector<double> tangent_failures;
    EssRangeEstimate ess;
    AndersonRecord largest_section;
    bool coincidence_present;
    std::string conclusion;
};

CircumscriptionReport circumscription_experiment(const OperatorFamily& fam,
                                                 const ConvexAnalyticCurve& g,
                                                 const std::vector<std::pair<int, int>>& schedule,
                                                 const CircumscriptionOptions& opt = {});

struct SegmentResult {
    bool empty;
    cplx from;
    cplx to;
};

// Maximal subsegment of [p, q] contained in the sampled numerical range
// (convexity makes it a single interval), located to the given resolution.
SegmentResult segment_coincidence(const NumericalRangeBoundary& b, cplx p, cplx q,
                                  double resolution = 1e-9);

} // namespace numrange
