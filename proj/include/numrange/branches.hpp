#pragma once

#include "numrange/support.hpp"

namespace numrange {

// One analytically continued eigenvalue branch of theta -> Re(e^{-i theta} A).
// Samples are parallel arrays indexed by step, sorted by theta. zeta is the
// numerical-range point <A phi, phi>; gap is the distance from the branch
// eigenvalue to the nearest eigenvalue outside its cluster (0 inside a
// degenerate cluster); is_top marks samples where the branch attains the
// largest eigenvalue.
struct Branch {
    std::vector<double> thetas;
    std::vector<double> lambdas;
    std::vector<std::vector<cplx>> phis;
    std::vector<cplx> zetas;
    std::vector<double> gaps;
    std::vector<int> is_top;
};

struct CrossingEvent {
    double theta;
    int branch_a;
    int branch_b;
};

struct TraceResult {
    std::vector<Branch> branches;
    std::vector<CrossingEvent> crossings;
    double min_overlap = 1.0; // smallest accepted continuation overlap
};

struct TraceOptions {
    double overlap_threshold = 0.70710678118654752; // 1/sqrt(2)
    int step_floor_divisor = 64;
    double degeneracy_tol = -1.0; // <0: default_degeneracy_tol(A)
};

// Trace the k_top highest eigenvalue branches of Re(e^{-i theta} A) from
// theta_center outward to theta_center +- halfwidth. Continuation matches old
// eigenvectors to new eigenvalue clusters by projection overlap; a step whose
// best overlap falls below the threshold is halved, down to step divided by
// step_floor_divisor, after which a NumericalError names the failing theta.
TraceResult trace_branches(const ComplexMatrix& A, double theta_center,
                           double halfwidth, double step, int k_top,
                           const TraceOptions& opt = {});

struct HFReport {
    double max_deviation = 0.0;
    int skipped = 0; // samples excluded for small isolation gap
};

// Compare the finite-difference derivative of lambda along a branch with the
// first-order perturbation identity lambda'(theta) = Im(e^{-i theta} zeta).
HFReport hellmann_feynman_check(const Branch& branch, double dtol);

struct CurvePoint {
    double theta;
    cplx z;
};

// Boundary parametrization z(theta) = e^{i theta}(mu + i mu') from a sweep,
// with mu' by wrapped central differences. Samples with degenerate top
// eigenvalue are excluded (the derivative need not exist there).
std::vector<CurvePoint> boundary_curve_from_support(const NumericalRangeBoundary& b);

enum class CurveClass { point, regular, irregular_numerical };

// Classify the numerical-range curve traced by a branch: a single point, a
// regular curve (zeta derivative bounded away from zero), or numerically
// irregular.
CurveClass regularity_check(const Branch& branch, double tol);

// (gap, multiplicity) of the top eigenvalue of Re(e^{-i theta} A).
std::pair<double, int> isolation_gap(const ComplexMatrix& A, double theta,
                                     double dtol = -1.0);

} // namespace numrange
