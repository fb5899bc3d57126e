#pragma once

#include "numrange/geometry.hpp"
#include "numrange/hermitian_eig.hpp"

namespace numrange {

// One support-line probe of the numerical range at angle theta:
// mu is the largest eigenvalue of Re(e^{-i theta} A), and [boundary_lo,
// boundary_hi] is the segment (possibly a point) where the support line
// meets the range, ordered by increasing Im(e^{-i theta} z).
struct SupportSample {
    double theta = 0.0;
    double mu = 0.0;
    int multiplicity = 1;
    std::vector<std::vector<cplx>> top_vectors;
    double gap = 0.0; // mu minus the next eigenvalue below the top cluster
    cplx boundary_lo;
    cplx boundary_hi;
    bool is_segment = false;
};

struct FlatSegment {
    double theta;
    cplx lo;
    cplx hi;
};

// Discretized boundary of the numerical range: support samples sorted by
// theta in [0, 2pi), the induced CCW polyline, and the flat segments found.
struct NumericalRangeBoundary {
    std::vector<SupportSample> samples;
    std::vector<cplx> polyline;
    std::vector<FlatSegment> flat_segments;
    double scale = 1.0; // 1 + max |boundary point|
};

// 1e-8 * (1 + frobenius norm): the default clustering width for eigenvalues
// treated as one degenerate group.
double default_degeneracy_tol(const ComplexMatrix& A);

SupportSample support_value(const ComplexMatrix& A, double theta, double dtol = -1.0);

// Sweep grid equally spaced angles (grid >= 8). With refine, adjacent samples
// whose boundary chord exceeds scale/(2 grid) are bisected until the chord
// condition holds, the angle interval falls below 1e-12, or the total sample
// budget 16 * grid is spent.
NumericalRangeBoundary boundary_sweep(const ComplexMatrix& A, int grid,
                                      bool refine = false, double dtol = -1.0);

// Outer containment test: Re(e^{-i theta} z) <= mu(theta) + tol at every
// sampled angle. tol must be nonnegative.
bool contains_point(const NumericalRangeBoundary& b, cplx z, double tol);

// Polished global maximum of the support function (the numerical radius along
// the sampled directions, refined to local optimizer precision).
double max_support(const ComplexMatrix& A, int grid = 1024);

} // namespace numrange
