#pragma once

#include "numrange/complex_matrix.hpp"

namespace numrange {

// Im(conj(a) b): positive when b lies counterclockwise of a.
double cross(cplx a, cplx b);

// Andrew monotone chain. Returns the hull CCW with collinear points dropped;
// inputs of size <= 2 (after exact deduplication) pass through.
std::vector<cplx> convex_hull(std::vector<cplx> pts);

// The set { z : Re(e^{-i theta} z) <= offset }.
struct HalfPlane {
    double theta;
    double offset;
};

// Sutherland-Hodgman clip of a convex CCW polygon by one half plane. The
// result may have fewer than 3 vertices when the intersection degenerates.
std::vector<cplx> clip_half_plane(const std::vector<cplx>& poly, const HalfPlane& hp);

// Intersection of half planes, seeded with the square [-bound, bound]^2.
std::vector<cplx> polygon_from_half_planes(const std::vector<HalfPlane>& hps, double bound);

// max over vertices of Re(e^{-i theta} v); -inf for an empty polygon.
double polygon_support(const std::vector<cplx>& poly, double theta);

double polygon_area(const std::vector<cplx>& poly);

// Signed-distance containment test: true when z is within tol of the closed
// region bounded by the CCW polygon.
bool polygon_contains(const std::vector<cplx>& poly, cplx z, double tol);

double point_segment_distance(cplx z, cplx a, cplx b);
double point_polyline_distance(cplx z, const std::vector<cplx>& pts, bool closed);

// 0 inside the region, boundary distance outside; +inf for an empty polygon.
double distance_to_polygon(cplx z, const std::vector<cplx>& poly);

// Symmetric discrete Hausdorff distance: each curve's vertices against the
// other curve's polyline.
double hausdorff_distance(const std::vector<cplx>& p, const std::vector<cplx>& q, bool closed);

std::vector<cplx> sample_circle(cplx center, double radius, int count);

} // namespace numrange
