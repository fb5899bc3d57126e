#include "numrange/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace numrange {

double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

std::vector<cplx> convex_hull(std::vector<cplx> pts) {
    std::sort(pts.begin(), pts.end(), [](cplx a, cplx b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const int n = static_cast<int>(pts.size());
    if (n <= 2) return pts;
    std::vector<cplx> h(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0.0) --k;
        h[k++] = pts[i];
    }
    const int lower = k + 1;
    for (int i = n - 2; i >= 0; --i) {
        while (k >= lower && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0.0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

std::vector<cplx> clip_half_plane(const std::vector<cplx>& poly, const HalfPlane& hp) {
    const cplx dir = std::polar(1.0, -hp.theta);
    auto margin = [&](cplx z) { return hp.offset - (dir * z).real(); };
    std::vector<cplx> out;
    const int n = static_cast<int>(poly.size());
    for (int i = 0; i < n; ++i) {
        const cplx a = poly[i], b = poly[(i + 1) % n];
        const double va = margin(a), vb = margin(b);
        if (va >= 0.0) {
            out.push_back(a);
            if (vb < 0.0) out.push_back(a + (va / (va - vb)) * (b - a));
        } else if (vb >= 0.0) {
            out.push_back(a + (va / (va - vb)) * (b - a));
        }
    }
    return out;
}

std::vector<cplx> polygon_from_half_planes(const std::vector<HalfPlane>& hps, double bound) {
    std::vector<cplx> poly = {cplx(-bound, -bound), cplx(bound, -bound),
                              cplx(bound, bound), cplx(-bound, bound)};
    for (const HalfPlane& hp : hps) {
        poly = clip_half_plane(poly, hp);
        if (poly.size() < 3) return poly;
    }
    return poly;
}

double polygon_support(const std::vector<cplx>& poly, double theta) {
    double best = -std::numeric_limits<double>::infinity();
    const cplx dir = std::polar(1.0, -theta);
    for (cplx v : poly) best = std::max(best, (dir * v).real());
    return best;
}

double polygon_area(const std::vector<cplx>& poly) {
    double a = 0.0;
    const int n = static_cast<int>(poly.size());
    for (int i = 0; i < n; ++i) a += cross(poly[i], poly[(i + 1) % n]);
    return 0.5 * a;
}

bool polygon_contains(const std::vector<cplx>& poly, cplx z, double tol) {
    const int n = static_cast<int>(poly.size());
    if (n == 0) return false;
    if (n < 3) return point_polyline_distance(z, poly, false) <= tol;
    for (int i = 0; i < n; ++i) {
        const cplx a = poly[i], b = poly[(i + 1) % n];
        const double len = std::abs(b - a);
        if (len == 0.0) continue;
        if (cross(b - a, z - a) / len < -tol) return false;
    }
    return true;
}

double point_segment_distance(cplx z, cplx a, cplx b) {
    const cplx d = b - a;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(z - a);
    double t = ((z - a).real() * d.real() + (z - a).imag() * d.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(z - (a + t * d));
}

double point_polyline_distance(cplx z, const std::vector<cplx>& pts, bool closed) {
    const int n = static_cast<int>(pts.size());
    if (n == 0) return std::numeric_limits<double>::infinity();
    if (n == 1) return std::abs(z - pts[0]);
    double best = std::numeric_limits<double>::infinity();
    const int edges = closed ? n : n - 1;
    for (int i = 0; i < edges; ++i)
        best = std::min(best, point_segment_distance(z, pts[i], pts[(i + 1) % n]));
    return best;
}

double distance_to_polygon(cplx z, const std::vector<cplx>& poly) {
    if (poly.empty()) return std::numeric_limits<double>::infinity();
    if (polygon_contains(poly, z, 0.0)) return 0.0;
    return point_polyline_distance(z, poly, true);
}

double hausdorff_distance(const std::vector<cplx>& p, const std::vector<cplx>& q, bool closed) {
    double h = 0.0;
    for (cplx z : p) h = std::max(h, point_polyline_distance(z, q, closed));
    for (cplx z : q) h = std::max(h, point_polyline_distance(z, p, closed));
    return h;
}

std::vector<cplx> sample_circle(cplx center, double radius, int count) {
    std::vector<cplx> pts(count);
    for (int i = 0; i < count; ++i)
        pts[i] = center + std::polar(radius, 2.0 * std::numbers::pi * i / count);
    return pts;
}

} // namespace numrange
