#include "numrange/curves.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace numrange {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double wrap_into(double t, double lo) {
    while (t < lo) t += two_pi;
    while (t >= lo + two_pi) t -= two_pi;
    return t;
}

} // namespace

void ConvexAnalyticCurve::validate() const {
    const int probes = 4096;
    double hmax = 0.0, worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= probes; ++i) {
        const double t = lo_ + (hi_ - lo_) * i / probes;
        hmax = std::max(hmax, std::fabs(h_(t)));
        worst = std::min(worst, h_(t) + d2h_(t));
    }
    if (worst <= 1e-9 * (1.0 + hmax)) {
        std::ostringstream os;
        os << "curve is not strictly convex: min(h + h'') = " << worst;
        throw CurveInvalidError(os.str());
    }
}

ConvexAnalyticCurve ConvexAnalyticCurve::circle(cplx center, double radius) {
    if (radius <= 0.0) throw CurveInvalidError("circle: radius must be positive");
    ConvexAnalyticCurve g;
    g.h_ = [center, radius](double t) {
        return radius + (std::polar(1.0, -t) * center).real();
    };
    g.dh_ = [center](double t) { return (std::polar(1.0, -t) * center).imag(); };
    g.d2h_ = [center](double t) { return -(std::polar(1.0, -t) * center).real(); };
    std::ostringstream os;
    os << "circle c=(" << center.real() << "," << center.imag() << ") r=" << radius;
    g.summary_ = os.str();
    g.validate();
    return g;
}

ConvexAnalyticCurve ConvexAnalyticCurve::ellipse(cplx center, double semi_major,
                                                 double semi_minor, double tilt) {
    if (semi_major <= 0.0 || semi_minor <= 0.0 || semi_minor > semi_major)
        throw CurveInvalidError("ellipse: need semi_major >= semi_minor > 0");
    const double a2 = semi_major * semi_major, b2 = semi_minor * semi_minor;
    const double d = a2 - b2;
    auto g0 = [=](double u) { return std::sqrt(b2 + d * std::cos(u) * std::cos(u)); };
    auto g1 = [=](double u) { return -d * std::sin(2.0 * u) / (2.0 * g0(u)); };
    ConvexAnalyticCurve g;
    g.h_ = [=](double t) {
        return g0(t - tilt) + (std::polar(1.0, -t) * center).real();
    };
    g.dh_ = [=](double t) { return g1(t - tilt) + (std::polar(1.0, -t) * center).imag(); };
    g.d2h_ = [=](double t) {
        const double u = t - tilt;
        const double gp = g1(u);
        return (-d * std::cos(2.0 * u) - gp * gp) / g0(u) -
               (std::polar(1.0, -t) * center).real();
    };
    std::ostringstream os;
    os << "ellipse a=" << semi_major << " b=" << semi_minor;
    g.summary_ = os.str();
    g.validate();
    return g;
}

ConvexAnalyticCurve ConvexAnalyticCurve::tabulated(std::vector<double> thetas,
                                                   std::vector<double> h,
                                                   std::vector<double> dh,
                                                   std::vector<double> d2h) {
    const size_t m = thetas.size();
    if (m < 2 || h.size() != m || dh.size() != m || d2h.size() != m)
        throw PreconditionError("tabulated curve: need matching arrays, at least 2 rows");
    for (size_t i = 0; i + 1 < m; ++i)
        if (thetas[i + 1] <= thetas[i])
            throw PreconditionError("tabulated curve: angles must increase strictly");

    const double t_lo = thetas.front(), t_hi = thetas.back();
    const bool wraps = t_hi - t_lo >= two_pi - 1e-9;
    auto sample = [thetas = std::move(thetas), wraps](const std::vector<double>& f,
                                                      double t) {
        const double lo = thetas.front(), hi = thetas.back();
        if (wraps) t = wrap_into(t, lo);
        t = std::clamp(t, lo, hi);
        const auto it = std::upper_bound(thetas.begin(), thetas.end(), t);
        const size_t j = std::clamp<size_t>(it - thetas.begin(), 1, thetas.size() - 1);
        const double w = (t - thetas[j - 1]) / (thetas[j] - thetas[j - 1]);
        return (1.0 - w) * f[j - 1] + w * f[j];
    };

    ConvexAnalyticCurve g;
    g.h_ = [sample, h = std::move(h)](double t) { return sample(h, t); };
    g.dh_ = [sample, dh = std::move(dh)](double t) { return sample(dh, t); };
    g.d2h_ = [sample, d2h = std::move(d2h)](double t) { return sample(d2h, t); };
    if (!wraps) {
        g.is_arc_ = true;
        g.lo_ = t_lo;
        g.hi_ = t_hi;
    }
    g.summary_ = "tabulated";
    g.validate();
    return g;
}

ConvexAnalyticCurve ConvexAnalyticCurve::restricted(double theta_lo, double theta_hi) const {
    if (theta_hi <= theta_lo || theta_hi - theta_lo > two_pi + 1e-12)
        throw PreconditionError("restricted: need theta_lo < theta_hi <= theta_lo + 2 pi");
    ConvexAnalyticCurve g = *this;
    g.is_arc_ = true;
    g.lo_ = theta_lo;
    g.hi_ = theta_hi;
    g.validate();
    return g;
}

double ConvexAnalyticCurve::h(double theta) const { return h_(theta); }
double ConvexAnalyticCurve::dh(double theta) const { return dh_(theta); }
double ConvexAnalyticCurve::d2h(double theta) const { return d2h_(theta); }

cplx curve_point(const ConvexAnalyticCurve& g, double theta) {
    return std::polar(1.0, theta) * cplx(g.h(theta), g.dh(theta));
}

cplx curve_tangent_direction(const ConvexAnalyticCurve& g, double theta) {
    (void)g;
    return cplx(0.0, 1.0) * std::polar(1.0, theta);
}

std::vector<cplx> curve_polyline(const ConvexAnalyticCurve& g, int samples) {
    if (samples < 2) throw PreconditionError("curve_polyline: need at least 2 samples");
    std::vector<cplx> pts;
    pts.reserve(samples);
    if (g.is_arc()) {
        for (int i = 0; i < samples; ++i)
            pts.push_back(curve_point(
                g, g.theta_lo() + (g.theta_hi() - g.theta_lo()) * i / (samples - 1)));
    } else {
        for (int i = 0; i < samples; ++i)
            pts.push_back(curve_point(g, two_pi * i / samples));
    }
    return pts;
}

double curve_arc_length(const ConvexAnalyticCurve& g, double theta_lo, double theta_hi,
                        int samples) {
    if (theta_hi < theta_lo) throw PreconditionError("curve_arc_length: reversed interval");
    if (samples < 2) throw PreconditionError("curve_arc_length: need at least 2 samples");
    double s = 0.0;
    double prev = g.h(theta_lo) + g.d2h(theta_lo);
    for (int i = 1; i <= samples; ++i) {
        const double t = theta_lo + (theta_hi - theta_lo) * i / samples;
        const double cur = g.h(t) + g.d2h(t);
        s += 0.5 * (prev + cur) * (theta_hi - theta_lo) / samples;
        prev = cur;
    }
    return s;
}

bool tangent_meets_region(const ConvexAnalyticCurve& g, double theta,
                          const std::vector<cplx>& region) {
    if (region.empty()) return false;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    const cplx dir = std::polar(1.0, -theta);
    for (cplx w : region) {
        const double x = (dir * w).real();
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    const double hv = g.h(theta);
    return lo <= hv && hv <= hi;
}

IntersectionReport intersect_boundary(const NumericalRangeBoundary& b,
                                      const ConvexAnalyticCurve& g, double tol,
                                      double min_arc_length) {
    if (b.samples.empty()) throw PreconditionError("intersect_boundary: empty sweep");
    if (tol < 0.0) tol = 1e-6 * b.scale;

    const bool closed = !g.is_arc();
    auto in_arc = [&](double t) {
        if (closed) return true;
        return wrap_into(t, g.theta_lo()) <= g.theta_hi();
    };

    // containment precheck against every in-arc support direction
    for (const SupportSample& s : b.samples) {
        if (!in_arc(s.theta)) continue;
        const double hv = g.h(s.theta);
        for (cplx v : b.polyline)
            if ((std::polar(1.0, -s.theta) * v).real() > hv + tol) {
                std::ostringstream os;
                os << "boundary point (" << v.real() << "," << v.imag()
                   << ") lies outside the curve at direction theta = " << s.theta;
                throw ContainmentError(os.str());
            }
    }

    // default minimum arc length: ten median boundary chords
    if (min_arc_length < 0.0) {
        std::vector<double> chords;
        const size_t m = b.samples.size();
        for (size_t i = 0; i < m; ++i)
            chords.push_back(std::abs(b.samples[(i + 1) % m].boundary_lo -
                                      b.samples[i].boundary_hi));
        std::nth_element(chords.begin(), chords.begin() + chords.size() / 2, chords.end());
        min_arc_length = std::max(10.0 * chords[chords.size() / 2], 1e-12);
    }

    IntersectionReport rep;
    rep.tol = tol;
    rep.min_arc_length = min_arc_length;

    // per-sample coincidence: support lines agree and the boundary piece
    // passes through the curve point
    const size_t m = b.samples.size();
    std::vector<char> coincident(m, 0), considered(m, 0);
    std::vector<double> dvals(m, 0.0);
    for (size_t i = 0; i < m; ++i) {
        const SupportSample& s = b.samples[i];
        if (!in_arc(s.theta)) continue;
        considered[i] = 1;
        const double d = g.h(s.theta) - s.mu;
        dvals[i] = d;
        if (std::fabs(d) <= tol &&
            point_segment_distance(curve_point(g, s.theta), s.boundary_lo,
                                   s.boundary_hi) <= tol)
            coincident[i] = 1;
    }

    // maximal coincident runs
    struct Run {
        size_t first, last;
    };
    std::vector<Run> runs;
    for (size_t i = 0; i < m; ++i) {
        if (!coincident[i]) continue;
        if (!runs.empty() && runs.back().last + 1 == i)
            runs.back().last = i;
        else
            runs.push_back({i, i});
    }
    bool full_circle = false;
    if (closed && runs.size() == 1 && runs[0].first == 0 && runs[0].last == m - 1)
        full_circle = true;
    else if (closed && runs.size() >= 2 && runs.front().first == 0 &&
             runs.back().last == m - 1) {
        runs.front().first = runs.back().first; // wrapped run
        runs.pop_back();
    }

    std::vector<char> in_kept_arc(m, 0);
    if (full_circle) {
        double mg = 0.0;
        for (size_t i = 0; i < m; ++i) {
            mg = std::max(mg, std::fabs(dvals[i]));
            in_kept_arc[i] = 1;
        }
        rep.arcs.push_back({0.0, two_pi, curve_arc_length(g, 0.0, two_pi), mg, false});
    } else {
        for (const Run& r : runs) {
            const double t0 = b.samples[r.first].theta;
            double t1 = b.samples[r.last].theta;
            if (r.last < r.first) t1 += two_pi; // wrapped
            const double len = curve_arc_length(g, t0, t1);
            if (len < min_arc_length) continue;
            double mg = 0.0;
            for (size_t i = r.first;; i = (i + 1) % m) {
                mg = std::max(mg, std::fabs(dvals[i]));
                in_kept_arc[i] = 1;
                if (i == r.last) break;
            }
            rep.arcs.push_back({t0, t1, len, mg, false});
        }
    }

    // touch detection over the stream of boundary vertices near the curve
    std::vector<cplx> dense = curve_polyline(
        g, std::max<int>(8192, 4 * static_cast<int>(b.polyline.size())));
    struct Entry {
        double theta;
        cplx v;
        bool near;
        bool arc_member;
    };
    std::vector<Entry> stream;
    for (size_t i = 0; i < m; ++i) {
        if (!considered[i]) continue;
        const SupportSample& s = b.samples[i];
        auto push = [&](cplx v) {
            stream.push_back({s.theta, v,
                              point_polyline_distance(v, dense, closed) <= tol,
                              in_kept_arc[i] != 0});
        };
        push(s.boundary_lo);
        if (s.is_segment) push(s.boundary_hi);
    }

    struct ClusterInfo {
        std::vector<size_t> entries;
        bool has_arc_member = false;
        bool starts_at_begin = false;
        bool ends_at_end = false;
    };
    std::vector<ClusterInfo> clusters;
    const double break_gap = 0.5 * min_arc_length;
    for (size_t e = 0; e < stream.size(); ++e) {
        if (!stream[e].near) continue;
        const bool adjacent =
            !clusters.empty() && !clusters.back().entries.empty() &&
            clusters.back().entries.back() + 1 >= e &&
            std::abs(stream[e].v - stream[clusters.back().entries.back()].v) <= break_gap;
        if (!adjacent) clusters.push_back({});
        ClusterInfo& c = clusters.back();
        if (c.entries.empty() && e == 0) c.starts_at_begin = true;
        c.entries.push_back(e);
        c.has_arc_member = c.has_arc_member || stream[e].arc_member;
        if (e + 1 == stream.size()) c.ends_at_end = true;
    }
    // non-near entries between near ones break clusters
    // (handled by the entries.back() + 1 >= e adjacency test)

    if (closed && clusters.size() >= 2 && clusters.front().starts_at_begin &&
        clusters.back().ends_at_end) {
        const cplx a = stream[clusters.back().entries.back()].v;
        const cplx z = stream[clusters.front().entries.front()].v;
        if (std::abs(a - z) <= break_gap) {
            for (size_t e : clusters.back().entries)
                clusters.front().entries.push_back(e);
            clusters.front().has_arc_member |= clusters.back().has_arc_member;
            clusters.pop_back();
        }
    }

    for (const ClusterInfo& c : clusters) {
        if (c.has_arc_member) {
            // annotate the adjoining arc instead of emitting a touch
            bool beyond_arc = false;
            for (size_t e : c.entries)
                if (!stream[e].arc_member) beyond_arc = true;
            if (beyond_arc && !rep.arcs.empty()) {
                CoincidenceArc* nearest = &rep.arcs.front();
                double bd = std::numeric_limits<double>::infinity();
                for (CoincidenceArc& a : rep.arcs)
                    for (size_t e : c.entries) {
                        const double d =
                            std::min(std::abs(stream[e].v - curve_point(g, a.theta_lo)),
                                     std::abs(stream[e].v - curve_point(g, a.theta_hi)));
                        if (d < bd) {
                            bd = d;
                            nearest = &a;
                        }
                    }
                nearest->touches_arc_endpoint = true;
            }
            continue;
        }
        size_t best = c.entries.front();
        double bd = std::numeric_limits<double>::infinity();
        for (size_t e : c.entries) {
            const double d = point_polyline_distance(stream[e].v, dense, closed);
            if (d < bd) {
                bd = d;
                best = e;
            }
        }
        rep.touches.push_back({stream[best].theta, stream[best].v});
    }

    rep.verdict = !rep.arcs.empty()
                      ? IntersectVerdict::coincidence
                      : (!rep.touches.empty() ? IntersectVerdict::finite_touch
                                              : IntersectVerdict::disjoint);
    return rep;
}

AndersonRecord anderson_check(const ComplexMatrix& A, const ConvexAnalyticCurve& g,
                              const AndersonOptions& opt) {
    NumericalRangeBoundary b = boundary_sweep(A, opt.grid, opt.refine);
    const double tol = opt.tol < 0.0 ? 1e-6 * b.scale : opt.tol;
    const double tol_fill = opt.tol_fill < 0.0 ? 1e-4 * b.scale : opt.tol_fill;

    AndersonRecord rec;
    rec.n = A.dim();
    rec.report = intersect_boundary(b, g, tol);
    rec.touch_count = static_cast<int>(rec.report.touches.size());
    rec.coincidence_total_length = 0.0;
    for (const CoincidenceArc& a : rec.report.arcs)
        rec.coincidence_total_length += a.arc_length;
    rec.hausdorff = hausdorff_distance(
        b.polyline,
        curve_polyline(g, std::max<int>(8192, 4 * static_cast<int>(b.polyline.size()))),
        !g.is_arc());
    const bool filled = rec.hausdorff <= tol_fill;
    rec.conclusion = filled ? "filled" : "not-filled";
    rec.inconsistency = rec.touch_count > rec.n && !filled;
    return rec;
}

CircumscriptionReport circumscription_experiment(
    const OperatorFamily& fam, const ConvexAnalyticCurve& g,
    const std::vector<std::pair<int, int>>& schedule, const CircumscriptionOptions& opt) {
    if (g.is_arc())
        throw PreconditionError("circumscription_experiment: curve must be closed");
    if (opt.tangent_grid < 8)
        throw PreconditionError("circumscription_experiment: tangent grid too small");

    CircumscriptionReport rep;
    rep.ess = ess_range_estimate(fam, schedule, opt.ess);

    rep.containment_ok = true;
    double vmax = 0.0;
    for (const auto& poly : rep.ess.polygons)
        for (cplx v : poly) vmax = std::max(vmax, std::abs(v));
    // the support polygons circumscribe the tail ranges on a finite direction
    // grid, so their corners legitimately overshoot by (sec(pi/grid) - 1)|v|
    const double corner = 1.0 / std::cos(std::numbers::pi / opt.ess.grid) - 1.0;
    const double ctol = 1e-9 * (1.0 + vmax) + corner * vmax;
    for (int i = 0; i < opt.tangent_grid && rep.containment_ok; ++i) {
        const double t = two_pi * i / opt.tangent_grid;
        const double hv = g.h(t);
        const cplx dir = std::polar(1.0, -t);
        for (const auto& poly : rep.ess.polygons)
            for (cplx v : poly)
                if ((dir * v).real() > hv + ctol) rep.containment_ok = false;
    }

    for (int i = 0; i < opt.tangent_grid; ++i) {
        const double t = two_pi * i / opt.tangent_grid;
        if (tangent_meets_region(g, t, rep.ess.intersection))
            rep.tangent_failures.push_back(t);
    }
    rep.tangents_clear = rep.tangent_failures.empty();

    int n_max = 0;
    for (auto [n, N] : schedule) n_max = std::max(n_max, N);
    rep.largest_section = anderson_check(truncate(fam, n_max), g, opt.section);
    rep.coincidence_present =
        rep.largest_section.report.verdict == IntersectVerdict::coincidence;

    if (!rep.containment_ok)
        rep.conclusion = "containment-violated";
    else if (rep.tangents_clear)
        rep.conclusion = "hypothesis-ok";
    else
        rep.conclusion = "hypothesis-failure";
    return rep;
}

SegmentResult segment_coincidence(const NumericalRangeBoundary& b, cplx p, cplx q,
                                  double resolution) {
    if (resolution <= 0.0)
        throw PreconditionError("segment_coincidence: resolution must be positive");
    const double tol = 1e-9 * b.scale;
    auto at = [&](double t) { return p + t * (q - p); };
    auto inside = [&](double t) { return contains_point(b, at(t), tol); };

    const double len = std::abs(q - p);
    if (len == 0.0) {
        if (inside(0.0)) return {false, p, p};
        return {true, 0.0, 0.0};
    }

    const int coarse = 4096;
    int first = -1, last = -1;
    for (int i = 0; i <= coarse; ++i) {
        if (inside(static_cast<double>(i) / coarse)) {
            if (first < 0) first = i;
            last = i;
        }
    }
    if (first < 0) return {true, 0.0, 0.0};

    auto bisect = [&](double out, double in) {
        while (std::fabs(in - out) * len > resolution) {
            const double mid = 0.5 * (in + out);
            (inside(mid) ? in : out) = mid;
        }
        return in;
    };
    double lo = static_cast<double>(first) / coarse;
    double hi = static_cast<double>(last) / coarse;
    if (first > 0) lo = bisect((first - 1.0) / coarse, lo);
    if (last < coarse) hi = bisect((last + 1.0) / coarse, hi);
    return {false, at(lo), at(hi)};
}

} // namespace numrange
