#include "numrange/support.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace numrange {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double wrap_angle(double t) {
    t = std::fmod(t, two_pi);
    if (t < 0.0) t += two_pi;
    return t;
}

void apply_segment_flag(SupportSample& s, double scale) {
    s.is_segment = std::abs(s.boundary_hi - s.boundary_lo) > 1e-9 * scale;
}

} // namespace

double default_degeneracy_tol(const ComplexMatrix& A) {
    return 1e-8 * (1.0 + A.frobenius_norm());
}

SupportSample support_value(const ComplexMatrix& A, double theta, double dtol) {
    A.require_finite();
    if (A.dim() < 1) throw PreconditionError("support_value: empty matrix");
    if (dtol < 0.0) dtol = default_degeneracy_tol(A);

    const int n = A.dim();
    EigenDecomposition ed = hermitian_eig(real_part(rotate(A, theta)));

    SupportSample s;
    s.theta = theta;
    s.mu = ed.values[n - 1];

    int first = n - 1;
    while (first > 0 && s.mu - ed.values[first - 1] <= dtol) --first;
    s.multiplicity = n - first;
    s.gap = first > 0 ? s.mu - ed.values[first - 1]
                      : std::numeric_limits<double>::infinity();
    s.top_vectors.assign(ed.vectors.begin() + first, ed.vectors.end());

    const cplx phase = std::polar(1.0, theta);
    if (s.multiplicity == 1) {
        s.boundary_lo = s.boundary_hi = rayleigh(A, s.top_vectors[0]);
    } else {
        ComplexMatrix K = imag_part(rotate(compress(A, s.top_vectors), theta));
        EigenDecomposition ek = hermitian_eig(K);
        s.boundary_lo = phase * cplx(s.mu, ek.values.front());
        s.boundary_hi = phase * cplx(s.mu, ek.values.back());
    }
    apply_segment_flag(s, 1.0 + std::abs(s.mu));
    return s;
}

NumericalRangeBoundary boundary_sweep(const ComplexMatrix& A, int grid,
                                      bool refine, double dtol) {
    if (grid < 8) throw PreconditionError("boundary_sweep: grid must be at least 8");
    if (dtol < 0.0) dtol = default_degeneracy_tol(A);

    NumericalRangeBoundary b;
    b.samples.reserve(grid);
    for (int i = 0; i < grid; ++i)
        b.samples.push_back(support_value(A, two_pi * i / grid, dtol));

    double scale0 = 1.0;
    for (const SupportSample& s : b.samples)
        scale0 = std::max(scale0, 1.0 + std::max(std::abs(s.boundary_lo),
                                                 std::abs(s.boundary_hi)));

    if (refine) {
        const double target = scale0 / (2.0 * grid);
        const size_t budget = static_cast<size_t>(16) * grid;
        bool grew = true;
        while (grew && b.samples.size() < budget) {
            grew = false;
            std::vector<SupportSample> next;
            next.reserve(b.samples.size() * 2);
            const size_t m = b.samples.size();
            for (size_t i = 0; i < m; ++i) {
                const SupportSample& cur = b.samples[i];
                const SupportSample& nxt = b.samples[(i + 1) % m];
                next.push_back(cur);
                const double lo = cur.theta;
                const double hi = i + 1 < m ? nxt.theta : nxt.theta + two_pi;
                const double chord = std::abs(nxt.boundary_lo - cur.boundary_hi);
                if (chord > target && hi - lo > 1e-12 &&
                    b.samples.size() + next.size() - (i + 1) < budget) {
                    next.push_back(support_value(A, wrap_angle(0.5 * (lo + hi)), dtol));
                    grew = true;
                }
            }
            b.samples = std::move(next);
            std::sort(b.samples.begin(), b.samples.end(),
                      [](const SupportSample& x, const SupportSample& y) {
                          return x.theta < y.theta;
                      });
        }
    }

    // drop duplicate angles from refinement roundoff
    std::vector<SupportSample> dedup;
    for (SupportSample& s : b.samples)
        if (dedup.empty() || s.theta - dedup.back().theta > 1e-15)
            dedup.push_back(std::move(s));
    b.samples = std::move(dedup);

    b.scale = 1.0;
    for (const SupportSample& s : b.samples)
        b.scale = std::max(b.scale, 1.0 + std::max(std::abs(s.boundary_lo),
                                                   std::abs(s.boundary_hi)));
    for (SupportSample& s : b.samples) apply_segment_flag(s, b.scale);

    for (const SupportSample& s : b.samples) {
        if (b.polyline.empty() ||
            std::abs(s.boundary_lo - b.polyline.back()) > 1e-13 * b.scale)
            b.polyline.push_back(s.boundary_lo);
        if (s.is_segment) {
            b.polyline.push_back(s.boundary_hi);
            b.flat_segments.push_back({s.theta, s.boundary_lo, s.boundary_hi});
        }
    }
    return b;
}

bool contains_point(const NumericalRangeBoundary& b, cplx z, double tol) {
    if (tol < 0.0) throw PreconditionError("contains_point: tol must be nonnegative");
    for (const SupportSample& s : b.samples)
        if ((std::polar(1.0, -s.theta) * z).real() > s.mu + tol) return false;
    return true;
}

double max_support(const ComplexMatrix& A, int grid) {
    if (grid < 8) throw PreconditionError("max_support: grid must be at least 8");
    std::vector<double> mu(grid);
    int best = 0;
    for (int i = 0; i < grid; ++i) {
        mu[i] = support_value(A, two_pi * i / grid).mu;
        if (mu[i] > mu[best]) best = i;
    }
    // golden-section polish on the bracketing interval
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = two_pi * (best - 1) / grid;
    double hi = two_pi * (best + 1) / grid;
    double x1 = hi - gr * (hi - lo);
    double x2 = lo + gr * (hi - lo);
    double f1 = support_value(A, wrap_angle(x1)).mu;
    double f2 = support_value(A, wrap_angle(x2)).mu;
    for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = support_value(A, wrap_angle(x2)).mu;
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = support_value(A, wrap_angle(x1)).mu;
        }
    }
    return std::max(mu[best], std::max(f1, f2));
}

} // namespace numrange
