#include "numrange/branches.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace numrange {

namespace {

struct Cluster {
    std::vector<int> idx;
    double mean;
};

std::vector<Cluster> cluster_values(const std::vector<double>& vals, double dtol) {
    std::vector<Cluster> out;
    for (int i = 0; i < static_cast<int>(vals.size()); ++i) {
        if (out.empty() || vals[i] - vals[out.back().idx.back()] > dtol)
            out.push_back({{}, 0.0});
        out.back().idx.push_back(i);
    }
    for (Cluster& c : out) {
        double s = 0.0;
        for (int i : c.idx) s += vals[i];
        c.mean = s / c.idx.size();
    }
    return out;
}

struct StepSamples {
    std::vector<double> lambdas;
    std::vector<std::vector<cplx>> phis;
    std::vector<double> overlaps;
    std::vector<double> gaps;
};

// Project each branch vector onto its assigned cluster's eigenspace,
// orthogonalizing branches that share a cluster. Returns false when any
// post-projection overlap falls below the threshold.
bool continuation_step(const std::vector<std::vector<cplx>>& old_phis,
                       const EigenDecomposition& ed,
                       const std::vector<Cluster>& clusters, double threshold,
                       StepSamples& out) {
    const int k = static_cast<int>(old_phis.size());
    const int nc = static_cast<int>(clusters.size());
    const int n = static_cast<int>(ed.values.size());

    // coefficients of each old vector in the new eigenbasis
    std::vector<std::vector<cplx>> coef(k, std::vector<cplx>(n));
    for (int b = 0; b < k; ++b)
        for (int j = 0; j < n; ++j) coef[b][j] = inner(old_phis[b], ed.vectors[j]);

    struct Cand {
        double overlap;
        double dist;
        int b, c;
    };
    std::vector<Cand> cands;
    cands.reserve(static_cast<size_t>(k) * nc);
    for (int b = 0; b < k; ++b) {
        const double lam_old = out.lambdas[b]; // carries previous lambda on entry
        for (int c = 0; c < nc; ++c) {
            double s = 0.0;
            for (int j : clusters[c].idx) s += std::norm(coef[b][j]);
            cands.push_back({std::sqrt(s), std::fabs(clusters[c].mean - lam_old), b, c});
        }
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
        if (x.overlap != y.overlap) return x.overlap > y.overlap;
        if (x.dist != y.dist) return x.dist < y.dist;
        if (x.b != y.b) return x.b < y.b;
        return x.c < y.c;
    });

    std::vector<int> assigned(k, -1), capacity(nc);
    for (int c = 0; c < nc; ++c) capacity[c] = static_cast<int>(clusters[c].idx.size());
    int placed = 0;
    for (const Cand& cd : cands) {
        if (placed == k) break;
        if (assigned[cd.b] >= 0 || capacity[cd.c] == 0) continue;
        assigned[cd.b] = cd.c;
        --capacity[cd.c];
        ++placed;
    }
    if (placed < k) return false;

    out.phis.assign(k, {});
    out.overlaps.assign(k, 0.0);
    for (int c = 0; c < nc; ++c) {
        std::vector<int> members;
        for (int b = 0; b < k; ++b)
            if (assigned[b] == c) members.push_back(b);
        std::vector<const std::vector<cplx>*> done;
        for (int b : members) {
            std::vector<cplx> u(n, 0.0);
            for (int j : clusters[c].idx)
                for (int r = 0; r < n; ++r) u[r] += coef[b][j] * ed.vectors[j][r];
            for (const auto* prev : done) {
                const cplx g = inner(u, *prev);
                for (int r = 0; r < n; ++r) u[r] -= g * (*prev)[r];
            }
            const double ov = norm2(u);
            if (ov < threshold) return false;
            for (cplx& x : u) x /= ov;
            out.overlaps[b] = ov;
            out.phis[b] = std::move(u);
            done.push_back(&out.phis[b]);
        }
    }

    for (int b = 0; b < k; ++b) {
        const Cluster& c = clusters[assigned[b]];
        if (c.idx.size() == 1) {
            out.lambdas[b] = ed.values[c.idx[0]];
            double g = std::numeric_limits<double>::infinity();
            for (int j = 0; j < n; ++j)
                if (j != c.idx[0]) g = std::min(g, std::fabs(ed.values[j] - out.lambdas[b]));
            out.gaps[b] = g;
        } else {
            // smooth representative inside the degenerate cluster
            double lam = 0.0;
            for (int j : clusters[assigned[b]].idx)
                lam += ed.values[j] * std::norm(inner(out.phis[b], ed.vectors[j]));
            out.lambdas[b] = lam;
            out.gaps[b] = 0.0;
        }
    }
    return true;
}

} // namespace

TraceResult trace_branches(const ComplexMatrix& A, double theta_center,
                           double halfwidth, double step, int k_top,
                           const TraceOptions& opt) {
    A.require_finite();
    const int n = A.dim();
    if (n < 1) throw PreconditionError("trace_branches: empty matrix");
    if (halfwidth <= 0.0 || step <= 0.0 || step > halfwidth)
        throw PreconditionError("trace_branches: need 0 < step <= halfwidth");
    if (k_top < 1 || k_top > n)
        throw PreconditionError("trace_branches: k_top out of range");
    if (opt.overlap_threshold <= 0.0 || opt.overlap_threshold >= 1.0)
        throw PreconditionError("trace_branches: overlap threshold must be in (0,1)");

    const double dtol =
        opt.degeneracy_tol < 0.0 ? default_degeneracy_tol(A) : opt.degeneracy_tol;
    const double top_tol = 1e-10 * (1.0 + A.frobenius_norm());

    EigenDecomposition ec = hermitian_eig(real_part(rotate(A, theta_center)));
    std::vector<Cluster> cc = cluster_values(ec.values, dtol);

    // branch 0 is the highest eigenvalue at the center
    StepSamples center;
    center.lambdas.resize(k_top);
    center.phis.resize(k_top);
    center.gaps.resize(k_top);
    for (int b = 0; b < k_top; ++b) {
        const int j = n - 1 - b;
        center.lambdas[b] = ec.values[j];
        center.phis[b] = ec.vectors[j];
        double g = std::numeric_limits<double>::infinity();
        bool degenerate = false;
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            const double d = std::fabs(ec.values[i] - ec.values[j]);
            if (d <= dtol) degenerate = true;
            g = std::min(g, d);
        }
        center.gaps[b] = degenerate ? 0.0 : g;
    }

    struct Record {
        double theta;
        StepSamples s;
        std::vector<double> all_values;
    };

    TraceResult res;
    std::vector<CrossingEvent> crossings;

    auto march = [&](double dir, std::vector<Record>& recs) {
        double theta = theta_center;
        StepSamples cur = center;
        const double end = halfwidth;
        double traveled = 0.0;
        while (traveled < end - 1e-15) {
            double h = std::min(step, end - traveled);
            StepSamples trial;
            EigenDecomposition ed;
            bool ok = false;
            while (true) {
                const double th = theta + dir * h;
                ed = hermitian_eig(real_part(rotate(A, th)));
                trial = cur; // lambdas carry the previous values into the matcher
                ok = continuation_step(cur.phis, ed, cluster_values(ed.values, dtol),
                                       opt.overlap_threshold, trial);
                if (ok) break;
                h *= 0.5;
                if (h < step / opt.step_floor_divisor) {
                    std::ostringstream os;
                    os << "trace_branches: continuation overlap collapsed near theta = "
                       << th;
                    throw NumericalError(os.str());
                }
            }
            theta += dir * h;
            traveled += h;
            for (double ov : trial.overlaps) res.min_overlap = std::min(res.min_overlap, ov);

            // crossing detection against the previous accepted sample
            for (int b1 = 0; b1 < k_top; ++b1)
                for (int b2 = b1 + 1; b2 < k_top; ++b2) {
                    const double dp = cur.lambdas[b1] - cur.lambdas[b2];
                    const double dn = trial.lambdas[b1] - trial.lambdas[b2];
                    if (dp * dn < 0.0) {
                        const double t = dp / (dp - dn);
                        crossings.push_back({theta - dir * h + dir * h * t, b1, b2});
                    } else if (std::fabs(dn) <= top_tol && std::fabs(dp) > top_tol) {
                        crossings.push_back({theta, b1, b2});
                    } else if (std::fabs(dp) <= top_tol && std::fabs(dn) > top_tol) {
                        // degenerate at the previous sample, e.g. a crossing
                        // sitting exactly on the trace center
                        crossings.push_back({theta - dir * h, b1, b2});
                    }
                }

            Record rec;
            rec.theta = theta;
            rec.s = trial;
            rec.all_values = ed.values;
            recs.push_back(std::move(rec));
            cur = std::move(trial);
        }
    };

    std::vector<Record> right, left;
    march(1.0, right);
    march(-1.0, left);

    res.branches.assign(k_top, {});
    auto push_sample = [&](int b, double theta, const StepSamples& s, double top_value) {
        Branch& br = res.branches[b];
        br.thetas.push_back(theta);
        br.lambdas.push_back(s.lambdas[b]);
        br.phis.push_back(s.phis[b]);
        br.zetas.push_back(inner(matvec(A, s.phis[b]), s.phis[b]));
        br.gaps.push_back(s.gaps[b]);
        br.is_top.push_back(top_value - s.lambdas[b] <= top_tol ? 1 : 0);
    };
    for (int b = 0; b < k_top; ++b) {
        for (auto it = left.rbegin(); it != left.rend(); ++it)
            push_sample(b, it->theta, it->s, it->all_values.back());
        push_sample(b, theta_center, center, ec.values.back());
        for (const Record& r : right) push_sample(b, r.theta, r.s, r.all_values.back());
    }

    std::sort(crossings.begin(), crossings.end(),
              [](const CrossingEvent& a, const CrossingEvent& b) { return a.theta < b.theta; });
    res.crossings = std::move(crossings);
    return res;
}

namespace {

// derivative at x1 from samples at x0 < x1 < x2, not necessarily equispaced
double deriv3(double x0, double x1, double x2, double f0, double f1, double f2) {
    return f0 * (x1 - x2) / ((x0 - x1) * (x0 - x2)) +
           f1 * (2.0 * x1 - x0 - x2) / ((x1 - x0) * (x1 - x2)) +
           f2 * (x1 - x0) / ((x2 - x0) * (x2 - x1));
}

} // namespace

HFReport hellmann_feynman_check(const Branch& branch, double dtol) {
    if (dtol < 0.0) throw PreconditionError("hellmann_feynman_check: dtol must be nonnegative");
    HFReport rep;
    const int m = static_cast<int>(branch.thetas.size());
    for (int i = 1; i + 1 < m; ++i) {
        if (branch.gaps[i - 1] <= dtol || branch.gaps[i] <= dtol ||
            branch.gaps[i + 1] <= dtol) {
            ++rep.skipped;
            continue;
        }
        const double fd = deriv3(branch.thetas[i - 1], branch.thetas[i], branch.thetas[i + 1],
                                 branch.lambdas[i - 1], branch.lambdas[i], branch.lambdas[i + 1]);
        const double predicted =
            (std::polar(1.0, -branch.thetas[i]) * branch.zetas[i]).imag();
        rep.max_deviation = std::max(rep.max_deviation, std::fabs(fd - predicted));
    }
    return rep;
}

std::vector<CurvePoint> boundary_curve_from_support(const NumericalRangeBoundary& b) {
    const int m = static_cast<int>(b.samples.size());
    if (m < 3) throw PreconditionError("boundary_curve_from_support: need at least 3 samples");
    constexpr double two_pi = 2.0 * 3.14159265358979323846;
    std::vector<CurvePoint> out;
    for (int i = 0; i < m; ++i) {
        if (b.samples[i].multiplicity != 1) continue;
        const int ip = (i - 1 + m) % m, in = (i + 1) % m;
        double t0 = b.samples[ip].theta, t1 = b.samples[i].theta, t2 = b.samples[in].theta;
        if (i == 0) t0 -= two_pi;
        if (in == 0) t2 += two_pi;
        const double dmu = deriv3(t0, t1, t2, b.samples[ip].mu, b.samples[i].mu,
                                  b.samples[in].mu);
        out.push_back({t1, std::polar(1.0, t1) * cplx(b.samples[i].mu, dmu)});
    }
    return out;
}

CurveClass regularity_check(const Branch& branch, double tol) {
    if (tol <= 0.0) throw PreconditionError("regularity_check: tol must be positive");
    const int m = static_cast<int>(branch.zetas.size());
    if (m == 0) throw PreconditionError("regularity_check: empty branch");
    cplx centroid = 0.0;
    for (cplx z : branch.zetas) centroid += z;
    centroid /= static_cast<double>(m);
    double spread = 0.0;
    for (cplx z : branch.zetas) spread = std::max(spread, std::abs(z - centroid));
    if (2.0 * spread <= tol) return CurveClass::point;
    double min_speed = std::numeric_limits<double>::infinity();
    for (int i = 0; i + 1 < m; ++i) {
        const double dth = branch.thetas[i + 1] - branch.thetas[i];
        if (dth == 0.0) continue;
        min_speed = std::min(min_speed, std::abs(branch.zetas[i + 1] - branch.zetas[i]) / dth);
    }
    return min_speed > tol ? CurveClass::regular : CurveClass::irregular_numerical;
}

std::pair<double, int> isolation_gap(const ComplexMatrix& A, double theta, double dtol) {
    SupportSample s = support_value(A, theta, dtol);
    return {s.gap, s.multiplicity};
}

} // namespace numrange
