#include "numrange/essrange.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace numrange {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

cplx DiagonalRule::entry(int k) const {
    switch (name) {
        case DiagonalRuleName::exp_i_over_k:
            return std::polar(1.0, 1.0 / k);
        case DiagonalRuleName::one_then_i_over_k:
            return k == 1 ? cplx(1.0) : cplx(0.0, 1.0 / (k - 1));
    }
    throw PreconditionError("unknown diagonal rule");
}

std::vector<cplx> DiagonalRule::limit_points() const {
    switch (name) {
        case DiagonalRuleName::exp_i_over_k:
            return {cplx(1.0)};
        case DiagonalRuleName::one_then_i_over_k:
            return {cplx(0.0)};
    }
    throw PreconditionError("unknown diagonal rule");
}

bool DiagonalRule::compact() const { return name == DiagonalRuleName::one_then_i_over_k; }

OperatorFamily OperatorFamily::diagonal(DiagonalRuleName rule) {
    OperatorFamily f;
    f.kind = FamilyKind::diagonal;
    f.rule = DiagonalRule{rule};
    return f;
}

OperatorFamily OperatorFamily::unit_shift() { return weighted_shift({cplx(1.0)}); }

OperatorFamily OperatorFamily::weighted_shift(std::vector<cplx> weights) {
    if (weights.empty()) throw PreconditionError("weighted_shift: no weights");
    OperatorFamily f;
    f.kind = FamilyKind::weighted_shift;
    f.shift_weights = std::move(weights);
    return f;
}

OperatorFamily OperatorFamily::block_diagonal(std::vector<ComplexMatrix> blocks) {
    if (blocks.empty()) throw PreconditionError("block_diagonal: no blocks");
    for (const ComplexMatrix& b : blocks)
        if (b.dim() < 1) throw PreconditionError("block_diagonal: empty block");
    OperatorFamily f;
    f.kind = FamilyKind::direct_sum_blocks;
    f.blocks = std::move(blocks);
    return f;
}

OperatorFamily OperatorFamily::finite_plus_diagonal(ComplexMatrix head,
                                                    DiagonalRuleName rule) {
    if (head.dim() < 1) throw PreconditionError("finite_plus_diagonal: empty head");
    OperatorFamily f;
    f.kind = FamilyKind::finite_plus_diagonal;
    f.head = std::move(head);
    f.rule = DiagonalRule{rule};
    return f;
}

ComplexMatrix truncate(const OperatorFamily& fam, int n) {
    if (n < 1) throw PreconditionError("truncate: section size must be positive");
    ComplexMatrix A(n);
    switch (fam.kind) {
        case FamilyKind::diagonal:
            for (int k = 1; k <= n; ++k) A(k - 1, k - 1) = fam.rule->entry(k);
            break;
        case FamilyKind::weighted_shift: {
            const int w = static_cast<int>(fam.shift_weights.size());
            for (int i = 0; i + 1 < n; ++i) A(i + 1, i) = fam.shift_weights[i % w];
            break;
        }
        case FamilyKind::direct_sum_blocks: {
            int at = 0, b = 0;
            while (at < n) {
                const ComplexMatrix& blk = fam.blocks[b % fam.blocks.size()];
                for (int i = 0; i < blk.dim() && at + i < n; ++i)
                    for (int j = 0; j < blk.dim() && at + j < n; ++j)
                        A(at + i, at + j) = blk(i, j);
                at += blk.dim();
                ++b;
            }
            break;
        }
        case FamilyKind::finite_plus_diagonal: {
            const int hd = fam.head->dim();
            for (int i = 0; i < std::min(hd, n); ++i)
                for (int j = 0; j < std::min(hd, n); ++j) A(i, j) = (*fam.head)(i, j);
            for (int k = 1; k + hd <= n; ++k) A(hd + k - 1, hd + k - 1) = fam.rule->entry(k);
            break;
        }
    }
    return A;
}

ComplexMatrix tail_compression(const OperatorFamily& fam, int n, int N) {
    if (n < 1 || n > N) throw PreconditionError("tail_compression: need 1 <= n <= N");
    ComplexMatrix A = truncate(fam, N);
    const int m = N - n + 1;
    ComplexMatrix C(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) C(i, j) = A(n - 1 + i, n - 1 + j);
    return C;
}

namespace {

void validate_schedule(const std::vector<std::pair<int, int>>& schedule, size_t min_windows) {
    if (schedule.size() < min_windows)
        throw PreconditionError("schedule: too few windows");
    int prev = 0;
    for (auto [n, N] : schedule) {
        if (n < 1 || n > N) throw PreconditionError("schedule: need 1 <= n <= N per window");
        if (n <= prev) throw PreconditionError("schedule: window starts must increase");
        prev = n;
    }
}

} // namespace

EssRangeEstimate ess_range_estimate(const OperatorFamily& fam,
                                    const std::vector<std::pair<int, int>>& schedule,
                                    const EssOptions& opt) {
    validate_schedule(schedule, 1);
    if (opt.grid < 8) throw PreconditionError("ess_range_estimate: grid must be at least 8");

    EssRangeEstimate est;
    est.schedule = schedule;
    const int W = static_cast<int>(schedule.size());
    const int g = opt.grid;

    std::vector<std::vector<double>> mu(W, std::vector<double>(g));
    double mu_max = 0.0;
    for (int w = 0; w < W; ++w) {
        ComplexMatrix C = tail_compression(fam, schedule[w].first, schedule[w].second);
        for (int i = 0; i < g; ++i) {
            mu[w][i] = support_value(C, two_pi * i / g).mu;
            mu_max = std::max(mu_max, std::fabs(mu[w][i]));
        }
    }
    const double bound = 1.0 + 2.0 * mu_max;

    est.polygons.resize(W);
    for (int w = 0; w < W; ++w) {
        std::vector<HalfPlane> hps(g);
        for (int i = 0; i < g; ++i) hps[i] = {two_pi * i / g, mu[w][i]};
        est.polygons[w] = polygon_from_half_planes(hps, bound);
    }

    for (int w = 0; w + 1 < W; ++w)
        est.drift.push_back(hausdorff_distance(est.polygons[w], est.polygons[w + 1], true));

    est.inflation.assign(W, 0.0);
    if (opt.drift_inflation && W > 1) {
        const double d_last = est.drift.back();
        for (int w = 0; w < W; ++w) {
            double s = d_last;
            for (int v = w; v + 1 < W; ++v) s += est.drift[v];
            est.inflation[w] = s;
        }
    }

    est.running_intersection.resize(W);
    std::vector<HalfPlane> hps(g);
    for (int i = 0; i < g; ++i) {
        double off = mu[0][i] + est.inflation[0];
        hps[i] = {two_pi * i / g, off};
    }
    for (int w = 0; w < W; ++w) {
        if (w > 0)
            for (int i = 0; i < g; ++i)
                hps[i].offset = std::min(hps[i].offset, mu[w][i] + est.inflation[w]);
        est.running_intersection[w] = polygon_from_half_planes(hps, bound);
    }
    est.intersection = est.running_intersection.back();
    est.empty = est.intersection.empty();
    if (est.empty && !opt.drift_inflation)
        throw NumericalError(
            "ess_range_estimate: intersection of window polygons is numerically empty");
    return est;
}

std::vector<cplx> EssOracle::as_polygon(int samples) const {
    switch (kind) {
        case Kind::point:
        case Kind::polygon:
            return vertices;
        case Kind::disk:
            return sample_circle(center, radius, samples);
    }
    throw PreconditionError("unknown oracle kind");
}

EssOracle ess_oracle(const OperatorFamily& fam) {
    EssOracle o;
    switch (fam.kind) {
        case FamilyKind::diagonal:
        case FamilyKind::finite_plus_diagonal: {
            std::vector<cplx> pts = convex_hull(fam.rule->limit_points());
            o.kind = pts.size() == 1 ? EssOracle::Kind::point : EssOracle::Kind::polygon;
            o.vertices = std::move(pts);
            return o;
        }
        case FamilyKind::weighted_shift: {
            const bool unit = std::all_of(fam.shift_weights.begin(), fam.shift_weights.end(),
                                          [](cplx w) { return w == cplx(1.0); });
            if (!unit)
                throw PreconditionError("ess_oracle: no closed form for this weighted shift");
            o.kind = EssOracle::Kind::disk;
            o.center = 0.0;
            o.radius = 1.0;
            return o;
        }
        case FamilyKind::direct_sum_blocks:
            throw PreconditionError("ess_oracle: no closed form for block families");
    }
    throw PreconditionError("ess_oracle: unknown family kind");
}

SupportCheckReport essential_support_check(const OperatorFamily& fam, double theta,
                                           const std::vector<std::pair<int, int>>& schedule,
                                           const EssOptions& opt) {
    (void)opt;
    validate_schedule(schedule, 3);

    SupportCheckReport rep;
    const int W = static_cast<int>(schedule.size());
    std::vector<double> delta(W), gap(W);
    double scale = 1.0;
    for (int w = 0; w < W; ++w) {
        auto [n, N] = schedule[w];
        SupportSample full = support_value(truncate(fam, N), theta);
        const double mu_tail = support_value(tail_compression(fam, n, N), theta).mu;
        SupportCheckWindow win;
        win.lo = n;
        win.hi = N;
        win.mu_full = full.mu;
        win.mu_tail = mu_tail;
        win.gap = std::isinf(full.gap) ? 1e3 * (1.0 + std::fabs(full.mu)) : full.gap;
        rep.windows.push_back(win);
        delta[w] = full.mu - mu_tail;
        gap[w] = win.gap;
        scale = std::max(scale, 1.0 + std::fabs(full.mu));
    }
    rep.floor = 1e-3 * scale;
    rep.delta_slope = 0.5 * (delta[W - 1] - delta[W - 3]);
    rep.gap_slope = 0.5 * (gap[W - 1] - gap[W - 3]);

    const double d_last = delta[W - 1];
    if (d_last <= rep.floor || rep.delta_slope <= -rep.floor)
        rep.verdict = SupportVerdict::essential;
    else if (d_last > rep.floor && rep.delta_slope > -rep.floor &&
             gap[W - 1] >= rep.floor && rep.gap_slope >= -rep.floor)
        rep.verdict = SupportVerdict::discrete;
    else
        rep.verdict = SupportVerdict::inconclusive;
    return rep;
}

std::vector<std::pair<int, int>> default_schedule() {
    return {{32, 64}, {64, 128}, {128, 256}, {256, 512}};
}

} // namespace numrange
