// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Criteria 1, 4 and 5 drive the installed CLI; the rest call the library.

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "numrange/branches.hpp"
#include "numrange/complex_matrix.hpp"
#include "numrange/curves.hpp"
#include "numrange/errors.hpp"
#include "numrange/gallery.hpp"
#include "numrange/geometry.hpp"
#include "numrange/hermitian_eig.hpp"
#include "numrange/support.hpp"

#ifndef NUMRANGE_CLI_PATH
#error NUMRANGE_CLI_PATH must point at the numrange binary
#endif

namespace {

using namespace numrange;
using json = nlohmann::json;

constexpr double pi = std::numbers::pi;

[[noreturn]] void fail(const std::string& why) { throw std::runtime_error(why); }

void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

struct CliResult {
    int status;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(NUMRANGE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) fail("popen failed");
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int rc = pclose(pipe);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

json run_cli_json(const std::string& args) {
    const CliResult r = run_cli(args);
    expect(r.status == 0, "cli exited " + std::to_string(r.status) + " for: " + args);
    return json::parse(r.out);
}

std::vector<cplx> json_polygon(const json& arr) {
    std::vector<cplx> poly;
    for (const json& v : arr) poly.emplace_back(v[0].get<double>(), v[1].get<double>());
    return poly;
}

std::vector<cplx> random_unit(Rng& rng, int n) {
    std::vector<cplx> x(n);
    for (cplx& v : x) v = rng.next_complex_gaussian();
    const double nrm = norm2(x);
    for (cplx& v : x) v /= nrm;
    return x;
}

// 1. The 2x2 nilpotent with superdiagonal 2: swept boundary reproduces the
// unit circle, the census reports a filled disk, and sampled range values
// never leave it.
void criterion1() {
    const CliResult r = run_cli("boundary --gallery disk2x2 --grid 512 --refine");
    expect(r.status == 0, "boundary exited " + std::to_string(r.status));
    std::istringstream csv(r.out);
    std::string line;
    std::getline(csv, line);
    std::vector<cplx> poly;
    while (std::getline(csv, line)) {
        double th, mu, px, py;
        int mult, flat;
        if (std::sscanf(line.c_str(), "%lf,%lf,%d,%lf,%lf,%d", &th, &mu, &mult, &px, &py,
                        &flat) == 6)
            poly.emplace_back(px, py);
    }
    expect(poly.size() >= 512, "short sweep: " + std::to_string(poly.size()) + " rows");
    const double hd = hausdorff_distance(poly, sample_circle(0.0, 1.0, 16384), true);
    expect(hd <= 1e-6, "boundary vs unit circle hausdorff " + fmt(hd));

    const json a = run_cli_json("anderson --gallery disk2x2 --curve circle:1 --grid 512");
    expect(a["conclusion"] == "filled", "census conclusion " + a["conclusion"].dump());
    const double len = a["coincidence_total_length"].get<double>();
    expect(len >= 0.99 * 2 * pi, "coincidence length " + fmt(len));

    const ComplexMatrix A = gallery_build("disk2x2").matrix();
    Rng rng(20260816);
    double worst = 0.0;
    for (int k = 0; k < 100000; ++k)
        worst = std::max(worst, std::abs(rayleigh(A, random_unit(rng, 2))));
    expect(worst <= 1.0 + 1e-12, "sampled range value " + fmt(worst) + " outside the disk");
}

// 2. Eighth roots of unity inscribed in the unit circle: exactly 8 isolated
// touches, no coincidence arcs, and the gap equals one minus the octagon
// inradius.
void criterion2() {
    const GalleryItem item = gallery_build("roots-of-unity:8");
    const AndersonRecord rec =
        anderson_check(item.matrix(), ConvexAnalyticCurve::circle(0.0, 1.0));
    expect(rec.touch_count == 8, "touch count " + std::to_string(rec.touch_count));
    expect(rec.report.arcs.empty(),
           std::to_string(rec.report.arcs.size()) + " coincidence arcs reported");
    const double want = 1.0 - std::cos(pi / 8.0);
    expect(std::fabs(rec.hausdorff - want) <= 1e-6,
           "hausdorff " + fmt(rec.hausdorff) + " vs " + fmt(want));
}

// 3. 200 seeded random matrices rescaled to numerical radius 1: the census
// against the unit circle never claims more than n touches without filling.
void criterion3() {
    const ConvexAnalyticCurve unit = ConvexAnalyticCurve::circle(0.0, 1.0);
    AndersonOptions opt;
    opt.grid = 128;
    opt.refine = false;
    for (int seed = 1; seed <= 200; ++seed) {
        const int n = 2 + (seed % 11);
        ComplexMatrix A =
            gallery_build("random:" + std::to_string(n) + ":" + std::to_string(seed)).matrix();
        const double w = max_support(A, 4096);
        expect(w > 1e-6, "seed " + std::to_string(seed) + ": degenerate radius");
        A = scale(A, cplx(1.0 / w, 0.0));
        const AndersonRecord rec = anderson_check(A, unit, opt);
        expect(!rec.inconsistency,
               "seed " + std::to_string(seed) + ": inconsistency fired (" +
                   std::to_string(rec.touch_count) + " touches, n = " + std::to_string(n) +
                   ", " + rec.conclusion + ")");
    }
}

// 4. diag(0, 1, i) against the real segment [0, 2]: the coincident part is
// exactly [0, 1], and the segment's own support function is rejected as a
// curve because its radius of curvature vanishes.
void criterion4() {
    const CliResult r = run_cli("segment --gallery example3 --from 0,0 --to 2,0");
    expect(r.status == 0, "segment exited " + std::to_string(r.status));
    double x1, y1, x2, y2;
    expect(std::sscanf(r.out.c_str(), "%lf %lf %lf %lf", &x1, &y1, &x2, &y2) == 4,
           "unexpected segment output: " + r.out);
    expect(std::fabs(x1) <= 1e-8 && std::fabs(y1) <= 1e-8, "left endpoint (" + fmt(x1) + ", " +
                                                               fmt(y1) + ") not at 0");
    expect(std::fabs(x2 - 1.0) <= 1e-8 && std::fabs(y2) <= 1e-8,
           "right endpoint (" + fmt(x2) + ", " + fmt(y2) + ") not at 1");

    const int m = 721;
    std::vector<double> th(m), h(m), dh(m), d2h(m);
    for (int i = 0; i < m; ++i) {
        th[i] = 2.0 * pi * i / (m - 1);
        const double c = std::cos(th[i]);
        h[i] = std::max(0.0, c);
        dh[i] = c > 0.0 ? -std::sin(th[i]) : 0.0;
        d2h[i] = c > 0.0 ? -c : 0.0;
    }
    bool rejected = false;
    try {
        const ConvexAnalyticCurve bad = ConvexAnalyticCurve::tabulated(th, h, dh, d2h);
        (void)bad;
    } catch (const CurveInvalidError&) {
        rejected = true;
    }
    expect(rejected, "segment support function accepted as a convex analytic curve");
}

// 5. Diagonal family with entries e^{i/k}: the tail estimate pins the
// essential range near the point 1, so the unit circle fails the tangent
// hypothesis at angle 0.
void criterion5() {
    const json e = run_cli_json(
        "ess --family diagonal:exp-i-over-k --schedule 50:100,100:200,200:400");
    expect(e["empty"] == false, "empty intersection");
    const std::vector<cplx> poly = json_polygon(e["intersection"]);
    expect(poly.size() >= 3, "degenerate intersection polygon");
    double far = 0.0;
    for (cplx v : poly) far = std::max(far, std::abs(v - cplx(1.0)));
    const double hd = std::max(far, distance_to_polygon(cplx(1.0), poly));
    expect(hd <= 0.02, "intersection vs point 1 hausdorff " + fmt(hd));

    const json a = run_cli_json(
        "anderson --family diagonal:exp-i-over-k --schedule 50:100,100:200,200:400"
        " --curve circle:1");
    expect(a["conclusion"] == "hypothesis-failure",
           "conclusion " + a["conclusion"].dump());
    bool at_zero = false;
    for (const json& t : a["tangent_failures"]) {
        const double v = t.get<double>();
        if (std::fabs(v) <= 1e-9 || std::fabs(v - 2 * pi) <= 1e-9) at_zero = true;
    }
    expect(at_zero, "tangent at angle 0 not among the failures");
}

// 6. Truncated shift: every section support value equals cos(pi/(N+1))
// independent of angle, and every sampled tangent of the unit circle meets
// the essential-range estimate.
void criterion6() {
    const OperatorFamily shift = OperatorFamily::unit_shift();
    for (int N : {16, 64, 256}) {
        const ComplexMatrix S = truncate(shift, N);
        const double want = std::cos(pi / (N + 1));
        for (double th : {0.0, 0.35, 1.234, 2.5, 4.1, 5.9}) {
            const double mu = support_value(S, th).mu;
            expect(std::fabs(mu - want) <= 1e-9, "N = " + std::to_string(N) + ", theta " +
                                                     fmt(th) + ": mu " + fmt(mu) + " vs " +
                                                     fmt(want));
        }
    }
    const CircumscriptionOptions opt;
    const CircumscriptionReport rep = circumscription_experiment(
        shift, ConvexAnalyticCurve::circle(0.0, 1.0), default_schedule(), opt);
    expect(rep.containment_ok, "sections escaped the unit circle");
    expect(!rep.tangents_clear, "tangent test unexpectedly clear");
    expect(static_cast<int>(rep.tangent_failures.size()) == opt.tangent_grid,
           std::to_string(rep.tangent_failures.size()) + " of " +
               std::to_string(opt.tangent_grid) + " tangent angles failed");
}

// 7. Diagonal family 1, i, i/2, i/3, ...: the support line at -pi/2 is
// reached essentially, the one at 0 only by the leading entry, and the
// N = 400 section fills the triangle {0, 1, i}.
void criterion7() {
    const OperatorFamily fam = OperatorFamily::diagonal(DiagonalRuleName::one_then_i_over_k);
    const std::vector<std::pair<int, int>> sched{{50, 100}, {100, 200}, {200, 400}};
    const SupportVerdict down = essential_support_check(fam, -pi / 2.0, sched).verdict;
    expect(down == SupportVerdict::essential, "support line at -pi/2 not marked essential");
    const SupportVerdict right = essential_support_check(fam, 0.0, sched).verdict;
    expect(right == SupportVerdict::discrete, "support line at 0 not marked discrete");

    const NumericalRangeBoundary b = boundary_sweep(truncate(fam, 400), 128, true);
    const std::vector<cplx> triangle{cplx(0.0), cplx(1.0), cplx(0.0, 1.0)};
    const double hd = hausdorff_distance(b.polyline, triangle, true);
    expect(hd <= 0.01, "section boundary vs triangle hausdorff " + fmt(hd));
}

// 8. Derivative identity along traced branches of 50 seeded random matrices,
// and a clean diabatic passage through an engineered crossing of two
// direct-sum branches.
void criterion8() {
    for (int seed = 1; seed <= 50; ++seed) {
        const ComplexMatrix A = gallery_build("random:20:" + std::to_string(seed)).matrix();
        const TraceResult tr = trace_branches(A, 0.0, 0.05, 1e-3, 1);
        expect(!tr.branches.empty(), "seed " + std::to_string(seed) + ": no branch");
        const double dtol = default_degeneracy_tol(A);
        for (const Branch& br : tr.branches) {
            const double dev = hellmann_feynman_check(br, dtol).max_deviation;
            expect(dev <= 1e-5,
                   "seed " + std::to_string(seed) + ": deviation " + fmt(dev));
        }
    }

    const ComplexMatrix block = ComplexMatrix::diagonal({cplx(0.0), cplx(1.0), cplx(0.0, 1.0)});
    const ComplexMatrix D = direct_sum(block, scale(block, std::polar(1.0, pi / 4.0)));
    const TraceResult tr = trace_branches(D, pi / 8.0, 0.03, 1e-3, 2);
    expect(tr.min_overlap >= 1.0 / std::sqrt(2.0) - 1e-12,
           "continuation overlap dropped to " + fmt(tr.min_overlap));
    bool near = false;
    for (const CrossingEvent& ev : tr.crossings)
        if (std::fabs(ev.theta - pi / 8.0) <= 5e-3) near = true;
    expect(near, "no crossing recorded near pi/8 (" + std::to_string(tr.crossings.size()) +
                     " events)");
}

// 9. 2x2 companion-style matrix with eigenvalues +-1: swept boundary matches
// the declared ellipse, the census reports it filled, and a brute-force
// million-point sphere sample agrees with the support function.
void criterion9() {
    const GalleryItem item = gallery_build("ellipse2x2");
    expect(item.truth.ellipse.has_value(), "missing ellipse description");
    const EllipseTruth& et = *item.truth.ellipse;
    const ConvexAnalyticCurve curve =
        ConvexAnalyticCurve::ellipse(et.center, et.semi_major, et.semi_minor, et.tilt);
    AndersonOptions opt;
    opt.grid = 1536;
    const AndersonRecord rec = anderson_check(item.matrix(), curve, opt);
    expect(rec.hausdorff <= 1e-6, "boundary vs ellipse hausdorff " + fmt(rec.hausdorff));
    expect(rec.conclusion == "filled", "census conclusion " + rec.conclusion);

    const ComplexMatrix& A = item.matrix();
    std::vector<cplx> samples;
    samples.reserve(1000 * 1000);
    for (int i = 0; i < 1000; ++i) {
        const double alpha = (pi / 2.0) * i / 999.0;
        const cplx x0(std::cos(alpha));
        const double s = std::sin(alpha);
        for (int j = 0; j < 1000; ++j) {
            const std::vector<cplx> x{x0, std::polar(s, 2.0 * pi * j / 1000.0)};
            samples.push_back(rayleigh(A, x));
        }
    }
    double worst = 0.0;
    for (int t = 0; t < 256; ++t) {
        const double theta = 2.0 * pi * t / 256.0;
        const cplx dir = std::polar(1.0, -theta);
        double best = -1e300;
        for (cplx z : samples) best = std::max(best, (dir * z).real());
        worst = std::max(worst, std::fabs(curve.h(theta) - best));
    }
    expect(worst <= 1e-4, "sphere sample vs support function gap " + fmt(worst));
}

void check_invariants(const std::string& tag, const ComplexMatrix& A, std::uint64_t seed) {
    const NumericalRangeBoundary b = boundary_sweep(A, 64, true);
    const double s = b.scale;

    const std::vector<cplx>& P = b.polyline;
    expect(P.size() >= 3, tag + ": degenerate polyline");
    for (size_t i = 0; i < P.size(); ++i) {
        const cplx e1 = P[(i + 1) % P.size()] - P[i];
        const cplx e2 = P[(i + 2) % P.size()] - P[(i + 1) % P.size()];
        if (std::abs(e1) < 1e-13 * s || std::abs(e2) < 1e-13 * s) continue;
        expect(cross(e1, e2) >= -1e-8 * s * s,
               tag + ": boundary turns clockwise at vertex " + std::to_string(i));
    }

    Rng rng(seed);
    for (int k = 0; k < 20; ++k) {
        const cplx z = rayleigh(A, random_unit(rng, A.dim()));
        expect(contains_point(b, z, 1e-9 * s), tag + ": sampled range value escaped");
    }

    const cplx shift(0.3, -0.7);
    for (double th : {0.0, 0.9, 2.2, 4.0, 5.5}) {
        const double mu = support_value(A, th).mu;
        const double rot = support_value(rotate(A, -0.75), th).mu;
        expect(std::fabs(rot - support_value(A, th - 0.75).mu) <= 1e-9 * (2 + s),
               tag + ": rotation equivariance broke at theta " + fmt(th));
        const double tra = support_value(add_scaled_identity(A, shift), th).mu;
        const double want = mu + (std::polar(1.0, -th) * shift).real();
        expect(std::fabs(tra - want) <= 1e-9 * (2 + s),
               tag + ": translation equivariance broke at theta " + fmt(th));
    }

    const EigenDecomposition eig = hermitian_eig(real_part(A));
    expect(std::fabs(eig.values.back() - support_value(A, 0.0).mu) <= 1e-9 * (2 + s),
           tag + ": top eigenvalue of the hermitian part misses mu(0)");
    expect(std::fabs(-eig.values.front() - support_value(A, pi).mu) <= 1e-9 * (2 + s),
           tag + ": bottom eigenvalue of the hermitian part misses -mu(pi)");
}

// 10. Invariant suite over the whole gallery and 100 seeded random matrices:
// convex swept boundaries that contain sampled range values and known
// spectra, support-function equivariance, the normal-matrix hull oracle, and
// monotone finite sections.
void criterion10() {
    const std::vector<std::string> items{"example1",        "example2",    "example3",
                                         "example4",        "shift",       "jordan:8",
                                         "roots-of-unity:7", "disk2x2",    "ellipse2x2",
                                         "random-normal:6:2", "random:6:5"};
    std::uint64_t seed = 1000;
    for (const std::string& name : items) {
        const GalleryItem item = gallery_build(name, 24);
        const ComplexMatrix A = item.section(24);
        check_invariants(name, A, ++seed);
        if (!item.is_family() && !item.truth.eigenvalues.empty()) {
            const NumericalRangeBoundary b = boundary_sweep(A, 96, false);
            for (cplx lam : item.truth.eigenvalues)
                expect(contains_point(b, lam, 1e-8 * b.scale),
                       name + ": eigenvalue (" + fmt(lam.real()) + ", " + fmt(lam.imag()) +
                           ") outside the swept range");
        }
    }

    for (const char* name : {"example3", "random-normal:5:3", "random-normal:6:9"}) {
        const GalleryItem item = gallery_build(name);
        const NumericalRangeBoundary b = boundary_sweep(item.matrix(), 256, true);
        const std::vector<cplx> hull = convex_hull(item.truth.eigenvalues);
        const double hd = hausdorff_distance(b.polyline, hull, true);
        expect(hd <= 1e-6,
               std::string(name) + ": boundary vs spectral hull hausdorff " + fmt(hd));
    }

    const std::vector<OperatorFamily> fams{
        OperatorFamily::diagonal(DiagonalRuleName::exp_i_over_k),
        OperatorFamily::diagonal(DiagonalRuleName::one_then_i_over_k),
        OperatorFamily::unit_shift(),
        OperatorFamily::weighted_shift({cplx(1.0), cplx(0.5), cplx(0.25)})};
    for (const OperatorFamily& fam : fams) {
        std::vector<ComplexMatrix> secs;
        for (int n : {8, 16, 32, 64}) secs.push_back(truncate(fam, n));
        for (int t = 0; t < 16; ++t) {
            const double th = 2.0 * pi * t / 16.0;
            double prev = -1e300;
            for (const ComplexMatrix& S : secs) {
                const double mu = support_value(S, th).mu;
                expect(mu >= prev - 1e-11, fam.descriptor + ": support value shrank from " +
                                               fmt(prev) + " to " + fmt(mu) + " at theta " +
                                               fmt(th));
                prev = mu;
            }
        }
    }

    for (int s = 1; s <= 100; ++s) {
        const int n = 2 + (s % 7);
        const ComplexMatrix A =
            gallery_build("random:" + std::to_string(n) + ":" + std::to_string(s)).matrix();
        check_invariants("random seed " + std::to_string(s), A, 5000 + s);
    }
}

struct Criterion {
    int id;
    const char* label;
    void (*run)();
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "nilpotent disk reproduction", criterion1},
        {2, "octagon touch census sharpness", criterion2},
        {3, "rescaled random census consistency", criterion3},
        {4, "segment coincidence and curve rejection", criterion4},
        {5, "diagonal family tangent obstruction", criterion5},
        {6, "shift sections and all-angle tangent failure", criterion6},
        {7, "essential vs discrete support attribution", criterion7},
        {8, "derivative identity and crossing passage", criterion8},
        {9, "ellipse reproduction and sphere oracle", criterion9},
        {10, "invariant suite over gallery and random matrices", criterion10},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string verdict = "PASS";
        std::string detail;
        try {
            c.run();
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
            ++failures;
        }
        std::cout << "criterion " << c.id << " (" << c.label << "): " << verdict;
        if (!detail.empty()) std::cout << " [" << detail << "]";
        std::cout << std::endl;
    }
    if (failures != 0) std::cout << failures << " of 10 criteria failed" << std::endl;
    return failures == 0 ? 0 : 1;
}
