#include <fstream>
#include <iostream>
#include <numbers>

#include <CLI11.hpp>

#include "numrange/gallery.hpp"
#include "numrange/io.hpp"

using namespace numrange;

namespace {

ComplexMatrix load_matrix(const std::string& input, const std::string& gallery, int n) {
    if (!input.empty()) return io::read_matrix_json_file(input);
    return gallery_build(gallery, n).section(n);
}

template <class F>
void emit(const std::string& path, F f) {
    if (path.empty()) {
        f(std::cout);
        return;
    }
    std::ofstream os(path);
    if (!os) throw ParseError("cannot open output '" + path + "'");
    f(os);
}

void add_source(CLI::App* cmd, std::string& input, std::string& gallery) {
    auto* src = cmd->add_option_group("source");
    src->add_option("--input", input, "matrix as JSON");
    src->add_option("--gallery", gallery, "gallery descriptor, e.g. jordan:12");
    src->require_option(1);
}

int run(int argc, char** argv) {
    CLI::App app{"numerical range toolkit"};
    app.require_subcommand(1);

    auto* boundary = app.add_subcommand("boundary", "sweep the numerical range boundary");
    std::string b_input, b_gallery, b_out, b_svg;
    int b_n = 64, b_grid = 256;
    bool b_refine = true;
    add_source(boundary, b_input, b_gallery);
    boundary->add_option("--n", b_n, "section size for gallery families");
    boundary->add_option("--grid", b_grid, "number of support angles");
    boundary->add_flag("--refine,!--no-refine", b_refine, "bisect long boundary chords");
    boundary->add_option("--out", b_out, "CSV output path (default stdout)");
    boundary->add_option("--svg", b_svg, "also write an SVG plot");

    auto* branches = app.add_subcommand("branches", "trace analytic eigenvalue branches");
    std::string r_input, r_gallery, r_out;
    int r_n = 64, r_top = 1;
    double r_center = 0.0, r_halfwidth = std::numbers::pi / 8, r_step = 0.01;
    add_source(branches, r_input, r_gallery);
    branches->add_option("--n", r_n, "section size for gallery families");
    branches->add_option("--center", r_center, "central angle");
    branches->add_option("--halfwidth", r_halfwidth, "half width of the angle window");
    branches->add_option("--step", r_step, "angle step")->check(CLI::PositiveNumber);
    branches->add_option("--top", r_top, "number of leading branches");
    branches->add_option("--out", r_out, "CSV output path (default stdout)");

    auto* ess = app.add_subcommand("ess", "estimate the essential numerical range");
    std::string e_family = "unit-shift", e_schedule, e_out, e_svg;
    int e_grid = 128;
    bool e_no_inflation = false;
    std::vector<double> e_checks;
    ess->add_option("--family", e_family, "operator family descriptor");
    ess->add_option("--schedule", e_schedule, "windows n:N,n:N,... (default doubling)");
    ess->add_option("--grid", e_grid, "support angles per window");
    ess->add_flag("--no-drift-inflation", e_no_inflation,
                  "intersect raw window polygons without drift dilation");
    ess->add_option("--check-theta", e_checks,
                    "also classify the support line at this angle (repeatable)");
    ess->add_option("--out", e_out, "JSON output path (default stdout)");
    ess->add_option("--svg", e_svg, "also write an SVG plot");

    auto* anderson = app.add_subcommand(
        "anderson", "compare the range boundary against a circumscribing curve");
    std::string a_input, a_gallery, a_family, a_curve, a_schedule, a_out;
    int a_n = 64, a_grid = 256;
    bool a_refine = true;
    auto* a_src = anderson->add_option_group("source");
    a_src->add_option("--input", a_input, "matrix as JSON");
    a_src->add_option("--gallery", a_gallery, "gallery descriptor");
    a_src->add_option("--family", a_family, "operator family descriptor");
    a_src->require_option(1);
    anderson->add_option("--n", a_n, "section size for gallery families");
    anderson->add_option("--curve", a_curve, "curve descriptor: circle:r[:cx,cy], ellipse:a:b[:cx,cy][:rot], tabulated:file.json, each with optional :arc:lo:hi")
        ->required();
    anderson->add_option("--schedule", a_schedule, "windows for family mode");
    auto* a_grid_opt = anderson->add_option("--grid", a_grid, "support angles");
    anderson->add_flag("--refine,!--no-refine", a_refine, "bisect long boundary chords");
    anderson->add_option("--out", a_out, "JSON output path (default stdout)");

    auto* segment = app.add_subcommand("segment", "overlap of a segment with the range");
    std::string s_input, s_gallery, s_from, s_to;
    int s_n = 64, s_grid = 512;
    double s_resolution = 1e-9;
    add_source(segment, s_input, s_gallery);
    segment->add_option("--n", s_n, "section size for gallery families");
    segment->add_option("--from", s_from, "segment start x,y")->required();
    segment->add_option("--to", s_to, "segment end x,y")->required();
    segment->add_option("--grid", s_grid, "support angles for the sweep");
    segment->add_option("--resolution", s_resolution, "endpoint resolution")
        ->check(CLI::PositiveNumber);

    auto* gallery = app.add_subcommand("gallery", "list or emit gallery items");
    std::string g_action = "list", g_name, g_out;
    int g_n = 64;
    gallery->add_option("action", g_action, "list or emit")
        ->check(CLI::IsMember({"list", "emit"}));
    gallery->add_option("--name", g_name, "gallery descriptor to emit");
    gallery->add_option("--n", g_n, "section size");
    gallery->add_option("--out", g_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (boundary->parsed()) {
        const ComplexMatrix A = load_matrix(b_input, b_gallery, b_n);
        const NumericalRangeBoundary b = boundary_sweep(A, b_grid, b_refine);
        emit(b_out, [&](std::ostream& os) { io::sweep_csv(os, b); });
        if (!b_svg.empty()) {
            std::vector<io::SvgLayer> layers;
            layers.push_back({b.polyline, "#1f77b4", true, false});
            std::vector<cplx> flats;
            for (const FlatSegment& f : b.flat_segments) {
                flats.push_back(f.lo);
                flats.push_back(f.hi);
            }
            if (!flats.empty()) layers.push_back({flats, "#d62728", false, true});
            emit(b_svg, [&](std::ostream& os) { io::svg_plot(os, layers); });
        }
        if (!b.flat_segments.empty())
            std::cerr << "note: " << b.flat_segments.size()
                      << " flat boundary segment(s) found\n";
        return 0;
    }

    if (branches->parsed()) {
        const ComplexMatrix A = load_matrix(r_input, r_gallery, r_n);
        const TraceResult res = trace_branches(A, r_center, r_halfwidth, r_step, r_top);
        const double dtol = default_degeneracy_tol(A);
        double hf = 0.0;
        for (const Branch& br : res.branches)
            hf = std::max(hf, hellmann_feynman_check(br, dtol).max_deviation);
        emit(r_out, [&](std::ostream& os) { io::branches_csv(os, res, hf); });
        std::cerr << "branches: " << res.branches.size()
                  << ", crossings: " << res.crossings.size()
                  << ", min overlap: " << res.min_overlap << "\n";
        return 0;
    }

    if (ess->parsed()) {
        const OperatorFamily fam = io::parse_family(e_family);
        const auto schedule =
            e_schedule.empty() ? default_schedule() : io::parse_schedule(e_schedule);
        const EssOptions opt{e_grid, !e_no_inflation};
        const EssRangeEstimate est = ess_range_estimate(fam, schedule, opt);
        emit(e_out, [&](std::ostream& os) { io::ess_json(os, est); });
        if (!e_svg.empty()) {
            std::vector<io::SvgLayer> layers;
            for (const auto& p : est.polygons) layers.push_back({p, "#bbbbbb", true, false});
            layers.push_back({est.intersection, "#1f77b4", true, false});
            emit(e_svg, [&](std::ostream& os) { io::svg_plot(os, layers); });
        }
        for (double t : e_checks) {
            const SupportCheckReport rep = essential_support_check(fam, t, schedule, opt);
            const char* verdict = rep.verdict == SupportVerdict::essential ? "essential"
                                  : rep.verdict == SupportVerdict::discrete ? "discrete"
                                                                            : "inconclusive";
            std::cerr << "theta " << t << ": " << verdict << "\n";
        }
        return 0;
    }

    if (anderson->parsed()) {
        const ConvexAnalyticCurve g = io::parse_curve(a_curve);
        if (!a_family.empty()) {
            const OperatorFamily fam = io::parse_family(a_family);
            const auto schedule =
                a_schedule.empty() ? default_schedule() : io::parse_schedule(a_schedule);
            CircumscriptionOptions opt;
            if (a_grid_opt->count() > 0) opt.ess.grid = a_grid;
            const CircumscriptionReport rep =
                circumscription_experiment(fam, g, schedule, opt);
            emit(a_out, [&](std::ostream& os) { io::circumscription_json(os, rep); });
            std::cerr << "conclusion: " << rep.conclusion << "\n";
            return 0;
        }
        const ComplexMatrix A = load_matrix(a_input, a_gallery, a_n);
        const AndersonOptions opt{a_grid, a_refine, -1.0, -1.0};
        const AndersonRecord rec = anderson_check(A, g, opt);
        emit(a_out, [&](std::ostream& os) { io::anderson_json(os, rec); });
        std::cerr << "conclusion: " << rec.conclusion << " (touches " << rec.touch_count
                  << ", hausdorff " << rec.hausdorff << ")\n";
        return 0;
    }

    if (segment->parsed()) {
        const ComplexMatrix A = load_matrix(s_input, s_gallery, s_n);
        const NumericalRangeBoundary b = boundary_sweep(A, s_grid, true);
        const SegmentResult r =
            segment_coincidence(b, io::parse_complex(s_from), io::parse_complex(s_to),
                                s_resolution);
        if (r.empty) {
            std::cout << "empty\n";
        } else {
            std::cout.precision(17);
            std::cout << r.from.real() << ' ' << r.from.imag() << ' ' << r.to.real() << ' '
                      << r.to.imag() << "\n";
        }
        std::cerr << "note: containment is tested against sampled support lines; "
                     "endpoints on straight boundary pieces are attained, open "
                     "boundary arcs are reached only in the closure\n";
        return 0;
    }

    if (gallery->parsed()) {
        if (g_action == "list") {
            emit(g_out, [&](std::ostream& os) {
                for (const std::string& n : gallery_names()) os << n << "\n";
            });
            return 0;
        }
        if (g_name.empty()) throw ParseError("gallery emit needs --name");
        const GalleryItem item = gallery_build(g_name, g_n);
        const ComplexMatrix A = item.section(g_n);
        emit(g_out, [&](std::ostream& os) { io::write_matrix_json(os, A); });
        std::cerr << item.truth.summary << "\n";
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CurveInvalidError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ContainmentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
