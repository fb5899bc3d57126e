#include "numrange/io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace numrange::io {

namespace {

using nlohmann::json;

json parse_json(std::istream& in, const std::string& what) {
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(what + ": " + e.what());
    }
}

json point_json(cplx z) { return json::array({z.real(), z.imag()}); }

json polygon_json(const std::vector<cplx>& poly) {
    json a = json::array();
    for (cplx z : poly) a.push_back(point_json(z));
    return a;
}

json ess_to_json(const EssRangeEstimate& est) {
    json j;
    j["schedule"] = json::array();
    for (auto [n, N] : est.schedule) j["schedule"].push_back(json::array({n, N}));
    j["polygons"] = json::array();
    for (const auto& p : est.polygons) j["polygons"].push_back(polygon_json(p));
    j["running_intersection"] = json::array();
    for (const auto& p : est.running_intersection)
        j["running_intersection"].push_back(polygon_json(p));
    j["intersection"] = polygon_json(est.intersection);
    j["drift"] = est.drift;
    j["inflation"] = est.inflation;
    j["empty"] = est.empty;
    return j;
}

json anderson_to_json(const AndersonRecord& rec) {
    json j;
    j["n"] = rec.n;
    j["touch_count"] = rec.touch_count;
    j["touches"] = json::array();
    for (const Touch& t : rec.report.touches)
        j["touches"].push_back(
            {{"theta", t.theta}, {"x", t.point.real()}, {"y", t.point.imag()}});
    j["arcs"] = json::array();
    for (const CoincidenceArc& a : rec.report.arcs)
        j["arcs"].push_back({{"theta_lo", a.theta_lo},
                             {"theta_hi", a.theta_hi},
                             {"arc_length", a.arc_length},
                             {"max_gap", a.max_gap},
                             {"touches_arc_endpoint", a.touches_arc_endpoint}});
    j["coincidence_total_length"] = rec.coincidence_total_length;
    j["hausdorff"] = rec.hausdorff;
    j["conclusion"] = rec.conclusion;
    j["inconsistency"] = rec.inconsistency;
    switch (rec.report.verdict) {
    case IntersectVerdict::coincidence: j["verdict"] = "coincidence"; break;
    case IntersectVerdict::finite_touch: j["verdict"] = "finite-touch"; break;
    case IntersectVerdict::disjoint: j["verdict"] = "disjoint"; break;
    }
    j["tol"] = rec.report.tol;
    j["min_arc_length"] = rec.report.min_arc_length;
    return j;
}

} // namespace

ComplexMatrix read_matrix_json(std::istream& in) {
    const json j = parse_json(in, "matrix");
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw ParseError("matrix: expected an object with 'n' and 'entries'");
    if (!j["n"].is_number_integer() || j["n"].get<int>() < 1)
        throw ParseError("matrix: 'n' must be a positive integer");
    const int n = j["n"].get<int>();
    const json& e = j["entries"];
    if (!e.is_array() || static_cast<int>(e.size()) != n)
        throw ParseError("matrix: 'entries' must hold n rows");
    ComplexMatrix A(n);
    for (int i = 0; i < n; ++i) {
        if (!e[i].is_array() || static_cast<int>(e[i].size()) != n)
            throw ParseError("matrix: each row must hold n entries");
        for (int k = 0; k < n; ++k) {
            const json& z = e[i][k];
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
                throw ParseError("matrix: entries must be [re, im] pairs");
            A(i, k) = cplx(z[0].get<double>(), z[1].get<double>());
        }
    }
    return A;
}

ComplexMatrix read_matrix_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_matrix_json(in);
}

void write_matrix_json(std::ostream& out, const ComplexMatrix& A) {
    json rows = json::array();
    for (int i = 0; i < A.dim(); ++i) {
        json row = json::array();
        for (int k = 0; k < A.dim(); ++k) row.push_back(point_json(A(i, k)));
        rows.push_back(row);
    }
    out << json{{"n", A.dim()}, {"entries", rows}}.dump(2) << "\n";
}

void sweep_csv(std::ostream& out, const NumericalRangeBoundary& b) {
    out << "theta,mu,multiplicity,px,py,flat\n" << std::setprecision(17);
    for (const SupportSample& s : b.samples) {
        out << s.theta << ',' << s.mu << ',' << s.multiplicity << ','
            << s.boundary_lo.real() << ',' << s.boundary_lo.imag() << ','
            << (s.is_segment ? 1 : 0) << '\n';
        if (s.is_segment)
            out << s.theta << ',' << s.mu << ',' << s.multiplicity << ','
                << s.boundary_hi.real() << ',' << s.boundary_hi.imag() << ",1\n";
    }
}

void branches_csv(std::ostream& out, const TraceResult& res, double hf_max_deviation) {
    out << "theta,branch,lambda,zx,zy,is_top\n" << std::setprecision(17);
    for (size_t bi = 0; bi < res.branches.size(); ++bi) {
        const Branch& br = res.branches[bi];
        for (size_t i = 0; i < br.thetas.size(); ++i)
            out << br.thetas[i] << ',' << bi << ',' << br.lambdas[i] << ','
                << br.zetas[i].real() << ',' << br.zetas[i].imag() << ','
                << br.is_top[i] << '\n';
    }
    out << "# hellmann_feynman_max_deviation = " << hf_max_deviation << "\n";
}

void ess_json(std::ostream& out, const EssRangeEstimate& est) {
    out << ess_to_json(est).dump(2) << "\n";
}

void anderson_json(std::ostream& out, const AndersonRecord& rec) {
    out << anderson_to_json(rec).dump(2) << "\n";
}

void circumscription_json(std::ostream& out, const CircumscriptionReport& rep) {
    json j;
    j["containment_ok"] = rep.containment_ok;
    j["tangents_clear"] = rep.tangents_clear;
    j["tangent_failures"] = rep.tangent_failures;
    j["conclusion"] = rep.conclusion;
    j["coincidence_present"] = rep.coincidence_present;
    j["largest_section"] = anderson_to_json(rep.largest_section);
    j["ess"] = ess_to_json(rep.ess);
    out << j.dump(2) << "\n";
}

void svg_plot(std::ostream& out, const std::vector<SvgLayer>& layers, double width) {
    double xlo = 0.0, xhi = 1.0, ylo = 0.0, yhi = 1.0;
    bool first = true;
    for (const SvgLayer& l : layers)
        for (cplx z : l.points) {
            if (first) {
                xlo = xhi = z.real();
                ylo = yhi = z.imag();
                first = false;
            } else {
                xlo = std::min(xlo, z.real());
                xhi = std::max(xhi, z.real());
                ylo = std::min(ylo, z.imag());
                yhi = std::max(yhi, z.imag());
            }
        }
    const double span = std::max({xhi - xlo, yhi - ylo, 1e-9});
    const double margin = 0.05 * span;
    xlo -= margin;
    xhi += margin;
    ylo -= margin;
    yhi += margin;
    const double s = width / (xhi - xlo);
    const double height = (yhi - ylo) * s;
    auto X = [&](double x) { return (x - xlo) * s; };
    auto Y = [&](double y) { return (yhi - y) * s; };

    out << std::setprecision(8) << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
        << width << ' ' << height << "\">\n";
    for (const SvgLayer& l : layers) {
        if (l.points.empty()) continue;
        if (l.dots) {
            for (cplx z : l.points)
                out << "  <circle cx=\"" << X(z.real()) << "\" cy=\"" << Y(z.imag())
                    << "\" r=\"2.5\" fill=\"" << l.color << "\"/>\n";
            continue;
        }
        out << "  <path fill=\"none\" stroke=\"" << l.color << "\" stroke-width=\"1.5\" d=\"";
        for (size_t i = 0; i < l.points.size(); ++i)
            out << (i == 0 ? 'M' : 'L') << X(l.points[i].real()) << ' '
                << Y(l.points[i].imag());
        if (l.closed) out << 'Z';
        out << "\"/>\n";
    }
    out << "</svg>\n";
}

OperatorFamily parse_family(const std::string& spec) {
    if (spec == "unit-shift" || spec == "shift") return OperatorFamily::unit_shift();
    if (spec == "diagonal:exp-i-over-k")
        return OperatorFamily::diagonal(DiagonalRuleName::exp_i_over_k);
    if (spec == "diagonal:one-then-i-over-k")
        return OperatorFamily::diagonal(DiagonalRuleName::one_then_i_over_k);
    const std::string ws = "weighted-shift:";
    if (spec.rfind(ws, 0) == 0) {
        std::vector<cplx> weights;
        std::stringstream ss(spec.substr(ws.size()));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                size_t used = 0;
                const double w = std::stod(tok, &used);
                if (used != tok.size()) throw ParseError("");
                weights.push_back(w);
            } catch (const std::exception&) {
                throw ParseError("family: bad weight '" + tok + "'");
            }
        }
        if (weights.empty()) throw ParseError("family: weighted-shift needs weights");
        return OperatorFamily::weighted_shift(std::move(weights));
    }
    throw ParseError("family: unknown descriptor '" + spec + "'");
}

ConvexAnalyticCurve parse_curve(const std::string& spec) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : spec) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);

    double arc_lo = 0.0, arc_hi = 0.0;
    bool arc = false;
    if (parts.size() >= 3 && parts[parts.size() - 3] == "arc") {
        arc = true;
        try {
            arc_lo = std::stod(parts[parts.size() - 2]);
            arc_hi = std::stod(parts[parts.size() - 1]);
        } catch (const std::exception&) {
            throw ParseError("curve: bad arc bounds");
        }
        parts.resize(parts.size() - 3);
    }
    if (parts.empty()) throw ParseError("curve: empty descriptor");

    auto num = [&](size_t i) {
        try {
            size_t used = 0;
            const double v = std::stod(parts[i], &used);
            if (used != parts[i].size()) throw ParseError("");
            return v;
        } catch (const std::exception&) {
            throw ParseError("curve: bad number '" + parts[i] + "'");
        }
    };

    auto center = [&](size_t i) {
        try {
            return parse_complex(parts[i]);
        } catch (const std::exception&) {
            throw ParseError("curve: bad center '" + parts[i] + "'");
        }
    };

    ConvexAnalyticCurve g = [&] {
        if (parts[0] == "circle") {
            if (parts.size() != 2 && parts.size() != 3)
                throw ParseError("curve: circle:r[:cx,cy]");
            return ConvexAnalyticCurve::circle(parts.size() == 3 ? center(2) : cplx(0.0),
                                               num(1));
        }
        if (parts[0] == "ellipse") {
            if (parts.size() < 3 || parts.size() > 5)
                throw ParseError("curve: ellipse:a:b[:cx,cy][:rot]");
            return ConvexAnalyticCurve::ellipse(parts.size() >= 4 ? center(3) : cplx(0.0),
                                                num(1), num(2),
                                                parts.size() == 5 ? num(4) : 0.0);
        }
        if (parts[0] == "tabulated") {
            if (parts.size() != 2) throw ParseError("curve: tabulated:file.json");
            std::ifstream in(parts[1]);
            if (!in) throw ParseError("curve: cannot open '" + parts[1] + "'");
            const json j = parse_json(in, "curve");
            for (const char* key : {"theta", "h", "dh", "d2h"})
                if (!j.contains(key) || !j[key].is_array())
                    throw ParseError("curve: tabulated file needs theta, h, dh, d2h arrays");
            auto nums = [&](const char* key) {
                std::vector<double> v;
                for (const json& x : j[key]) {
                    if (!x.is_number()) throw ParseError("curve: non-numeric sample");
                    v.push_back(x.get<double>());
                }
                return v;
            };
            return ConvexAnalyticCurve::tabulated(nums("theta"), nums("h"), nums("dh"),
                                                  nums("d2h"));
        }
        throw ParseError("curve: unknown kind '" + parts[0] + "'");
    }();
    if (arc) return g.restricted(arc_lo, arc_hi);
    return g;
}

std::vector<std::pair<int, int>> parse_schedule(const std::string& spec) {
    std::vector<std::pair<int, int>> schedule;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const size_t colon = tok.find(':');
        if (colon == std::string::npos)
            throw ParseError("schedule: expected n:N in '" + tok + "'");
        try {
            size_t ua = 0, ub = 0;
            const int a = std::stoi(tok.substr(0, colon), &ua);
            const int b = std::stoi(tok.substr(colon + 1), &ub);
            if (ua != colon || ub != tok.size() - colon - 1) throw ParseError("");
            schedule.emplace_back(a, b);
        } catch (const std::exception&) {
            throw ParseError("schedule: bad window '" + tok + "'");
        }
    }
    if (schedule.empty()) throw ParseError("schedule: empty");
    return schedule;
}

cplx parse_complex(const std::string& spec) {
    const size_t comma = spec.find(',');
    try {
        if (comma == std::string::npos) {
            size_t used = 0;
            const double x = std::stod(spec, &used);
            if (used != spec.size()) throw ParseError("");
            return cplx(x, 0.0);
        }
        size_t ua = 0, ub = 0;
        const double x = std::stod(spec.substr(0, comma), &ua);
        const double y = std::stod(spec.substr(comma + 1), &ub);
        if (ua != comma || ub != spec.size() - comma - 1) throw ParseError("");
        return cplx(x, y);
    } catch (const std::exception&) {
        throw ParseError("bad point '" + spec + "', expected x,y");
    }
}

} // namespace numrange::io
