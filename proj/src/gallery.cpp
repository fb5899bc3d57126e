#include "numrange/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "numrange/geometry.hpp"

namespace numrange {

std::uint64_t Rng::next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::next_gaussian() {
    const double u = next_uniform(), v = next_uniform();
    return std::sqrt(-2.0 * std::log(u)) *
           std::cos(2.0 * std::numbers::pi * v);
}

cplx Rng::next_complex_gaussian() {
    const double u = next_uniform(), v = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    return cplx(r * std::cos(2.0 * std::numbers::pi * v),
                r * std::sin(2.0 * std::numbers::pi * v));
}

ComplexMatrix GalleryItem::section(int n) const {
    if (is_family()) return truncate(family(), n);
    return matrix();
}

namespace {

constexpr double pi = std::numbers::pi;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw ParseError("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("gallery: bad " + what + " '" + s + "'");
    }
}

double parse_double(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size() || !std::isfinite(v)) throw ParseError("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("gallery: bad " + what + " '" + s + "'");
    }
}

GalleryItem jordan_item(int n) {
    if (n < 1) throw ParseError("gallery: jordan needs n >= 1");
    ComplexMatrix A(n);
    for (int i = 0; i + 1 < n; ++i) A(i, i + 1) = 1.0;
    GalleryItem item;
    item.name = "jordan";
    item.truth.summary = "nilpotent Jordan block; the range is a centered disk";
    item.truth.disk = DiskTruth{0.0, std::cos(pi / (n + 1))};
    item.truth.eigenvalues.assign(n, 0.0);
    item.object = std::move(A);
    return item;
}

GalleryItem roots_item(int n) {
    if (n < 1) throw ParseError("gallery: roots-of-unity needs n >= 1");
    std::vector<cplx> d(n);
    for (int k = 0; k < n; ++k) d[k] = std::polar(1.0, 2.0 * pi * k / n);
    GalleryItem item;
    item.name = "roots-of-unity";
    item.truth.summary = "unitary diagonal; the range is the regular n-gon";
    item.truth.hull = convex_hull(d);
    item.truth.eigenvalues = d;
    item.object = ComplexMatrix::diagonal(d);
    return item;
}

GalleryItem disk2x2_item(double r) {
    if (r <= 0.0) throw ParseError("gallery: disk2x2 needs r > 0");
    ComplexMatrix A(2);
    A(0, 1) = 2.0 * r;
    GalleryItem item;
    item.name = "disk2x2";
    item.truth.summary = "rank-one nilpotent; the range is a centered disk";
    item.truth.disk = DiskTruth{0.0, r};
    item.truth.eigenvalues = {0.0, 0.0};
    item.object = std::move(A);
    return item;
}

GalleryItem ellipse2x2_item(double f, double b) {
    if (f <= 0.0 || b <= 0.0) throw ParseError("gallery: ellipse2x2 needs f, b > 0");
    ComplexMatrix A(2);
    A(0, 0) = f;
    A(1, 1) = -f;
    A(0, 1) = 2.0 * b;
    GalleryItem item;
    item.name = "ellipse2x2";
    std::ostringstream os;
    os << "2x2 with eigenvalues +-" << f << "; the range is the ellipse with those foci";
    item.truth.summary = os.str();
    item.truth.ellipse = EllipseTruth{0.0, std::sqrt(f * f + b * b), b, 0.0};
    item.truth.eigenvalues = {cplx(f, 0.0), cplx(-f, 0.0)};
    item.object = std::move(A);
    return item;
}

GalleryItem random_normal_item(int n, std::uint64_t seed) {
    if (n < 1) throw ParseError("gallery: random-normal needs n >= 1");
    Rng rng(seed);
    std::vector<cplx> lambda(n);
    for (cplx& z : lambda) z = rng.next_complex_gaussian();

    // orthonormalize a Gaussian matrix's columns
    std::vector<std::vector<cplx>> cols(n, std::vector<cplx>(n));
    for (auto& col : cols)
        for (cplx& z : col) z = rng.next_complex_gaussian();
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < j; ++k) {
            const cplx c = inner(cols[j], cols[k]);
            for (int i = 0; i < n; ++i) cols[j][i] -= c * cols[k][i];
        }
        const double nrm = norm2(cols[j]);
        for (cplx& z : cols[j]) z /= nrm;
    }

    ComplexMatrix A(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < n; ++k) s += cols[k][i] * lambda[k] * std::conj(cols[k][j]);
            A(i, j) = s;
        }

    GalleryItem item;
    item.name = "random-normal";
    item.truth.summary = "random normal matrix; the range is the eigenvalue hull";
    item.truth.hull = convex_hull(lambda);
    item.truth.eigenvalues = lambda;
    item.object = std::move(A);
    return item;
}

GalleryItem random_item(int n, std::uint64_t seed) {
    if (n < 1) throw ParseError("gallery: random needs n >= 1");
    Rng rng(seed);
    ComplexMatrix A(n);
    const double s = 1.0 / std::sqrt(2.0 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = s * rng.next_complex_gaussian();
    GalleryItem item;
    item.name = "random";
    item.truth.summary = "dense complex Gaussian matrix, unit-scale";
    item.object = std::move(A);
    return item;
}

} // namespace

GalleryItem gallery_build(const std::string& spec, int default_n) {
    const auto parts = split(spec, ':');
    const std::string& name = parts[0];
    const size_t np = parts.size() - 1;
    auto arg = [&](size_t i) -> const std::string& { return parts[i + 1]; };
    auto want = [&](size_t lo, size_t hi) {
        if (np < lo || np > hi)
            throw ParseError("gallery: wrong parameter count for '" + name + "'");
    };

    if (name == "example1") {
        want(0, 0);
        GalleryItem item;
        item.name = name;
        item.object = OperatorFamily::diagonal(DiagonalRuleName::exp_i_over_k);
        item.truth.summary =
            "diagonal exp(i/k); eigenvalues march along the unit circle into 1";
        item.truth.essential = ess_oracle(item.family());
        return item;
    }
    if (name == "example2") {
        want(0, 0);
        GalleryItem item;
        item.name = name;
        item.object = OperatorFamily::unit_shift();
        item.truth.summary = "unit shift; the range of the full operator is the open disk";
        item.truth.disk = DiskTruth{0.0, 1.0};
        item.truth.essential = ess_oracle(item.family());
        return item;
    }
    if (name == "example3") {
        want(0, 0);
        GalleryItem item;
        item.name = name;
        item.object = ComplexMatrix::diagonal({cplx(0, 0), cplx(1, 0), cplx(0, 1)});
        item.truth.summary = "normal 3x3; the range is the triangle 0, 1, i";
        item.truth.hull = std::vector<cplx>{cplx(0, 0), cplx(1, 0), cplx(0, 1)};
        item.truth.eigenvalues = {cplx(0, 0), cplx(1, 0), cplx(0, 1)};
        return item;
    }
    if (name == "example4") {
        want(0, 0);
        GalleryItem item;
        item.name = name;
        item.object = OperatorFamily::diagonal(DiagonalRuleName::one_then_i_over_k);
        item.truth.summary =
            "diagonal 1, i, i/2, ...; closure of the range is the triangle 0, 1, i";
        item.truth.hull = std::vector<cplx>{cplx(0, 0), cplx(1, 0), cplx(0, 1)};
        item.truth.essential = ess_oracle(item.family());
        return item;
    }
    if (name == "shift") {
        want(0, 0);
        GalleryItem item;
        item.name = name;
        item.object = OperatorFamily::unit_shift();
        item.truth.summary = "unit shift";
        item.truth.disk = DiskTruth{0.0, 1.0};
        item.truth.essential = ess_oracle(item.family());
        return item;
    }
    if (name == "jordan") {
        want(0, 1);
        return jordan_item(np >= 1 ? parse_int(arg(0), "n") : default_n);
    }
    if (name == "roots-of-unity") {
        want(0, 1);
        return roots_item(np >= 1 ? parse_int(arg(0), "n") : default_n);
    }
    if (name == "disk2x2") {
        want(0, 1);
        return disk2x2_item(np >= 1 ? parse_double(arg(0), "radius") : 1.0);
    }
    if (name == "ellipse2x2") {
        want(0, 2);
        if (np == 1) throw ParseError("gallery: ellipse2x2 needs both f and b");
        return ellipse2x2_item(np >= 2 ? parse_double(arg(0), "focus") : 1.0,
                               np >= 2 ? parse_double(arg(1), "minor semi-axis") : 0.5);
    }
    if (name == "random-normal") {
        want(1, 2);
        return random_normal_item(parse_int(arg(0), "n"),
                                  np >= 2 ? parse_int(arg(1), "seed") : 1);
    }
    if (name == "random") {
        want(1, 2);
        return random_item(parse_int(arg(0), "n"),
                           np >= 2 ? parse_int(arg(1), "seed") : 1);
    }
    throw ParseError("gallery: unknown item '" + name + "'");
}

std::vector<std::string> gallery_names() {
    return {"example1",   "example2",   "example3",       "example4",
            "shift",      "jordan:n",   "roots-of-unity:n", "disk2x2:r",
            "ellipse2x2:f:b", "random-normal:n:seed", "random:n:seed"};
}

} // namespace numrange
