#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "numrange/complex_matrix.hpp"
#include "numrange/hermitian_eig.hpp"

using namespace numrange;

namespace {

constexpr double pi = std::numbers::pi;

// Deterministic generator for test matrices.
struct TestRng {
    uint64_t s;
    explicit TestRng(uint64_t seed) : s(seed) {}
    uint64_t next_u64() {
        s += 0x9e3779b97f4a7c15ull;
        uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform() { return ((next_u64() >> 11) + 0.5) * 0x1p-53; }
    cplx entry() { return cplx(2.0 * uniform() - 1.0, 2.0 * uniform() - 1.0); }
};

ComplexMatrix random_hermitian(int n, uint64_t seed) {
    TestRng rng(seed);
    ComplexMatrix H(n);
    for (int i = 0; i < n; ++i) {
        H(i, i) = 2.0 * rng.uniform() - 1.0;
        for (int j = i + 1; j < n; ++j) {
            cplx v = rng.entry();
            H(i, j) = v;
            H(j, i) = std::conj(v);
        }
    }
    return H;
}

ComplexMatrix toeplitz_tridiagonal(int n, cplx sub) {
    ComplexMatrix T(n);
    for (int i = 0; i + 1 < n; ++i) {
        T(i + 1, i) = sub;
        T(i, i + 1) = std::conj(sub);
    }
    return T;
}

double eig_residual(const ComplexMatrix& H, const EigenDecomposition& ed) {
    double worst = 0.0;
    for (size_t k = 0; k < ed.values.size(); ++k) {
        std::vector<cplx> r = matvec(H, ed.vectors[k]);
        for (size_t i = 0; i < r.size(); ++i) r[i] -= ed.values[k] * ed.vectors[k][i];
        worst = std::max(worst, norm2(r));
    }
    return worst;
}

double orthonormality_defect(const EigenDecomposition& ed) {
    double worst = 0.0;
    for (size_t i = 0; i < ed.vectors.size(); ++i)
        for (size_t j = 0; j < ed.vectors.size(); ++j) {
            cplx g = inner(ed.vectors[i], ed.vectors[j]);
            if (i == j) g -= 1.0;
            worst = std::max(worst, std::abs(g));
        }
    return worst;
}

} // namespace

// Closed form frozen only after this direct-substitution check passes: for the
// tridiagonal Toeplitz matrix with zero diagonal and real off-diagonal b, the
// pairs lambda_k = 2 b cos(k pi/(n+1)), v_j = sin(j k pi/(n+1)) satisfy
// T v = lambda v entrywise.
TEST_CASE("oracle: tridiagonal toeplitz eigenpairs by direct substitution") {
    const int n = 13;
    const double b = 0.5;
    const ComplexMatrix T = toeplitz_tridiagonal(n, b);
    for (int k = 1; k <= n; ++k) {
        const double lam = 2.0 * b * std::cos(k * pi / (n + 1));
        std::vector<cplx> v(n);
        for (int j = 1; j <= n; ++j) v[j - 1] = std::sin(j * k * pi / (n + 1));
        std::vector<cplx> Tv = matvec(T, v);
        for (int j = 0; j < n; ++j)
            CHECK(std::abs(Tv[j] - lam * v[j]) <= 1e-12);
    }
}

TEST_CASE("solver matches toeplitz closed form, real and phased subdiagonal") {
    const int n = 13;
    for (cplx sub : {cplx(0.5, 0.0), cplx(0.5 * std::cos(0.7), 0.5 * std::sin(0.7))}) {
        const ComplexMatrix T = toeplitz_tridiagonal(n, sub);
        EigenDecomposition ed = hermitian_eig(T);
        REQUIRE(ed.values.size() == static_cast<size_t>(n));
        for (int k = 1; k <= n; ++k) {
            // ascending: k-th smallest is cos((n+1-k) pi/(n+1))
            const double lam = std::cos((n + 1 - k) * pi / (n + 1));
            CHECK(std::abs(ed.values[k - 1] - lam) <= 1e-13 * n);
        }
        CHECK(eig_residual(T, ed) <= 1e-10 * (1.0 + T.frobenius_norm()));
        CHECK(orthonormality_defect(ed) <= 1e-10);
    }
}

TEST_CASE("oracle: 2x2 hermitian closed form") {
    TestRng rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        const double a = 2.0 * rng.uniform() - 1.0;
        const double c = 2.0 * rng.uniform() - 1.0;
        const cplx b = rng.entry();
        ComplexMatrix H(2, {a, b, std::conj(b), c});
        const double mid = 0.5 * (a + c);
        const double rad = 0.5 * std::sqrt((a - c) * (a - c) + 4.0 * std::norm(b));
        EigenDecomposition ed = hermitian_eig(H);
        CHECK(ed.values[0] == doctest::Approx(mid - rad).epsilon(1e-12));
        CHECK(ed.values[1] == doctest::Approx(mid + rad).epsilon(1e-12));
        CHECK(eig_residual(H, ed) <= 1e-12 * (1.0 + H.frobenius_norm()));
    }
}

TEST_CASE("solver contract on random hermitian matrices") {
    for (int n : {1, 2, 3, 5, 8, 17, 40}) {
        ComplexMatrix H = random_hermitian(n, 1000 + n);
        EigenDecomposition ed = hermitian_eig(H);
        const double scale = 1.0 + H.frobenius_norm();
        CHECK(eig_residual(H, ed) <= 1e-10 * scale);
        CHECK(orthonormality_defect(ed) <= 1e-10);
        for (int k = 0; k + 1 < n; ++k) CHECK(ed.values[k] <= ed.values[k + 1]);
        // trace preserved
        double tr = 0.0, sum = 0.0;
        for (int i = 0; i < n; ++i) tr += H(i, i).real();
        for (double v : ed.values) sum += v;
        CHECK(tr == doctest::Approx(sum).epsilon(1e-11));
    }
}

TEST_CASE("solver shift property and diagonal matrices") {
    ComplexMatrix H = random_hermitian(9, 42);
    EigenDecomposition ed = hermitian_eig(H);
    EigenDecomposition shifted = hermitian_eig(add_scaled_identity(H, 3.25));
    for (int k = 0; k < 9; ++k)
        CHECK(shifted.values[k] == doctest::Approx(ed.values[k] + 3.25).epsilon(1e-12));

    ComplexMatrix D = ComplexMatrix::diagonal({cplx(3.0), cplx(-1.0), cplx(0.5), cplx(2.0)});
    EigenDecomposition dd = hermitian_eig(D);
    CHECK(dd.values == std::vector<double>{-1.0, 0.5, 2.0, 3.0});
    CHECK(eig_residual(D, dd) == 0.0);
}

TEST_CASE("solver handles degenerate spectra") {
    // identity block plus isolated value
    ComplexMatrix D = ComplexMatrix::diagonal({cplx(1.0), cplx(1.0), cplx(1.0), cplx(4.0)});
    EigenDecomposition ed = hermitian_eig(D);
    CHECK(orthonormality_defect(ed) <= 1e-12);
    CHECK(ed.values[2] == doctest::Approx(1.0));
    CHECK(ed.values[3] == doctest::Approx(4.0));

    // 2x2 multiplicity inside a dense matrix: U diag(1,1,2) U^* built by hand
    ComplexMatrix H = random_hermitian(6, 5);
    EigenDecomposition base = hermitian_eig(H);
    ComplexMatrix R(6);
    // reconstruct with two middle eigenvalues forced equal
    std::vector<double> vals = base.values;
    vals[2] = vals[3] = 0.5 * (vals[2] + vals[3]);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < 6; ++k)
                s += vals[k] * base.vectors[k][i] * std::conj(base.vectors[k][j]);
            R(i, j) = s;
        }
    EigenDecomposition ed2 = hermitian_eig(R);
    CHECK(eig_residual(R, ed2) <= 1e-10 * (1.0 + R.frobenius_norm()));
    CHECK(orthonormality_defect(ed2) <= 1e-10);
    CHECK(ed2.values[2] == doctest::Approx(vals[2]).epsilon(1e-10));
    CHECK(ed2.values[3] == doctest::Approx(vals[2]).epsilon(1e-10));
}

TEST_CASE("matrix helpers: inner convention, parts, rayleigh, compress") {
    std::vector<cplx> x = {cplx(1.0, 1.0), cplx(0.0, 2.0)};
    std::vector<cplx> y = {cplx(0.0, 1.0), cplx(3.0, 0.0)};
    // inner(x, y) = y^* x, linear in x
    CHECK(inner(x, y) == std::conj(y[0]) * x[0] + std::conj(y[1]) * x[1]);
    CHECK(inner(x, x).real() == doctest::Approx(norm2(x) * norm2(x)));

    ComplexMatrix A(2, {cplx(1.0, 2.0), cplx(3.0, -1.0), cplx(0.0, 0.5), cplx(-2.0, 1.0)});
    ComplexMatrix Re = real_part(A), Im = imag_part(A);
    CHECK(Re.is_hermitian());
    CHECK(Im.is_hermitian());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(std::abs(Re(i, j) + cplx(0.0, 1.0) * Im(i, j) - A(i, j)) <= 1e-15);

    // rotation: Re(e^{-i theta} A) interpolates real and imaginary parts
    ComplexMatrix R0 = real_part(rotate(A, 0.0));
    ComplexMatrix Rq = real_part(rotate(A, pi / 2.0));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CHECK(std::abs(R0(i, j) - Re(i, j)) <= 1e-15);
            CHECK(std::abs(Rq(i, j) - Im(i, j)) <= 1e-15);
        }

    ComplexMatrix D = ComplexMatrix::diagonal({cplx(0.0), cplx(1.0)});
    std::vector<cplx> e2 = {0.0, 1.0};
    CHECK(rayleigh(D, e2) == cplx(1.0));
    CHECK_THROWS_AS(rayleigh(D, {cplx(2.0), cplx(0.0)}), PreconditionError);

    // compress onto a standard-basis subset picks the principal submatrix
    ComplexMatrix B(3, {cplx(1), cplx(2), cplx(3), cplx(4), cplx(5), cplx(6), cplx(7), cplx(8), cplx(9)});
    std::vector<std::vector<cplx>> basis = {{1, 0, 0}, {0, 0, 1}};
    ComplexMatrix C = compress(B, basis);
    CHECK(C(0, 0) == cplx(1));
    CHECK(C(0, 1) == cplx(3));
    CHECK(C(1, 0) == cplx(7));
    CHECK(C(1, 1) == cplx(9));

    ComplexMatrix S = direct_sum(ComplexMatrix::identity(1), scale(ComplexMatrix::identity(2), 5.0));
    CHECK(S.dim() == 3);
    CHECK(S(0, 0) == cplx(1));
    CHECK(S(2, 2) == cplx(5));
    CHECK(S(1, 0) == cplx(0));
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(ComplexMatrix(2, {cplx(1.0)}), DimensionError);
    CHECK_THROWS_AS(inner({cplx(1.0)}, {cplx(1.0), cplx(2.0)}), DimensionError);
    ComplexMatrix NotH(2, {cplx(0), cplx(1), cplx(2), cplx(0)});
    CHECK_THROWS_AS(hermitian_eig(NotH), PreconditionError);
    ComplexMatrix Bad(1, {cplx(std::nan(""), 0.0)});
    CHECK_THROWS_AS(hermitian_eig(Bad), PreconditionError);
    ComplexMatrix Empty(0);
    CHECK(hermitian_eig(Empty).values.empty());
}
