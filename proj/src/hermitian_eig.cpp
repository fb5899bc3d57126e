#include "numrange/hermitian_eig.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <sstream>

namespace numrange {

namespace {

double pythag(double a, double b) { return std::hypot(a, b); }

double sign_like(double a, double b) { return b >= 0.0 ? std::fabs(a) : -std::fabs(a); }

// Implicit-shift QL on the real symmetric tridiagonal (d, e), rotating the
// complex columns of v in step. e[i] couples d[i] and d[i+1]; e[n-1] is zero.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e,
                    std::vector<std::vector<cplx>>& v) {
    const int n = static_cast<int>(d.size());
    const double eps = DBL_EPSILON;
    const int max_iter = 64;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == max_iter) {
                    std::ostringstream os;
                    os << "tridiagonal QL failed to converge at index " << l
                       << ", residual subdiagonal " << std::fabs(e[l]);
                    throw NumericalError(os.str());
                }
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = pythag(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + sign_like(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    e[i + 1] = (r = pythag(f, g));
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    d[i + 1] = g + (p = s * r);
                    g = c * r - b;
                    for (int k = 0; k < n; ++k) {
                        cplx t = v[i + 1][k];
                        v[i + 1][k] = s * v[i][k] + c * t;
                        v[i][k] = c * v[i][k] - s * t;
                    }
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

} // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& A) {
    A.require_finite();
    if (!A.is_hermitian(1e-8 * (1.0 + A.max_abs())))
        throw PreconditionError("hermitian_eig: matrix is not Hermitian");

    const int n = A.dim();
    EigenDecomposition out;
    if (n == 0) return out;

    ComplexMatrix M = real_part(A); // exact symmetrization of roundoff skew
    ComplexMatrix Q = ComplexMatrix::identity(n);

    // Householder reduction to Hermitian tridiagonal form.
    std::vector<cplx> w(n), q(n), t(n);
    for (int k = 0; k + 2 < n; ++k) {
        const int m = n - k - 1; // trailing block size
        double below2 = 0.0;
        for (int i = k + 2; i < n; ++i) below2 += std::norm(M(i, k));
        if (below2 == 0.0) continue;

        const cplx x1 = M(k + 1, k);
        const double xnorm = std::sqrt(std::norm(x1) + below2);
        cplx alpha = (x1 == cplx(0.0)) ? cplx(-xnorm)
                                       : -(x1 / std::abs(x1)) * xnorm;
        double wnorm2 = 0.0;
        for (int i = 0; i < m; ++i) {
            w[i] = M(k + 1 + i, k);
            if (i == 0) w[i] -= alpha;
            wnorm2 += std::norm(w[i]);
        }
        if (wnorm2 == 0.0) continue;
        const double beta = 2.0 / wnorm2;

        // Rank-2 update of the trailing block: M <- M - q w^* - w q^*,
        // with t = beta M w and q = t - (beta/2)(w^* t) w.
        cplx wv = 0.0;
        for (int i = 0; i < m; ++i) {
            cplx s = 0.0;
            for (int j = 0; j < m; ++j) s += M(k + 1 + i, k + 1 + j) * w[j];
            t[i] = beta * s;
            wv += std::conj(w[i]) * t[i];
        }
        const cplx K = 0.5 * beta * wv;
        for (int i = 0; i < m; ++i) q[i] = t[i] - K * w[i];
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                M(k + 1 + i, k + 1 + j) -= q[i] * std::conj(w[j]) + w[i] * std::conj(q[j]);

        M(k + 1, k) = alpha;
        M(k, k + 1) = std::conj(alpha);
        for (int i = k + 2; i < n; ++i) {
            M(i, k) = 0.0;
            M(k, i) = 0.0;
        }

        // Accumulate Q <- Q (I - beta w w^*) on columns k+1..n-1.
        for (int r = 0; r < n; ++r) {
            cplx s = 0.0;
            for (int j = 0; j < m; ++j) s += Q(r, k + 1 + j) * w[j];
            s *= beta;
            for (int j = 0; j < m; ++j) Q(r, k + 1 + j) -= s * std::conj(w[j]);
        }
    }

    // Phase diagonal realifying the subdiagonal; fold it into the vectors.
    std::vector<cplx> phase(n, 1.0);
    std::vector<double> d(n), e(n, 0.0);
    d[0] = M(0, 0).real();
    for (int i = 1; i < n; ++i) {
        const cplx sub = M(i, i - 1);
        const double a = std::abs(sub);
        phase[i] = (a == 0.0) ? phase[i - 1] : phase[i - 1] * (sub / a);
        d[i] = M(i, i).real();
        e[i - 1] = a;
    }

    std::vector<std::vector<cplx>> v(n, std::vector<cplx>(n));
    for (int j = 0; j < n; ++j)
        for (int r = 0; r < n; ++r) v[j][r] = Q(r, j) * phase[j];

    tridiagonal_ql(d, e, v);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return d[a] < d[b]; });

    out.values.resize(n);
    out.vectors.resize(n);
    for (int k = 0; k < n; ++k) {
        out.values[k] = d[order[k]];
        std::vector<cplx>& col = v[order[k]];
        const double nn = norm2(col);
        if (nn > 0.0)
            for (cplx& c : col) c /= nn;
        out.vectors[k] = std::move(col);
    }
    return out;
}

} // namespace numrange
