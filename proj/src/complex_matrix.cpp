#include "numrange/complex_matrix.hpp"

#include <cmath>

namespace numrange {

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix I(n);
    for (int i = 0; i < n; ++i) I(i, i) = 1.0;
    return I;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cplx>& d) {
    ComplexMatrix D(static_cast<int>(d.size()));
    for (int i = 0; i < D.dim(); ++i) D(i, i) = d[i];
    return D;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

bool ComplexMatrix::is_hermitian(double tol) const {
    if (tol < 0.0) tol = 1e-12 * (1.0 + max_abs());
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

bool ComplexMatrix::all_finite() const {
    for (const cplx& v : a_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

void ComplexMatrix::require_finite() const {
    if (!all_finite()) throw PreconditionError("matrix has non-finite entries");
}

cplx inner(const std::vector<cplx>& x, const std::vector<cplx>& y) {
    if (x.size() != y.size()) throw DimensionError("inner: length mismatch");
    cplx s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) s += std::conj(y[i]) * x[i];
    return s;
}

double norm2(const std::vector<cplx>& x) {
    double s = 0.0;
    for (const cplx& v : x) s += std::norm(v);
    return std::sqrt(s);
}

std::vector<cplx> matvec(const ComplexMatrix& A, const std::vector<cplx>& x) {
    const int n = A.dim();
    if (x.size() != static_cast<size_t>(n)) throw DimensionError("matvec: length mismatch");
    std::vector<cplx> y(n, 0.0);
    for (int i = 0; i < n; ++i) {
        cplx s = 0.0;
        for (int j = 0; j < n; ++j) s += A(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

ComplexMatrix real_part(const ComplexMatrix& A) {
    const int n = A.dim();
    ComplexMatrix H(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            H(i, j) = 0.5 * (A(i, j) + std::conj(A(j, i)));
    return H;
}

ComplexMatrix imag_part(const ComplexMatrix& A) {
    const int n = A.dim();
    ComplexMatrix H(n);
    const cplx half_over_i(0.0, -0.5);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            H(i, j) = half_over_i * (A(i, j) - std::conj(A(j, i)));
    return H;
}

ComplexMatrix rotate(const ComplexMatrix& A, double theta) {
    return scale(A, std::polar(1.0, -theta));
}

cplx rayleigh(const ComplexMatrix& A, const std::vector<cplx>& x) {
    if (std::abs(norm2(x) - 1.0) > 1e-10)
        throw PreconditionError("rayleigh: vector is not unit norm");
    return inner(matvec(A, x), x);
}

ComplexMatrix add_scaled_identity(const ComplexMatrix& A, cplx s) {
    ComplexMatrix B = A;
    for (int i = 0; i < B.dim(); ++i) B(i, i) += s;
    return B;
}

ComplexMatrix scale(const ComplexMatrix& A, cplx s) {
    ComplexMatrix B = A;
    for (int i = 0; i < B.dim(); ++i)
        for (int j = 0; j < B.dim(); ++j) B(i, j) *= s;
    return B;
}

ComplexMatrix direct_sum(const ComplexMatrix& A, const ComplexMatrix& B) {
    const int na = A.dim(), nb = B.dim();
    ComplexMatrix C(na + nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) C(i, j) = A(i, j);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) C(na + i, na + j) = B(i, j);
    return C;
}

ComplexMatrix compress(const ComplexMatrix& A, const std::vector<std::vector<cplx>>& basis) {
    const int m = static_cast<int>(basis.size());
    for (const auto& v : basis)
        if (v.size() != static_cast<size_t>(A.dim()))
            throw DimensionError("compress: basis vector length mismatch");
    ComplexMatrix C(m);
    for (int j = 0; j < m; ++j) {
        std::vector<cplx> Av = matvec(A, basis[j]);
        for (int i = 0; i < m; ++i) C(i, j) = inner(Av, basis[i]);
    }
    return C;
}

} // namespace numrange
