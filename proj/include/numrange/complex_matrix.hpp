#pragma once

#include <complex>
#include <vector>

#include "numrange/errors.hpp"

namespace numrange {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() : n_(0) {}
    explicit ComplexMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {
        if (n < 0) throw DimensionError("matrix dimension must be nonnegative");
    }
    ComplexMatrix(int n, std::vector<cplx> entries) : n_(n), a_(std::move(entries)) {
        if (n < 0 || a_.size() != static_cast<size_t>(n) * n)
            throw DimensionError("entry count does not match dimension");
    }

    static ComplexMatrix identity(int n);
    static ComplexMatrix diagonal(const std::vector<cplx>& d);

    int dim() const { return n_; }
    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<cplx>& entries() const { return a_; }

    double max_abs() const;
    double frobenius_norm() const;
    bool is_hermitian(double tol = -1.0) const;
    bool all_finite() const;
    void require_finite() const;

private:
    int n_;
    std::vector<cplx> a_;
};

// y^* x: linear in the first argument.
cplx inner(const std::vector<cplx>& x, const std::vector<cplx>& y);
double norm2(const std::vector<cplx>& x);
std::vector<cplx> matvec(const ComplexMatrix& A, const std::vector<cplx>& x);

// (A + A^*)/2 and (A - A^*)/(2i), both Hermitian.
ComplexMatrix real_part(const ComplexMatrix& A);
ComplexMatrix imag_part(const ComplexMatrix& A);

// e^{-i theta} A.
ComplexMatrix rotate(const ComplexMatrix& A, double theta);

// x^* A x for unit x.
cplx rayleigh(const ComplexMatrix& A, const std::vector<cplx>& x);

ComplexMatrix add_scaled_identity(const ComplexMatrix& A, cplx s);
ComplexMatrix scale(const ComplexMatrix& A, cplx s);
ComplexMatrix direct_sum(const ComplexMatrix& A, const ComplexMatrix& B);

// C(i,j) = <A v_j, v_i> for the given (usually orthonormal) vectors.
ComplexMatrix compress(const ComplexMatrix& A, const std::vector<std::vector<cplx>>& basis);

} // namespace numrange
