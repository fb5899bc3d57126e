#pragma once

#include "numrange/complex_matrix.hpp"

namespace numrange {

struct EigenDecomposition {
    std::vector<double> values;             // ascending
    std::vector<std::vector<cplx>> vectors; // vectors[k] pairs with values[k], orthonormal
};

// Full eigendecomposition of a Hermitian matrix: Householder tridiagonalization,
// phase realification of the subdiagonal, implicit-shift QL with accumulated
// rotations. Throws PreconditionError if the input is not Hermitian, and
// NumericalError if the QL iteration stalls.
EigenDecomposition hermitian_eig(const ComplexMatrix& A);

} // namespace numrange
