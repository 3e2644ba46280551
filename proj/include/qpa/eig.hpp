#pragma once

#include <vector>

#include "qpa/complex_matrix.hpp"
#include "qpa/real_matrix.hpp"

namespace qpa {

/// Default tolerance for positive-semidefiniteness tests.
inline constexpr double kPsdTol = 1e-9;

struct HermitianEig {
    std::vector<double> values; // ascending
    ComplexMatrix vectors;      // unitary; columns are eigenvectors
};

/// Spectral decomposition a = V diag(values) V*. Works on the real embedding
/// [[re a, -im a], [im a, re a]], whose spectrum doubles that of a; complex
/// eigenvectors are recovered from the embedded ones per eigenvalue cluster.
HermitianEig eig_hermitian(const HermitianMatrix& a);

/// Eigenvalues only, ascending.
std::vector<double> eigvals_hermitian(const HermitianMatrix& a);

/// True iff the least eigenvalue is >= -tol. Requires tol >= 0.
bool is_psd(const HermitianMatrix& a, double tol = kPsdTol);

/// Least and greatest eigenvalue.
double min_eigenvalue(const HermitianMatrix& a);
double max_eigenvalue(const HermitianMatrix& a);

/// Real embedding [[re a, -im a], [im a, re a]] of a complex matrix.
RealMatrix real_embedding(const ComplexMatrix& a);

} // namespace qpa
