#pragma once

#include <complex>
#include <vector>

namespace rankforge {

/// Eigenvalues of a dense real n*n matrix (row-major, consumed by value):
/// balancing, reduction to upper Hessenberg form by stabilized elementary
/// similarity transformations, then Francis double-shift QR iteration.
/// Eigenvalues only; no eigenvectors are accumulated.
///
/// Returned in the order the QR deflation produces them (unsorted).
/// Throws DimensionError if a.size() != n*n and NumericalError (carrying the
/// 1-based index) if an eigenvalue fails to converge within 30*n iterations.
std::vector<std::complex<double>> dense_eigenvalues(std::vector<double> a, int n);

} // namespace rankforge
