#pragma once

#include <complex>
#include <vector>

#include "rankforge/google_matrix.hpp"

namespace rankforge {

/// Full complex eigenvalue spectrum of a Google matrix, sorted by decreasing
/// modulus, ties by decreasing real part, then decreasing imaginary part.
struct Spectrum {
    std::vector<std::complex<double>> eigenvalues;
    double alpha = 0.0;
};

/// Dense eigensolve of materialize(gm). Throws SizeError beyond the dense
/// guard and NumericalError if the QR iteration fails.
Spectrum full_spectrum(const GoogleMatrix& gm);

struct SpectralStats {
    double fraction_above_threshold = 0.0; ///< |{i : |lambda_i| > threshold}| / n
    double lambda2_modulus = 0.0;
};

SpectralStats spectral_stats(const Spectrum& s, double threshold);

/// Eigensolver self-check: |trace(materialize(gm)) - sum of eigenvalues|.
double trace_check(const GoogleMatrix& gm, const Spectrum& s);

} // namespace rankforge
