#include "rankforge/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "rankforge/errors.hpp"
#include "rankforge/hessenberg_qr.hpp"

namespace rankforge {

Spectrum full_spectrum(const GoogleMatrix& gm) {
    const int n = gm.n();
    Spectrum s;
    s.alpha = gm.alpha();
    s.eigenvalues = dense_eigenvalues(gm.materialize(), n);
    std::sort(s.eigenvalues.begin(), s.eigenvalues.end(),
              [](const std::complex<double>& a, const std::complex<double>& b) {
                  const double ma = std::abs(a), mb = std::abs(b);
                  if (ma != mb)
                      return ma > mb;
                  if (a.real() != b.real())
                      return a.real() > b.real();
                  return a.imag() > b.imag();
              });
    return s;
}

SpectralStats spectral_stats(const Spectrum& s, double threshold) {
    if (threshold < 0.0)
        throw Error("threshold must be nonnegative");
    SpectralStats stats;
    if (s.eigenvalues.empty())
        return stats;
    std::size_t above = 0;
    for (const auto& z : s.eigenvalues)
        if (std::abs(z) > threshold)
            ++above;
    stats.fraction_above_threshold =
        static_cast<double>(above) / static_cast<double>(s.eigenvalues.size());
    if (s.eigenvalues.size() > 1)
        stats.lambda2_modulus = std::abs(s.eigenvalues[1]);
    return stats;
}

double trace_check(const GoogleMatrix& gm, const Spectrum& s) {
    const auto n = static_cast<std::size_t>(gm.n());
    const std::vector<double> dense = gm.materialize();
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        trace += dense[i * n + i];
    std::complex<double> sum = 0.0;
    for (const auto& z : s.eigenvalues)
        sum += z;
    return std::abs(sum - trace);
}

} // namespace rankforge
