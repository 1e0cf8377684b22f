#include "rankforge/hessenberg_qr.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "rankforge/errors.hpp"

// Classical dense nonsymmetric eigenvalue pipeline. The routines below use
// 1-based index arithmetic throughout, matching the standard statement of
// these algorithms; the accessor hides the offset.

namespace rankforge {

namespace {

// |a| with the sign of b (b = 0 counts as positive).
double sign_of(double a, double b) {
    return b < 0.0 ? -std::abs(a) : std::abs(a);
}

class Dense {
public:
    Dense(double* data, int n) : data_(data), n_(n) {}
    double& operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
                     static_cast<std::size_t>(j - 1)];
    }

private:
    double* data_;
    int n_;
};

// Exact-scaling balance. Rows/columns that already isolate an eigenvalue are
// pushed outside [low, high] by symmetric row+column exchanges; the remaining
// block is rescaled by powers of two (no rounding) until row and column norms
// are of comparable size.
void balance(const Dense& h, int n, int& low, int& high) {
    constexpr double radix = 2.0;
    constexpr double b2 = radix * radix;
    int k = 1;
    int l = n;

    auto exchange = [&](int j, int m) {
        if (j == m)
            return;
        for (int i = 1; i <= l; ++i)
            std::swap(h(i, j), h(i, m));
        for (int i = k; i <= n; ++i)
            std::swap(h(j, i), h(m, i));
    };

    // Rows with zero off-diagonal entries go to the bottom.
    for (;;) {
        int j = l;
        bool isolated = false;
        for (; j >= 1; --j) {
            bool zero = true;
            for (int i = 1; i <= l && zero; ++i)
                if (i != j && h(j, i) != 0.0)
                    zero = false;
            if (zero) {
                isolated = true;
                break;
            }
        }
        if (!isolated)
            break;
        exchange(j, l);
        if (l == 1) {
            low = k;
            high = l;
            return;
        }
        --l;
    }

    // Columns with zero off-diagonal entries go to the left.
    for (;;) {
        int j = k;
        bool isolated = false;
        for (; j <= l; ++j) {
            bool zero = true;
            for (int i = k; i <= l && zero; ++i)
                if (i != j && h(i, j) != 0.0)
                    zero = false;
            if (zero) {
                isolated = true;
                break;
            }
        }
        if (!isolated)
            break;
        exchange(j, k);
        ++k;
    }

    // Iterative norm reduction on the central block.
    bool noconv = true;
    while (noconv) {
        noconv = false;
        for (int i = k; i <= l; ++i) {
            double c = 0.0, r = 0.0;
            for (int j = k; j <= l; ++j) {
                if (j == i)
                    continue;
                c += std::abs(h(j, i));
                r += std::abs(h(i, j));
            }
            if (c == 0.0 || r == 0.0)
                continue;
            double g = r / radix;
            double f = 1.0;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= b2;
            }
            g = r * radix;
            while (c >= g) {
                f /= radix;
                c /= b2;
            }
            if ((c + r) / f < 0.95 * s) {
                g = 1.0 / f;
                noconv = true;
                for (int j = k; j <= n; ++j)
                    h(i, j) *= g;
                for (int j = 1; j <= l; ++j)
                    h(j, i) *= f;
            }
        }
    }
    low = k;
    high = l;
}

// Reduction to upper Hessenberg form by elementary similarity
// transformations with partial pivoting, acting on rows/columns low..high.
void hessenberg_reduce(const Dense& h, int n, int low, int high) {
    for (int m = low + 1; m <= high - 1; ++m) {
        double x = 0.0;
        int pivot = m;
        for (int j = m; j <= high; ++j) {
            if (std::abs(h(j, m - 1)) > std::abs(x)) {
                x = h(j, m - 1);
                pivot = j;
            }
        }
        if (pivot != m) {
            for (int j = m - 1; j <= n; ++j)
                std::swap(h(pivot, j), h(m, j));
            for (int j = 1; j <= high; ++j)
                std::swap(h(j, pivot), h(j, m));
        }
        if (x == 0.0)
            continue;
        for (int i = m + 1; i <= high; ++i) {
            double y = h(i, m - 1);
            if (y == 0.0)
                continue;
            y /= x;
            h(i, m - 1) = y; // multiplier scratch; cleared below
            for (int j = m; j <= n; ++j)
                h(i, j) -= y * h(m, j);
            for (int j = 1; j <= high; ++j)
                h(j, m) += y * h(j, i);
        }
    }
    // Clear the multiplier scratch below the subdiagonal.
    for (int j = low; j <= high - 2; ++j)
        for (int i = j + 2; i <= high; ++i)
            h(i, j) = 0.0;
}

// Francis double-shift QR iteration on an upper Hessenberg matrix;
// eigenvalues only. Returns the 1-based index of a non-converged eigenvalue,
// or 0 on success.
int hqr(const Dense& h, int n, int low, int high, std::vector<double>& wr,
        std::vector<double>& wi) {
    double norm = 0.0;
    {
        int k = 1;
        for (int i = 1; i <= n; ++i) {
            for (int j = k; j <= n; ++j)
                norm += std::abs(h(i, j));
            k = i;
            if (i < low || i > high) {
                wr[static_cast<std::size_t>(i)] = h(i, i);
                wi[static_cast<std::size_t>(i)] = 0.0;
            }
        }
    }

    int en = high;
    double t = 0.0;
    int itn = 30 * n;
    double p = 0.0, q = 0.0, r = 0.0;

    while (en >= low) {
        int its = 0;
        const int na = en - 1;
        const int enm2 = na - 1;
        for (;;) {
            // Look for a single negligible subdiagonal element.
            int l = en;
            while (l > low) {
                double s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
                if (s == 0.0)
                    s = norm;
                if (s + std::abs(h(l, l - 1)) == s)
                    break;
                --l;
            }

            double x = h(en, en);
            if (l == en) { // one root found
                wr[static_cast<std::size_t>(en)] = x + t;
                wi[static_cast<std::size_t>(en)] = 0.0;
                en = na;
                break;
            }
            double y = h(na, na);
            double w = h(en, na) * h(na, en);
            if (l == na) { // two roots found
                p = (y - x) / 2.0;
                q = p * p + w;
                double zz = std::sqrt(std::abs(q));
                x += t;
                if (q >= 0.0) { // real pair
                    zz = p + sign_of(zz, p);
                    wr[static_cast<std::size_t>(na)] = x + zz;
                    wr[static_cast<std::size_t>(en)] =
                        zz != 0.0 ? x - w / zz : wr[static_cast<std::size_t>(na)];
                    wi[static_cast<std::size_t>(na)] = 0.0;
                    wi[static_cast<std::size_t>(en)] = 0.0;
                } else { // complex pair
                    wr[static_cast<std::size_t>(na)] = x + p;
                    wr[static_cast<std::size_t>(en)] = x + p;
                    wi[static_cast<std::size_t>(na)] = zz;
                    wi[static_cast<std::size_t>(en)] = -zz;
                }
                en = enm2;
                break;
            }

            if (itn == 0)
                return en;
            if (its == 10 || its == 20) {
                // Exceptional shift.
                t += x;
                for (int i = low; i <= en; ++i)
                    h(i, i) -= x;
                const double s = std::abs(h(en, na)) + std::abs(h(na, enm2));
                x = 0.75 * s;
                y = x;
                w = -0.4375 * s * s;
            }
            ++its;
            --itn;

            // Look for two consecutive small subdiagonal elements.
            int m = enm2;
            for (; m >= l; --m) {
                const double zz = h(m, m);
                r = x - zz;
                double s = y - zz;
                p = (r * s - w) / h(m + 1, m) + h(m, m + 1);
                q = h(m + 1, m + 1) - zz - r - s;
                r = h(m + 2, m + 1);
                s = std::abs(p) + std::abs(q) + std::abs(r);
                p /= s;
                q /= s;
                r /= s;
                if (m == l)
                    break;
                const double tst1 =
                    std::abs(p) * (std::abs(h(m - 1, m - 1)) + std::abs(zz) +
                                   std::abs(h(m + 1, m + 1)));
                if (tst1 + std::abs(h(m, m - 1)) * (std::abs(q) + std::abs(r)) == tst1)
                    break;
            }
            for (int i = m + 2; i <= en; ++i) {
                h(i, i - 2) = 0.0;
                if (i != m + 2)
                    h(i, i - 3) = 0.0;
            }

            // Double QR step on rows l..en and columns m..en.
            for (int k = m; k <= na; ++k) {
                const bool notlast = k != na;
                if (k != m) {
                    p = h(k, k - 1);
                    q = h(k + 1, k - 1);
                    r = notlast ? h(k + 2, k - 1) : 0.0;
                    x = std::abs(p) + std::abs(q) + std::abs(r);
                    if (x == 0.0)
                        continue;
                    p /= x;
                    q /= x;
                    r /= x;
                }
                const double s = sign_of(std::sqrt(p * p + q * q + r * r), p);
                if (k != m)
                    h(k, k - 1) = -s * x;
                else if (l != m)
                    h(k, k - 1) = -h(k, k - 1);
                p += s;
                x = p / s;
                y = q / s;
                const double zz = r / s;
                q /= p;
                r /= p;
                if (notlast) {
                    for (int j = k; j <= en; ++j) {
                        const double pp = h(k, j) + q * h(k + 1, j) + r * h(k + 2, j);
                        h(k, j) -= pp * x;
                        h(k + 1, j) -= pp * y;
                        h(k + 2, j) -= pp * zz;
                    }
                    const int last_row = std::min(en, k + 3);
                    for (int i = l; i <= last_row; ++i) {
                        const double pp = x * h(i, k) + y * h(i, k + 1) + zz * h(i, k + 2);
                        h(i, k) -= pp;
                        h(i, k + 1) -= pp * q;
                        h(i, k + 2) -= pp * r;
                    }
                } else {
                    for (int j = k; j <= en; ++j) {
                        const double pp = h(k, j) + q * h(k + 1, j);
                        h(k, j) -= pp * x;
                        h(k + 1, j) -= pp * y;
                    }
                    const int last_row = std::min(en, k + 3);
                    for (int i = l; i <= last_row; ++i) {
                        const double pp = x * h(i, k) + y * h(i, k + 1);
                        h(i, k) -= pp;
                        h(i, k + 1) -= pp * q;
                    }
                }
            }
        }
    }
    return 0;
}

} // namespace

std::vector<std::complex<double>> dense_eigenvalues(std::vector<double> a, int n) {
    if (n < 0 || a.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw DimensionError("dense_eigenvalues: buffer of " + std::to_string(a.size()) +
                             " entries for n=" + std::to_string(n));
    if (n == 0)
        return {};

    const Dense h(a.data(), n);
    int low = 1, high = n;
    balance(h, n, low, high);
    hessenberg_reduce(h, n, low, high);

    std::vector<double> wr(static_cast<std::size_t>(n) + 1);
    std::vector<double> wi(static_cast<std::size_t>(n) + 1);
    if (const int bad = hqr(h, n, low, high, wr, wi); bad != 0)
        throw NumericalError("QR iteration failed to converge for eigenvalue " +
                                 std::to_string(bad) + " of " + std::to_string(n),
                             bad);

    std::vector<std::complex<double>> values;
    values.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        values.emplace_back(wr[static_cast<std::size_t>(i)], wi[static_cast<std::size_t>(i)]);
    return values;
}

} // namespace rankforge
