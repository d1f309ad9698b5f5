#pragma once

#include <complex>
#include <functional>

namespace pfspec::numeric {

using RealFunction = std::function<double(double)>;

/// Adaptive Gauss-Kronrod integral of f over [a, b]. Either bound may be
/// infinite.
double integrate(const RealFunction& f, double a, double b, double relTol = 1e-14);

/// Physicists' Hermite polynomial H_n(z) by the three-term recurrence
/// H_0 = 1, H_1 = 2z, H_{k+1} = 2z H_k - 2k H_{k-1}.
double hermite(int n, double z);

/// Associated Legendre function P_l^m(x), m >= 0, with the Condon-Shortley
/// phase (-1)^m included.
double assocLegendre(int l, int m, double x);

/// Orthonormal spherical harmonic Y_l^m(theta, phi), |m| <= l.
std::complex<double> sphericalHarmonic(int l, int m, double theta, double phi);

/// Count of strict sign changes in a sampled sequence. Exact zeros are
/// skipped, so a zero at an endpoint is not counted as a node.
template <class Range>
int countSignChanges(const Range& values)
{
    int changes = 0;
    int lastSign = 0;
    for (double v : values) {
        const int s = (v > 0) - (v < 0);
        if (s == 0) {
            continue;
        }
        if (lastSign != 0 && s != lastSign) {
            ++changes;
        }
        lastSign = s;
    }
    return changes;
}

/// Five-point central second derivative with step h.
inline double secondDerivative(const RealFunction& f, double x, double h)
{
    const double fm2 = f(x - 2 * h);
    const double fm1 = f(x - h);
    const double f0 = f(x);
    const double fp1 = f(x + h);
    const double fp2 = f(x + 2 * h);
    return (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h);
}

/// Five-point central first derivative with step h.
inline double firstDerivative(const RealFunction& f, double x, double h)
{
    return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

} // namespace pfspec::numeric
