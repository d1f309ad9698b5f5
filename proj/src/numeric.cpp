#include "pfspec/numeric.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "pfspec/errors.hpp"

namespace pfspec::numeric {

double integrate(const RealFunction& f, double a, double b, double relTol)
{
    using boost::math::quadrature::gauss_kronrod;
    return gauss_kronrod<double, 31>::integrate(f, a, b, 20, relTol);
}

double hermite(int n, double z)
{
    if (n < 0) {
        throw DomainError("hermite: negative order");
    }
    double prev = 1.0;
    if (n == 0) {
        return prev;
    }
    double curr = 2.0 * z;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * z * curr - 2.0 * k * prev;
        prev = curr;
        curr = next;
    }
    return curr;
}

double assocLegendre(int l, int m, double x)
{
    if (m < 0 || m > l) {
        throw DomainError("assocLegendre: require 0 <= m <= l");
    }
    // P_m^m
    double pmm = 1.0;
    const double somx2 = std::sqrt((1.0 - x) * (1.0 + x));
    double fact = 1.0;
    for (int i = 1; i <= m; ++i) {
        pmm *= -fact * somx2;
        fact += 2.0;
    }
    if (l == m) {
        return pmm;
    }
    double pmmp1 = x * (2 * m + 1) * pmm;
    if (l == m + 1) {
        return pmmp1;
    }
    double pll = 0;
    for (int ll = m + 2; ll <= l; ++ll) {
        pll = ((2 * ll - 1) * x * pmmp1 - (ll + m - 1) * pmm) / (ll - m);
        pmm = pmmp1;
        pmmp1 = pll;
    }
    return pll;
}

std::complex<double> sphericalHarmonic(int l, int m, double theta, double phi)
{
    if (l < 0 || std::abs(m) > l) {
        throw DomainError("sphericalHarmonic: require |m| <= l");
    }
    const int am = std::abs(m);
    // (l - m)! / (l + m)! as a running product to avoid overflow.
    double ratio = 1.0;
    for (int k = l - am + 1; k <= l + am; ++k) {
        ratio /= k;
    }
    const double norm = std::sqrt((2 * l + 1) / (4 * std::numbers::pi) * ratio);
    const double p = assocLegendre(l, am, std::cos(theta));
    const std::complex<double> y = norm * p * std::polar(1.0, am * phi);
    if (m >= 0) {
        return y;
    }
    return (am % 2 == 0 ? 1.0 : -1.0) * std::conj(y);
}

} // namespace pfspec::numeric
