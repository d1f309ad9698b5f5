#include <gtest/gtest.h>

#include <cmath>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "pfspec/errors.hpp"
#include "pfspec/oscillator.hpp"

using namespace pfspec;
using namespace pfspec::oscillator;
using units::OscillatorCoupling;

namespace {

// Quadratic-formula roots of E^2 - 2 E E0 - 1 = 0 in long double.
long double massDependentRoot(long double e0, int sign)
{
    return e0 + sign * std::sqrt(e0 * e0 + 1.0L);
}

double overlap(const HermiteGaussian& a, const HermiteGaussian& b)
{
    boost::math::quadrature::exp_sinh<double> integrator;
    const auto f = [&](double x) { return a(x) * b(x) + a(-x) * b(-x); };
    return integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity());
}

} // namespace

TEST(Oscillator, MassDependentMatchesQuadraticFormula)
{
    for (double lambda : {1e-6, 1e-4, 1e-3, 0.05}) {
        const OscillatorCoupling k(lambda);
        for (int n = 0; n <= 6; ++n) {
            const long double e0 = k.level(n);
            const auto plus = energyMassDependent(n, k);
            const auto minus = energyMassDependent(n, k, Branch::Minus);
            EXPECT_NEAR(plus.energy, static_cast<double>(massDependentRoot(e0, +1)), 4e-16);
            EXPECT_NEAR(minus.energy, static_cast<double>(massDependentRoot(e0, -1)), 4e-16);
            EXPECT_TRUE(minus.nonphysical);
            EXPECT_FALSE(plus.nonphysical);
        }
    }
}

TEST(Oscillator, MassDependentBindingIsCancellationFree)
{
    const OscillatorCoupling k(1e-12);
    const auto level = energyMassDependent(0, k);
    // E - 1 = E0 + E0^2/2 + O(E0^4) for tiny E0.
    const double e0 = k.level(0);
    EXPECT_NEAR(level.energy - 1.0, e0, 1e-16);
}

TEST(Oscillator, SecondOrderTermRecovered)
{
    const OscillatorCoupling k(1e-3);
    for (int n = 0; n <= 5; ++n) {
        const double e0 = k.level(n);
        const double excess = energyMassDependent(n, k).energy - 1.0 - e0;
        EXPECT_NEAR(excess / (0.5 * e0 * e0), 1.0, 0.01) << "n=" << n;
    }
}

TEST(Oscillator, HermiteQuantizationCondition)
{
    // A Gaussian-type bound state of chi'' + (beta - alpha^2 x^2) chi = 0
    // requires beta = alpha (2n + 1).
    for (double lambda : {1e-4, 1e-2}) {
        const OscillatorCoupling k(lambda);
        for (int n = 0; n <= 5; ++n) {
            const auto md = energyMassDependent(n, k);
            EXPECT_NEAR(md.beta / (md.alpha * (2 * n + 1)), 1.0, 1e-12);
            const auto mi = energyMassIndependent(n, k, Branch::Plus, AlphaConvention::RestEnergy);
            EXPECT_NEAR(mi.beta / (mi.alpha * (2 * n + 1)), 1.0, 1e-12);
        }
    }
}

TEST(Oscillator, ReducedCoefficients)
{
    const OscillatorCoupling k(0.01);
    const auto md = reducedEquationCoefficients(Variant::MassDependent, 1.5, k);
    EXPECT_DOUBLE_EQ(md.alpha, 0.015);
    EXPECT_DOUBLE_EQ(md.beta, 1.25);
    const auto mi = reducedEquationCoefficients(Variant::MassIndependent, 1.5, k);
    EXPECT_NEAR(mi.alphaSq, 1.5e-4, 1e-18);
    const auto rest = reducedEquationCoefficients(Variant::MassIndependent, 1.5, k, AlphaConvention::RestEnergy);
    EXPECT_NEAR(rest.alphaSq, 1e-4, 1e-18);
    EXPECT_THROW(reducedEquationCoefficients(Variant::MassDependent, 0.0, k), DomainError);
    EXPECT_THROW(energyMassDependent(-1, k), DomainError);
}

TEST(Oscillator, MassIndependentAndKleinGordonCoincide)
{
    const OscillatorCoupling k(2e-3);
    for (int n = 0; n <= 5; ++n) {
        const double expect = std::sqrt(1.0 + 2.0 * k.level(n));
        EXPECT_NEAR(energyMassIndependent(n, k).energy, expect, 1e-15);
        EXPECT_NEAR(kleinGordonEnergy(n, k), expect, 1e-15);
        EXPECT_NEAR(kleinGordonEnergy(n, k, Branch::Minus), -expect, 1e-15);
    }
}

TEST(Oscillator, SecularRootSatisfiesItsEquation)
{
    for (double lambda : {1e-4, 1e-3, 0.05}) {
        const OscillatorCoupling k(lambda);
        for (int n = 0; n <= 5; ++n) {
            const double e = secularMassIndependent(n, k);
            const double e0 = k.level(n);
            EXPECT_NEAR(e * e - 2.0 * std::sqrt(e) * e0 - 1.0, 0.0, 1e-14);
        }
    }
    EXPECT_DOUBLE_EQ(secularMassIndependent(3, OscillatorCoupling(0.0)), 1.0);
}

TEST(Oscillator, SecularMinusSmallLevelFormIsSecondOrder)
{
    // Expanding both roots: secular = 1 + E0 + O(E0^3), sqrt(1+2E0) =
    // 1 + E0 - E0^2/2 + ...; the gap is E0^2/2 at leading order.
    const OscillatorCoupling k(1e-5);
    for (int n = 0; n <= 5; ++n) {
        const double e0 = k.level(n);
        const double gap = secularMassIndependent(n, k) - energyMassIndependent(n, k).energy;
        EXPECT_NEAR(gap / (0.5 * e0 * e0), 1.0, 1e-3) << "n=" << n;
    }
}

TEST(Oscillator, LevelsIncreaseWithN)
{
    const OscillatorCoupling k(1e-3);
    for (int n = 0; n < 8; ++n) {
        EXPECT_LT(energyMassDependent(n, k).energy, energyMassDependent(n + 1, k).energy);
        EXPECT_LT(energyMassIndependent(n, k).energy, energyMassIndependent(n + 1, k).energy);
        EXPECT_LT(secularMassIndependent(n, k), secularMassIndependent(n + 1, k));
    }
}

TEST(Oscillator, HermiteGaussianAgainstStandardLibrary)
{
    const double alpha = 0.7;
    for (int n = 0; n <= 8; ++n) {
        const auto chi = eigenfunction(n, alpha);
        const double norm = std::pow(alpha / M_PI, 0.25) / std::sqrt(std::ldexp(std::tgamma(n + 1.0), n));
        for (double x : {-3.0, -0.4, 0.0, 0.25, 1.7, 4.0}) {
            const double expect = norm * std::exp(-alpha * x * x / 2) * std::hermite(n, std::sqrt(alpha) * x);
            EXPECT_NEAR(chi(x), expect, 1e-14 * std::max(1.0, std::abs(expect)));
        }
    }
    EXPECT_THROW(eigenfunction(0, 0.0), DomainError);
}

TEST(Oscillator, HermiteGaussianOrthonormal)
{
    const double alpha = 1e-3;
    for (int m = 0; m <= 5; ++m) {
        for (int n = m; n <= 5; ++n) {
            const double o = overlap(eigenfunction(m, alpha), eigenfunction(n, alpha));
            EXPECT_NEAR(o, m == n ? 1.0 : 0.0, 1e-10) << m << "," << n;
        }
    }
}

TEST(Oscillator, EigenfunctionSolvesReducedEquation)
{
    const OscillatorCoupling k(0.02);
    for (int n = 0; n <= 4; ++n) {
        const auto level = energyMassDependent(n, k);
        const auto chi = eigenfunction(n, level.alpha);
        const double width = 1.0 / std::sqrt(level.alpha);
        const double h = 1e-2 * width;
        for (double t : {-2.0, -0.7, 0.3, 1.9}) {
            const double x = t * width;
            const double second =
                (-chi(x - 2 * h) + 16 * chi(x - h) - 30 * chi(x) + 16 * chi(x + h) - chi(x + 2 * h)) / (12 * h * h);
            const double rhs = -(level.beta - level.alphaSq * x * x) * chi(x);
            EXPECT_NEAR(second, rhs, 1e-6 * level.alpha * std::pow(level.alpha, 0.25));
        }
    }
}
