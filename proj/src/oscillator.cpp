#include "pfspec/oscillator.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "pfspec/numeric.hpp"
#include "pfspec/oracle.hpp"

namespace pfspec::oscillator {

namespace {

void requireLevel(int n)
{
    if (n < 0) {
        throw DomainError("oscillator: n must be >= 0");
    }
}

double alphaSquared(Variant variant, double energy, double lambda, AlphaConvention convention)
{
    const double e = convention == AlphaConvention::SelfConsistent ? energy : 1.0;
    return variant == Variant::MassDependent ? e * e * lambda * lambda : e * lambda * lambda;
}

OscillatorLevel makeLevel(Variant variant, int n, double e0, double energy, double binding,
                          double lambda, Branch branch, AlphaConvention convention)
{
    OscillatorLevel level;
    level.n = n;
    level.e0 = e0;
    level.energy = energy;
    level.branch = branch;
    level.nonphysical = branch == Branch::Minus;
    // E^2 - 1 through E - 1 keeps beta accurate when E is close to 1.
    level.beta = branch == Branch::Plus ? binding * (2.0 + binding) : energy * energy - 1.0;
    level.alphaSq = alphaSquared(variant, energy, lambda, convention);
    level.alpha = level.alphaSq >= 0 ? std::sqrt(level.alphaSq) : std::numeric_limits<double>::quiet_NaN();
    return level;
}

} // namespace

ReducedCoefficients reducedEquationCoefficients(Variant variant, double energy,
                                                units::OscillatorCoupling coupling,
                                                AlphaConvention convention)
{
    if (!(energy > 0)) {
        throw DomainError("reducedEquationCoefficients: energy must be positive");
    }
    ReducedCoefficients out{};
    out.alphaSq = alphaSquared(variant, energy, coupling.lambda(), convention);
    out.alpha = std::sqrt(out.alphaSq);
    out.beta = (energy - 1.0) * (energy + 1.0);
    return out;
}

OscillatorLevel energyMassDependent(int n, units::OscillatorCoupling coupling, Branch branch,
                                    AlphaConvention convention)
{
    requireLevel(n);
    const double e0 = coupling.level(n);
    const double root = std::sqrt(1.0 + e0 * e0);
    double energy = 0;
    double binding = 0;
    if (branch == Branch::Plus) {
        binding = e0 + e0 * e0 / (root + 1.0);
        energy = 1.0 + binding;
    } else {
        energy = -1.0 / (e0 + root);
        binding = energy - 1.0;
    }
    return makeLevel(Variant::MassDependent, n, e0, energy, binding, coupling.lambda(), branch, convention);
}

OscillatorLevel energyMassIndependent(int n, units::OscillatorCoupling coupling, Branch branch,
                                      AlphaConvention convention)
{
    requireLevel(n);
    const double e0 = coupling.level(n);
    const double radicand = 1.0 + 2.0 * e0;
    if (radicand < 0) {
        throw DomainError("energyMassIndependent: 1 + 2 E0 < 0");
    }
    const double root = std::sqrt(radicand);
    const double energy = branch == Branch::Plus ? root : -root;
    const double binding = branch == Branch::Plus ? 2.0 * e0 / (root + 1.0) : energy - 1.0;
    return makeLevel(Variant::MassIndependent, n, e0, energy, binding, coupling.lambda(), branch, convention);
}

double kleinGordonEnergy(int n, units::OscillatorCoupling coupling, Branch branch)
{
    requireLevel(n);
    const double root = std::sqrt(1.0 + 2.0 * coupling.level(n));
    return branch == Branch::Plus ? root : -root;
}

double secularMassIndependent(int n, units::OscillatorCoupling coupling)
{
    requireLevel(n);
    const double e0 = coupling.level(n);
    if (e0 == 0.0) {
        return 1.0;
    }
    // Solve for d = E - 1: d (2 + d) - 2 E0 sqrt(1 + d) = 0 on [0, 2 E0].
    const auto f = [e0](double d) { return d * (2.0 + d) - 2.0 * e0 * std::sqrt(1.0 + d); };
    const double d = oracle::bracketedRoot(f, 0.0, 2.0 * e0, 1e-15 * e0);
    return 1.0 + d;
}

HermiteGaussian::HermiteGaussian(int n, double alpha)
    : n_(n)
    , alpha_(alpha)
    , prefactor_(0)
    , sqrtAlpha_(0)
{
    requireLevel(n);
    if (!(alpha > 0)) {
        throw DomainError("eigenfunction: alpha must be positive");
    }
    sqrtAlpha_ = std::sqrt(alpha);
    // (2^n n!)^(-1/2) accumulated as a product to stay finite for large n.
    double inv = 1.0;
    for (int k = 1; k <= n; ++k) {
        inv /= std::sqrt(2.0 * k);
    }
    prefactor_ = inv * std::pow(alpha / std::numbers::pi, 0.25);
}

double HermiteGaussian::operator()(double x) const
{
    const double z = sqrtAlpha_ * x;
    const double envelope = std::exp(-0.5 * z * z);
    if (envelope == 0.0) {
        return 0.0; // H_n(z) may have overflowed; the product is zero
    }
    return prefactor_ * envelope * numeric::hermite(n_, z);
}

HermiteGaussian eigenfunction(int n, double alpha)
{
    return HermiteGaussian(n, alpha);
}

} // namespace pfspec::oscillator
