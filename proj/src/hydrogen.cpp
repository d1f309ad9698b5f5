#include "pfspec/hydrogen.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pfspec/numeric.hpp"

namespace pfspec::hydrogen {

QuantumState::QuantumState(int n, int l, int m)
    : n_(n)
    , l_(l)
    , m_(m)
{
    if (n < 1) {
        throw DomainError("QuantumState: n must be >= 1");
    }
    if (l < 0 || l >= n) {
        throw DomainError("QuantumState: require 0 <= l < n (n=" + std::to_string(n) + ", l=" + std::to_string(l) + ")");
    }
    if (std::abs(m) > l) {
        throw DomainError("QuantumState: require |m| <= l");
    }
}

double shiftedIndex(int l, double g)
{
    const double lp = l + 0.5;
    const double radicand = lp * lp - g * g;
    if (l < 0 || !(radicand > 0)) {
        throw DomainError("shiftedIndex: (l + 1/2)^2 <= G^2, radial index would be complex");
    }
    return -0.5 + std::sqrt(radicand);
}

RadialCoefficients radialCoefficientsFromBinding(double binding, int l, units::CouplingG g)
{
    const double dsq = -binding * (2.0 + binding);
    if (!(dsq > 0)) {
        throw DomainError("radialCoefficients: energy is not a bound state (need -1 < E < 1)");
    }
    RadialCoefficients out{};
    out.G = g.value();
    out.A = 2.0 * (1.0 + binding) * g.value();
    out.B = shiftedIndex(l, g.value());
    out.D = std::sqrt(dsq);
    out.rho0 = out.A / out.D;
    return out;
}

double effectivePrincipal(const QuantumState& state, units::CouplingG g)
{
    return state.jmax() + 1.0 + shiftedIndex(state.l(), g.value());
}

double exactEnergy(const QuantumState& state, units::CouplingG g, Branch branch)
{
    const double big = effectivePrincipal(state, g);
    const double e = big / std::sqrt(g.squared() + big * big);
    return branch == Branch::Plus ? e : -e;
}

double exactBinding(const QuantumState& state, units::CouplingG g)
{
    const double big = effectivePrincipal(state, g);
    const double s = std::sqrt(g.squared() + big * big);
    return -g.squared() / (s * (s + big));
}

double expandedBinding(const QuantumState& state, units::CouplingG g)
{
    const double en = units::nonrelHydrogenLevel(state.n(), g);
    const double lp = state.l() + 0.5;
    return en - 0.5 * en * en * (4.0 * state.n() / lp - 3.0);
}

double expandedEnergy(const QuantumState& state, units::CouplingG g)
{
    return 1.0 + expandedBinding(state, g);
}

double sqrtIndexExpansion(int l, double g)
{
    const double lp = l + 0.5;
    const double g2 = g * g;
    return lp - g2 / (2.0 * lp) - g2 * g2 / (8.0 * lp * lp * lp);
}

double inverseNormExpansion(int jmax, int l, double g)
{
    const double jp = jmax + 0.5;
    const double lp = l + 0.5;
    const double n = jp + lp;
    const double x = g * g / (lp * lp);
    const double w = jp * lp / (n * n);
    return (1.0 + w * x / 2.0 + w * (1.0 + 3.0 * w) * x * x / 8.0) / n;
}

double composedExpansionEnergy(const QuantumState& state, units::CouplingG g)
{
    const double jp = state.jmax() + 0.5;
    return (jp + sqrtIndexExpansion(state.l(), g.value())) *
           inverseNormExpansion(state.jmax(), state.l(), g.value());
}

double fourthOrderEnergy(const QuantumState& state, units::CouplingG g)
{
    const double n = state.n();
    const double lp = state.l() + 0.5;
    const double g4 = g.squared() * g.squared();
    return 1.0 - g.squared() / (2.0 * n * n) + 48.0 * g4 / (128.0 * n * n * n * n) -
           64.0 * g4 / (128.0 * n * n * n * lp);
}

double energyFromRho0(double rho0, double g)
{
    return rho0 / std::sqrt(4.0 * g * g + rho0 * rho0);
}

double bindingFromRho0(double rho0, double g)
{
    const double s = std::sqrt(4.0 * g * g + rho0 * rho0);
    return -4.0 * g * g / (s * (s + rho0));
}

double RadialSeries::ratio(int j) const
{
    return (2.0 * (j + B + 1.0) - rho0) / ((j + 1.0) * (j + 2.0 * B + 2.0));
}

RadialSeries seriesSolve(const QuantumState& state, units::CouplingG g)
{
    RadialSeries s;
    s.l = state.l();
    s.jmax = state.jmax();
    s.G = g.value();
    s.B = shiftedIndex(s.l, s.G);
    s.rho0 = 2.0 * (s.jmax + s.B + 1.0);
    s.D = 2.0 * s.G / std::sqrt(4.0 * s.G * s.G + s.rho0 * s.rho0);
    s.coeffs.resize(static_cast<std::size_t>(s.jmax) + 1);
    s.coeffs[0] = 1.0;
    for (int j = 0; j < s.jmax; ++j) {
        s.coeffs[j + 1] = s.ratio(j) * s.coeffs[j];
    }
    if (s.ratio(s.jmax) != 0.0) {
        throw std::logic_error("seriesSolve: recursion numerator does not vanish at jmax");
    }
    return s;
}

RadialWavefunction::RadialWavefunction(RadialSeries series)
    : series_(std::move(series))
{
    if (!(series_.D > 0)) {
        throw DomainError("radialWavefunction: D = 0 (G = 0 has no bound state)");
    }
    // rho^(B+1+jmax) e^(-rho) < 1e-18 beyond rhoCut.
    const double k = series_.B + 1.0 + series_.jmax;
    const double logThreshold = std::log(1e-18);
    double rho = std::max(1.0, k);
    while (k * std::log(rho) - rho >= logThreshold) {
        rho += 0.5;
    }
    rhoCut_ = rho;

    const auto u2 = [this](double r) {
        const double val = u(r);
        return val * val;
    };
    const double peak = std::max(1.0, k);
    double integral = numeric::integrate(u2, 0.0, peak) + numeric::integrate(u2, peak, rhoCut_);
    // Leading asymptotic tail of a polynomial times e^(-2 rho).
    integral += 0.5 * u2(rhoCut_);
    norm_ = std::sqrt(series_.D / integral);
}

double RadialWavefunction::v(double rho) const
{
    double acc = 0;
    for (auto it = series_.coeffs.rbegin(); it != series_.coeffs.rend(); ++it) {
        acc = acc * rho + *it;
    }
    return acc;
}

double RadialWavefunction::u(double rho) const
{
    if (rho <= 0) {
        return 0.0;
    }
    const double envelope = std::exp((series_.B + 1.0) * std::log(rho) - rho);
    if (envelope == 0.0 || std::isnan(envelope)) {
        return 0.0; // far tail: v(rho) may have overflowed
    }
    return envelope * v(rho);
}

double RadialWavefunction::R(double r) const
{
    return norm_ * u(series_.D * r) / r;
}

RadialWavefunction radialWavefunction(RadialSeries series)
{
    return RadialWavefunction(std::move(series));
}

SphericalHarmonic::SphericalHarmonic(int l, int m)
    : l_(l)
    , m_(m)
{
    if (l < 0 || std::abs(m) > l) {
        throw DomainError("angularWavefunction: require |m| <= l");
    }
}

std::complex<double> SphericalHarmonic::operator()(double theta, double phi) const
{
    return numeric::sphericalHarmonic(l_, m_, theta, phi);
}

SphericalHarmonic angularWavefunction(int l, int m)
{
    return SphericalHarmonic(l, m);
}

Orbital::Orbital(const QuantumState& state, units::CouplingG g)
    : state_(state)
    , radial_(seriesSolve(state, g))
    , angular_(state.l(), state.m())
{
}

std::complex<double> Orbital::operator()(double r, double theta, double phi) const
{
    return radial_.R(r) * angular_(theta, phi);
}

Orbital assemble(const QuantumState& state, units::CouplingG g)
{
    return Orbital(state, g);
}

} // namespace pfspec::hydrogen
