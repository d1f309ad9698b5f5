#pragma once

#include <complex>
#include <vector>

#include "pfspec/errors.hpp"
#include "pfspec/units.hpp"

namespace pfspec::hydrogen {

/// Bound-state quantum numbers. Construction rejects l >= n and |m| > l.
class QuantumState
{
public:
    QuantumState(int n, int l, int m = 0);

    int n() const { return n_; }
    int l() const { return l_; }
    int m() const { return m_; }
    int jmax() const { return n_ - l_ - 1; }

private:
    int n_;
    int l_;
    int m_;
};

/// B = -1/2 + sqrt((l + 1/2)^2 - G^2), the "+" root of B(B+1) = l(l+1) - G^2.
/// Throws DomainError when the square root is imaginary.
double shiftedIndex(int l, double g);

/// Coefficients of u'' = [-A/r + B(B+1)/r^2 + D^2] u in Compton units.
struct RadialCoefficients
{
    double A;
    double G;
    double B;
    double D;
    double rho0;
};

/// Coefficients for a trial energy E, given as its offset from the rest energy
/// (binding = E - 1) to keep D^2 = 1 - E^2 accurate near E = 1.
RadialCoefficients radialCoefficientsFromBinding(double binding, int l, units::CouplingG g);

/// N = jmax + 1/2 + sqrt((l + 1/2)^2 - G^2), the principal-like denominator.
double effectivePrincipal(const QuantumState& state, units::CouplingG g);

/// E = +-N / sqrt(G^2 + N^2).
double exactEnergy(const QuantumState& state, units::CouplingG g, Branch branch = Branch::Plus);

/// Plus-branch E - 1 evaluated without cancellation.
double exactBinding(const QuantumState& state, units::CouplingG g);

/// E = 1 + E_n - (E_n^2 / 2)(4n/(l + 1/2) - 3), E_n = -G^2/(2 n^2).
double expandedEnergy(const QuantumState& state, units::CouplingG g);

/// E - 1 of expandedEnergy.
double expandedBinding(const QuantumState& state, units::CouplingG g);

/// Three-term expansion of sqrt((l + 1/2)^2 - G^2) in G^2/(l + 1/2)^2.
double sqrtIndexExpansion(int l, double g);

/// Second-order expansion of [G^2 + (j' + l' sqrt(1 - G^2/l'^2))^2]^(-1/2)
/// with j' = jmax + 1/2, l' = l + 1/2, n = j' + l'.
double inverseNormExpansion(int jmax, int l, double g);

/// Energy rebuilt as (j' + sqrtIndexExpansion) * inverseNormExpansion.
double composedExpansionEnergy(const QuantumState& state, units::CouplingG g);

/// The collected fourth-order series
/// 1 - G^2/(2n^2) + 48 G^4/(128 n^4) - 64 G^4 / (128 n^3 (l + 1/2)).
double fourthOrderEnergy(const QuantumState& state, units::CouplingG g);

/// Energy recovered from the scaled eigenvalue rho0 = 2 E G / sqrt(1 - E^2).
double energyFromRho0(double rho0, double g);
double bindingFromRho0(double rho0, double g);

/// Terminating Frobenius solution of u'' = [1 - rho0/rho + B(B+1)/rho^2] u
/// with u = rho^(B+1) e^(-rho) sum_j c_j rho^j and c_0 = 1.
struct RadialSeries
{
    int l = 0;
    int jmax = 0;
    double G = 0;
    double B = 0;
    double D = 0;
    double rho0 = 0;
    std::vector<double> coeffs;

    /// Recursion factor c_{j+1} / c_j.
    double ratio(int j) const;
};

RadialSeries seriesSolve(const QuantumState& state, units::CouplingG g);

/// Normalized radial function. u(rho) is the raw series form; R(r) is in
/// Compton units and satisfies int_0^inf R^2 r^2 dr = 1.
class RadialWavefunction
{
public:
    explicit RadialWavefunction(RadialSeries series);

    double u(double rho) const;
    double R(double r) const;
    double operator()(double r) const { return R(r); }

    /// Polynomial v(rho).
    double v(double rho) const;

    const RadialSeries& series() const { return series_; }
    double normalization() const { return norm_; }

    /// rho beyond which rho^(B+1+jmax) e^(-rho) < 1e-18 (relative to 1).
    double rhoCut() const { return rhoCut_; }

private:
    RadialSeries series_;
    double norm_ = 1;
    double rhoCut_ = 0;
};

RadialWavefunction radialWavefunction(RadialSeries series);

class SphericalHarmonic
{
public:
    SphericalHarmonic(int l, int m);

    std::complex<double> operator()(double theta, double phi) const;

    int l() const { return l_; }
    int m() const { return m_; }

private:
    int l_;
    int m_;
};

SphericalHarmonic angularWavefunction(int l, int m);

/// psi_nlm(r, theta, phi) = R_nl(r) Y_l^m(theta, phi).
class Orbital
{
public:
    Orbital(const QuantumState& state, units::CouplingG g);

    std::complex<double> operator()(double r, double theta, double phi) const;

    const RadialWavefunction& radial() const { return radial_; }
    const SphericalHarmonic& angular() const { return angular_; }
    const QuantumState& state() const { return state_; }

private:
    QuantumState state_;
    RadialWavefunction radial_;
    SphericalHarmonic angular_;
};

Orbital assemble(const QuantumState& state, units::CouplingG g);

} // namespace pfspec::hydrogen
