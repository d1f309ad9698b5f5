#pragma once

#include "pfspec/errors.hpp"
#include "pfspec/units.hpp"

namespace pfspec::oscillator {

/// MassDependent: relativistic equation where the potential multiplies the
/// relativistic mass, E_rP = gamma (m0 w0^2 x^2 / 2 + m0 c^2).
/// MassIndependent: potential independent of mass, E_rP = m0 w0^2 x^2 / 2 + gamma m0 c^2.
enum class Variant
{
    MassDependent,
    MassIndependent
};

/// Which energy enters the oscillator coefficient alpha.
enum class AlphaConvention
{
    SelfConsistent, ///< the level's own energy
    RestEnergy      ///< E ~ m0 c^2, the usual small-level simplification
};

/// Coefficients of chi'' + (beta - alpha^2 x^2) chi = 0 in Compton units.
struct ReducedCoefficients
{
    double alpha;   ///< linear coefficient (Gaussian width parameter)
    double alphaSq; ///< alpha^2 as it appears in the equation
    double beta;    ///< E^2 - 1
};

struct OscillatorLevel
{
    int n = 0;
    double e0 = 0;     ///< lambda (n + 1/2)
    double energy = 0; ///< total energy / m0 c^2
    double alpha = 0;
    double alphaSq = 0;
    double beta = 0;
    Branch branch = Branch::Plus;
    bool nonphysical = false; ///< minus-branch solutions
};

ReducedCoefficients reducedEquationCoefficients(Variant variant, double energy,
                                                units::OscillatorCoupling coupling,
                                                AlphaConvention convention = AlphaConvention::SelfConsistent);

/// Root of E^2 - 2 E E0 - 1 = 0 for the chosen branch.
OscillatorLevel energyMassDependent(int n, units::OscillatorCoupling coupling,
                                    Branch branch = Branch::Plus,
                                    AlphaConvention convention = AlphaConvention::SelfConsistent);

/// E = +-sqrt(1 + 2 E0), the small-level solution of the mass-independent
/// variant (it coincides with the Klein-Gordon oscillator).
OscillatorLevel energyMassIndependent(int n, units::OscillatorCoupling coupling,
                                      Branch branch = Branch::Plus,
                                      AlphaConvention convention = AlphaConvention::SelfConsistent);

/// Klein-Gordon oscillator with nonrelativistic potential, +-sqrt(1 + 2 E0).
double kleinGordonEnergy(int n, units::OscillatorCoupling coupling, Branch branch = Branch::Plus);

/// Plus-branch root of the unapproximated secular equation
/// E^2 - 2 sqrt(E) E0 - 1 = 0 of the mass-independent variant, found by
/// bracketed root finding on [1, 1 + 2 E0].
double secularMassIndependent(int n, units::OscillatorCoupling coupling);

/// Normalized Hermite-Gaussian
/// chi_n(x) = (2^n n!)^(-1/2) (alpha/pi)^(1/4) exp(-alpha x^2 / 2) H_n(sqrt(alpha) x).
class HermiteGaussian
{
public:
    HermiteGaussian(int n, double alpha);

    double operator()(double x) const;

    int n() const { return n_; }
    double alpha() const { return alpha_; }

private:
    int n_;
    double alpha_;
    double prefactor_;
    double sqrtAlpha_;
};

HermiteGaussian eigenfunction(int n, double alpha);

} // namespace pfspec::oscillator
