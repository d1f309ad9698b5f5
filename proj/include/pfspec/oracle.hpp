#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "pfspec/errors.hpp"

// Independent numerical eigenvalue solvers. Nothing here may call into the
// closed forms of the oscillator or hydrogen modules.
namespace pfspec::oracle {

/// Boundary-value problem u'' = W(s; E) u on [sMin, sMax].
struct ShootingProblem
{
    std::function<double(double s, double e)> potential;
    double sMin = 0;
    double sMax = 1;
    double sMatch = 0.5;

    /// u ~ s^p (1 + c1 s) at sMin. p = 0 with c1 = 0 gives u'(sMin) = 0.
    double leftExponent = 1;
    std::function<double(double e)> leftCorrection; ///< c1(E); empty means 0

    /// Exact (u, u') at sMin; overrides the two-term power-law start when set.
    std::function<std::pair<double, double>(double e)> leftState;

    /// u ~ exp(-kappa s) at sMax.
    std::function<double(double e)> rightDecay;

    /// Location of a pole of W (Coulomb-like); finite-difference stencils
    /// shrink as they approach it.
    std::optional<double> singularity;

    double step = 1e-3;
};

struct EigenResult
{
    double eigenvalue = 0;
    int nodes = 0;
    double matchResidual = 0;
    int gridSize = 0;
    bool converged = false;
};

struct Interval
{
    double lo;
    double hi;
};

/// Brent bracketed root of f on [a, b], to |f| < tol and interval < tol.
/// Throws BracketError when f(a) f(b) > 0.
double bracketedRoot(const std::function<double(double)>& f, double a, double b, double tol = 1e-14,
                     int maxIterations = 200);

/// Sampled solution of u'' = W(s; e) u integrated from sMin towards sMax with
/// the series start, fixed-step RK4.
std::vector<double> integrateOutward(const ShootingProblem& problem, double e);

/// Number of interior sign changes of the outward solution on (sMin, sMax).
int outwardNodes(const ShootingProblem& problem, double e);

/// Normalized Wronskian mismatch sin(theta_L - theta_R) at sMatch.
double matchMismatch(const ShootingProblem& problem, double e);

/// Shooting eigenvalue with exactly targetNodes interior nodes inside bracket.
EigenResult shootEigenvalue(const ShootingProblem& problem, int targetNodes, Interval bracket);

/// Narrows [lo, hi] around the step of outwardNodes from <= targetNodes to
/// > targetNodes; hi is doubled (relative to lo) until it exceeds the target.
Interval bracketByNodes(const ShootingProblem& problem, int targetNodes, double lo, double hiGuess);

struct ResidualOptions
{
    double lo;
    double hi;
    int points = 2001;
    double fdStep = 1e-3;
};

struct ResidualReport
{
    double residual = 0;
    bool degenerate = false; ///< u'' vanished on the whole grid
};

/// max |u'' - W u| / max |u''| over a uniform grid, five-point u''.
ResidualReport gridResidual(const std::function<double(double)>& u, const ShootingProblem& problem,
                            double eigenvalue, const ResidualOptions& options);

// ---------------------------------------------------------------------------
// Problem families

/// u'' = (s^2 - eps) u on the half-line, eigenvalue eps. Even states use
/// parity 0, odd states parity 1.
ShootingProblem harmonicProblem(int parity, double sMax = 12.0);

enum class OscillatorEquation
{
    MassDependent,   ///< alpha^2 = E^2 lambda^2
    MassIndependent, ///< alpha^2 = E lambda^2
    RestEnergyAlpha  ///< alpha^2 = lambda^2 (E ~ 1 inside alpha)
};

/// chi'' + (beta - alpha^2 x^2) chi = 0 in s = sqrt(lambda) x, eigenvalue E
/// (total energy / m0 c^2). Half-line with parity start.
ShootingProblem oscillatorProblem(OscillatorEquation equation, double lambda, int parity,
                                  double sMax = 14.0);

/// u'' = [1 - rho0/rho + B(B+1)/rho^2] u with B(B+1) = l(l+1) - G^2,
/// eigenvalue rho0. The integration starts at sMin = seriesStart from the
/// summed Frobenius series u = rho^p sum a_k rho^k, p(p-1) = B(B+1), which
/// converges for every rho; this keeps RK4 away from the 1/rho^2 pole.
ShootingProblem coulombProblem(int l, double g, double sMax = 60.0, double seriesStart = 0.05);

/// (u, u') of the Frobenius solution above at rho for trial rho0.
std::pair<double, double> coulombFrobenius(int l, double g, double rho0, double rho);

/// Oscillator level n: parity from n, node bracket search, shooting.
EigenResult solveOscillator(OscillatorEquation equation, double lambda, int n, double step = 1e-3);

/// Hydrogen radial level with jmax interior nodes; eigenvalue is rho0.
EigenResult solveCoulomb(int l, double g, int jmax, double step = 1e-3);

/// Nonrelativistic anchor eps_n = 2n + 1.
EigenResult solveHarmonic(int n, double step = 1e-3);

/// Dense finite-difference fallback for the G = 0 anchors. Lowest `count`
/// eigenvalues of -u'' + s^2 u on [-L, L].
std::vector<double> denseHarmonicEigenvalues(int count, double halfWidth = 10.0, int gridPoints = 4000);

/// Lowest `count` rho0 of -u'' + [1 + l(l+1)/rho^2] u = rho0 u / rho at G = 0.
std::vector<double> denseCoulombEigenvalues(int l, int count, double rhoMax = 60.0, int gridPoints = 6000);

} // namespace pfspec::oracle
