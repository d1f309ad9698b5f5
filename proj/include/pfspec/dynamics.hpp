#pragma once

#include <functional>
#include <optional>

namespace pfspec::dynamics {

/// Stationary field chi(x) with its first two derivatives.
struct Field
{
    std::function<double(double)> value;
    std::function<double(double)> slope;
    std::function<double(double)> curvature;

    /// Derivatives by five-point finite differences with step h.
    static Field fromFunction(std::function<double(double)> chi, double h = 1e-3);
};

/// Particle state and local field slope for a PF system.
class PFKinematics
{
public:
    /// vP is the speed fraction v_P / c in [0, 1); gPF > 0.
    PFKinematics(double vP, double chiPrime, double x = 0, double gPF = 1);

    double x() const { return x_; }
    double vP() const { return vP_; }
    double chiPrime() const { return chiPrime_; }
    double gPF() const { return gPF_; }
    double gammaP() const { return gamma_; }
    /// gamma - 1 without cancellation at small vP.
    double gammaMinusOne() const { return gammaMinusOne_; }

private:
    double x_;
    double vP_;
    double chiPrime_;
    double gPF_;
    double gamma_;
    double gammaMinusOne_;
};

/// Trajectory q(x) = gPF int_{x0}^{x} sqrt(1 + chi'^2) dx.
class Trajectory
{
public:
    Trajectory(Field chi, double x0, double x1, double gPF);

    double operator()(double x) const;
    double origin() const { return x0_; }
    double end() const { return x1_; }
    /// Analytic integrand gPF sqrt(1 + chi'(x)^2).
    double rate(double x) const;

private:
    Field chi_;
    double x0_;
    double x1_;
    double gPF_;
};

Trajectory trajectoryQ(Field chi, double x0, double x1, double gPF = 1);

/// Exponent applied to the bracket expression of the relativistic PF speed
/// qdot / c = (1 - 1/b^2)^(exponent), b = (gamma - 1)(1 + chi'^2) + 1.
enum class QdotConvention
{
    PositiveHalf, ///< reproduces qdot = vP at chi' = 0
    AsPrinted     ///< exponent -1/2
};

struct QdotResult
{
    double value = 0;        ///< under the requested convention
    double positiveHalf = 0; ///< (1 - 1/b^2)^(1/2)
    double printed = 0;      ///< (1 - 1/b^2)^(-1/2), +inf at rest
    double bracket = 0;      ///< b
    bool superluminal = false; ///< printed value exceeds 1
    bool degenerate = false;   ///< b == 1, printed form diverges
    bool conventionsDisagree = false;
    QdotConvention convention = QdotConvention::PositiveHalf;
};

QdotResult relativisticQdot(const PFKinematics& kin,
                            QdotConvention convention = QdotConvention::PositiveHalf);

struct IntervalPair
{
    double ds2;
    double ds2Boosted;
};

/// ds^2 = dt^2 - dq^2 before and after a boost of speed `boost` (c = 1).
IntervalPair intervalCheck(double dt, double qdot, double boost);

enum class ForceRegime
{
    NonRelativistic,
    Relativistic
};

/// Field force for a stationary real field (m0 = 1):
/// nonrel  f_F  = vP^2 chi'' + fP chi'
/// rel     f_rF = fP chi' + gamma vP^2 chi''
double fieldForce(const PFKinematics& kin, double chiPP, double fP, ForceRegime regime);

/// Nonrelativistic form -vP^2 k^2 chi + fP chi' with k^2 = 2 (E - V).
double fieldForceFromWaveNumber(const PFKinematics& kin, double chi, double k2, double fP);

struct EnergyDecomposition
{
    double KP = 0;
    double KF = 0;
    double VP = 0;
    double E = 0;
    /// E_total - VP - KP - KF when a total energy is supplied.
    std::optional<double> fieldPotential;
};

EnergyDecomposition energySplit(const PFKinematics& kin, double VP,
                                std::optional<double> totalEnergy = std::nullopt);

/// Diagnostic only: boosts the particle speed by `boost`, recomputes qdot
/// assuming chi' is boost invariant, and returns the difference to the
/// relativistic velocity addition of the unboosted qdot.
double boostedQdotMismatch(const PFKinematics& kin, double boost);

} // namespace pfspec::dynamics
