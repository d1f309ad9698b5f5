#include "pfspec/dynamics.hpp"

#include <cmath>
#include <limits>

#include "pfspec/errors.hpp"
#include "pfspec/numeric.hpp"

namespace pfspec::dynamics {

Field Field::fromFunction(std::function<double(double)> chi, double h)
{
    Field f;
    f.value = chi;
    f.slope = [chi, h](double x) { return numeric::firstDerivative(chi, x, h); };
    f.curvature = [chi, h](double x) { return numeric::secondDerivative(chi, x, h); };
    return f;
}

PFKinematics::PFKinematics(double vP, double chiPrime, double x, double gPF)
    : x_(x)
    , vP_(vP)
    , chiPrime_(chiPrime)
    , gPF_(gPF)
    , gamma_(1)
    , gammaMinusOne_(0)
{
    if (!(vP >= 0.0 && vP < 1.0)) {
        throw DomainError("PFKinematics: particle speed fraction must lie in [0, 1)");
    }
    if (!(gPF > 0)) {
        throw DomainError("PFKinematics: gPF must be positive");
    }
    const double root = std::sqrt((1.0 - vP) * (1.0 + vP));
    gamma_ = 1.0 / root;
    gammaMinusOne_ = vP * vP / (root * (1.0 + root));
}

Trajectory::Trajectory(Field chi, double x0, double x1, double gPF)
    : chi_(std::move(chi))
    , x0_(x0)
    , x1_(x1)
    , gPF_(gPF)
{
    if (!chi_.slope) {
        throw DomainError("trajectoryQ: field slope is required");
    }
    if (!(x1 > x0)) {
        throw DomainError("trajectoryQ: empty x range");
    }
    if (!(gPF > 0)) {
        throw DomainError("trajectoryQ: gPF must be positive");
    }
}

double Trajectory::rate(double x) const
{
    const double s = chi_.slope(x);
    return gPF_ * std::sqrt(1.0 + s * s);
}

double Trajectory::operator()(double x) const
{
    if (x < x0_ || x > x1_) {
        throw DomainError("trajectoryQ: x outside the trajectory range");
    }
    if (x == x0_) {
        return 0.0;
    }
    // Analytic slopes converge to ~1e-15 well before this; finite-difference
    // slopes carry ~1e-12 noise that a tighter target would chase forever.
    return numeric::integrate([this](double t) { return rate(t); }, x0_, x, 1e-12);
}

Trajectory trajectoryQ(Field chi, double x0, double x1, double gPF)
{
    return Trajectory(std::move(chi), x0, x1, gPF);
}

QdotResult relativisticQdot(const PFKinematics& kin, QdotConvention convention)
{
    QdotResult r;
    r.convention = convention;
    const double slope2 = kin.chiPrime() * kin.chiPrime();
    const double bm1 = kin.gammaMinusOne() * (1.0 + slope2);
    const double b = 1.0 + bm1;
    r.bracket = b;
    // 1 - 1/b^2 = (b - 1)(b + 1) / b^2
    const double inner = bm1 * (b + 1.0) / (b * b);
    r.positiveHalf = std::sqrt(inner);
    if (inner == 0.0) {
        r.degenerate = true;
        r.printed = std::numeric_limits<double>::infinity();
    } else {
        r.printed = 1.0 / r.positiveHalf;
    }
    r.superluminal = r.printed > 1.0;
    r.conventionsDisagree = r.printed != r.positiveHalf;
    r.value = convention == QdotConvention::PositiveHalf ? r.positiveHalf : r.printed;
    return r;
}

IntervalPair intervalCheck(double dt, double qdot, double boost)
{
    if (!(std::abs(qdot) < 1.0) || !(std::abs(boost) < 1.0)) {
        throw DomainError("intervalCheck: speeds must be below c");
    }
    const double dq = qdot * dt;
    const double gamma = 1.0 / std::sqrt((1.0 - boost) * (1.0 + boost));
    const double dtb = gamma * (dt - boost * dq);
    const double dqb = gamma * (dq - boost * dt);
    return {dt * dt - dq * dq, dtb * dtb - dqb * dqb};
}

double fieldForce(const PFKinematics& kin, double chiPP, double fP, ForceRegime regime)
{
    const double v2 = kin.vP() * kin.vP();
    const double driven = fP * kin.chiPrime();
    if (regime == ForceRegime::NonRelativistic) {
        return v2 * chiPP + driven;
    }
    return driven + kin.gammaP() * v2 * chiPP;
}

double fieldForceFromWaveNumber(const PFKinematics& kin, double chi, double k2, double fP)
{
    const double wbar2 = kin.vP() * kin.vP() * k2;
    return -wbar2 * chi + fP * kin.chiPrime();
}

EnergyDecomposition energySplit(const PFKinematics& kin, double VP, std::optional<double> totalEnergy)
{
    EnergyDecomposition d;
    d.KP = 0.5 * kin.vP() * kin.vP();
    d.KF = d.KP * kin.chiPrime() * kin.chiPrime();
    d.VP = VP;
    d.E = VP + d.KP + d.KF;
    if (totalEnergy) {
        d.fieldPotential = *totalEnergy - VP - d.KP - d.KF;
    }
    return d;
}

double boostedQdotMismatch(const PFKinematics& kin, double boost)
{
    if (!(std::abs(boost) < 1.0)) {
        throw DomainError("boostedQdotMismatch: boost must be below c");
    }
    const double q = relativisticQdot(kin).positiveHalf;
    const double added = std::abs((q - boost) / (1.0 - q * boost));
    const double vBoosted = std::abs((kin.vP() - boost) / (1.0 - kin.vP() * boost));
    const PFKinematics moved(vBoosted, kin.chiPrime(), kin.x(), kin.gPF());
    return relativisticQdot(moved).positiveHalf - added;
}

} // namespace pfspec::dynamics
