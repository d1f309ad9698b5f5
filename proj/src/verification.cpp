#include "pfspec/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "pfspec/dynamics.hpp"
#include "pfspec/hydrogen.hpp"
#include "pfspec/numeric.hpp"
#include "pfspec/oracle.hpp"
#include "pfspec/oscillator.hpp"
#include "pfspec/units.hpp"

namespace pfspec::verification {

namespace {

using hydrogen::QuantumState;
using units::CouplingG;
using units::OscillatorCoupling;

constexpr double kRoundedGsq = 5.4e-5;
constexpr double kLambdas[] = {1e-4, 1e-3};
constexpr int kOscillatorMaxN = 5;

double relDiff(double a, double b)
{
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

CheckResult check(std::string id, std::string description, double measured, double threshold,
                  std::string detail = {})
{
    CheckResult r;
    r.id = std::move(id);
    r.description = std::move(description);
    r.measured = measured;
    r.threshold = threshold;
    r.passed = measured <= threshold;
    r.detail = std::move(detail);
    return r;
}

// Energy from the scaled eigenvalue rho0 = 2 E G / sqrt(1 - E^2).
double energyOfRho0(double rho0, double g)
{
    return rho0 / std::sqrt(4.0 * g * g + rho0 * rho0);
}

// Coefficients of L_k^alpha(2 rho) in powers of rho, scaled so the constant
// term is 1.
std::vector<double> laguerreSeries(int k, int alpha)
{
    const auto binom = [](int top, int bottom) {
        double b = 1.0;
        for (int i = 1; i <= bottom; ++i) {
            b = b * (top - bottom + i) / i;
        }
        return b;
    };
    std::vector<double> out;
    const double c0 = binom(k + alpha, k);
    double factorial = 1.0;
    for (int i = 0; i <= k; ++i) {
        if (i > 0) {
            factorial *= i;
        }
        const double sign = i % 2 == 0 ? 1.0 : -1.0;
        out.push_back(sign * binom(k + alpha, k - i) * std::pow(2.0, i) / factorial / c0);
    }
    return out;
}

// int_0^inf R^2 r^2 dr from Gamma-function moments of rho^(2B+2+i+j) e^(-2 rho).
double radialNormClosedForm(const hydrogen::RadialWavefunction& rw)
{
    const auto& s = rw.series();
    double sum = 0;
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
        for (std::size_t j = 0; j < s.coeffs.size(); ++j) {
            const double a = 2.0 * s.B + 3.0 + static_cast<double>(i + j);
            sum += s.coeffs[i] * s.coeffs[j] * std::exp(std::lgamma(a) - a * std::log(2.0));
        }
    }
    return rw.normalization() * rw.normalization() / s.D * sum;
}

// Gauss-Legendre in cos(theta) times trapezoid in phi.
double angularNorm(int l, int m)
{
    const auto y = hydrogen::angularWavefunction(l, m);
    const int phiPoints = 2 * l + 4;
    const auto inner = [&](double x) {
        const double theta = std::acos(x);
        double acc = 0;
        for (int k = 0; k < phiPoints; ++k) {
            acc += std::norm(y(theta, 2.0 * M_PI * k / phiPoints));
        }
        return acc * 2.0 * M_PI / phiPoints;
    };
    return boost::math::quadrature::gauss<double, 20>::integrate(inner, -1.0, 1.0);
}

std::string fmt(double v)
{
    std::ostringstream o;
    o.precision(6);
    o << v;
    return o.str();
}

void oscillatorChecks(std::vector<CheckResult>& out)
{
    double o1 = 0;
    double o1b = 0;
    double o2 = 0;
    double o2sc = 0;
    double o2b = 0;
    for (double lambda : kLambdas) {
        const OscillatorCoupling k(lambda);
        for (int n = 0; n <= kOscillatorMaxN; ++n) {
            const auto md = oscillator::energyMassDependent(n, k);
            const auto shotMd = oracle::solveOscillator(oracle::OscillatorEquation::MassDependent, lambda, n);
            o1 = std::max(o1, relDiff(shotMd.eigenvalue, md.energy));

            const auto mi = oscillator::energyMassIndependent(n, k);
            const auto shotN3 = oracle::solveOscillator(oracle::OscillatorEquation::RestEnergyAlpha, lambda, n);
            o2 = std::max(o2, relDiff(shotN3.eigenvalue, mi.energy));

            const double secular = oscillator::secularMassIndependent(n, k);
            const auto shotMi = oracle::solveOscillator(oracle::OscillatorEquation::MassIndependent, lambda, n);
            o2sc = std::max(o2sc, relDiff(shotMi.eigenvalue, secular));

            const double e0 = k.level(n);
            o2b = std::max(o2b, std::abs(secular - mi.energy) / (e0 * e0 * e0));

            if (lambda == 1e-3) {
                // E - 1 - E0 against the second-order term E0^2 / 2.
                const double excess = (md.energy - 1.0) - e0;
                o1b = std::max(o1b, std::abs(excess / (0.5 * e0 * e0) - 1.0));
            }
        }
    }
    out.push_back(check("O1", "mass-dependent closed form vs shooting, lambda in {1e-4,1e-3}, n<=5 (rel)",
                        o1, 1e-8));
    out.push_back(check("O1-expansion", "(E-1-E0)/(E0^2/2) -> 1 at lambda=1e-3, n<=5 (rel)", o1b, 0.01));
    out.push_back(check("O2", "sqrt(1+2E0) vs shooting with the rest-energy alpha approximation, n<=5 (rel)", o2, 1e-8));
    out.push_back(check("O2-sc", "unapproximated secular root vs self-consistent shooting, n<=5 (rel)",
                        o2sc, 1e-8));
    out.push_back(check("O2-secular", "|secular root - sqrt(1+2E0)| / E0^3 over the grid", o2b, 10.0,
                        "difference is E0^2/2 + O(E0^3); the E0^3 bound is not attainable"));
}

void hydrogenChecks(std::vector<CheckResult>& out)
{
    // H1: shooting on the dimensionless radial equation at G^2=5.4e-5.
    {
        const CouplingG g(std::sqrt(kRoundedGsq));
        const auto start = std::chrono::steady_clock::now();
        double worstE = 0;
        double worstRho = 0;
        for (int n = 1; n <= 4; ++n) {
            for (int l = 0; l < n; ++l) {
                const QuantumState st(n, l);
                const auto shot = oracle::solveCoulomb(l, g.value(), st.jmax());
                worstE = std::max(worstE, relDiff(energyOfRho0(shot.eigenvalue, g.value()),
                                                  hydrogen::exactEnergy(st, g)));
                const double rho0 = 2.0 * (st.jmax() + hydrogen::shiftedIndex(l, g.value()) + 1.0);
                worstRho = std::max(worstRho, relDiff(shot.eigenvalue, rho0));
            }
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(check("H1", "exact spectrum vs shooting on radial equation, G^2=5.4e-5, n<=4 (rel)", worstE,
                            1e-8, "worst rho0 rel deviation " + fmt(worstRho)));
        out.push_back(check("H1-rho0", "shooting rho0 vs termination 2(jmax+B+1), G^2=5.4e-5, n<=4 (rel)",
                            worstRho, 1e-8));
        out.push_back(check("H1-runtime", "H1 wall time (s)", seconds, 10.0));
    }

    const CouplingG alpha = units::hydrogenCoupling();
    // H2: exact vs expanded within 10 G^6 at G = alpha.
    {
        const double g6 = std::pow(alpha.squared(), 3);
        double worst = 0;
        for (int n = 1; n <= 5; ++n) {
            for (int l = 0; l < n; ++l) {
                const QuantumState st(n, l);
                const double diff = hydrogen::exactBinding(st, alpha) - hydrogen::expandedBinding(st, alpha);
                worst = std::max(worst, std::abs(diff) / g6);
            }
        }
        out.push_back(check("H2", "|exact - expanded| / G^6 at G=alpha, n<=5", worst, 10.0));

        const auto electron = units::makeUnitScheme(units::codata2018::kElectronRestEnergyEv);
        const QuantumState ground(1, 0);
        const double correctionEv =
            electron.toPhysicalEnergy(hydrogen::expandedBinding(ground, alpha) - units::nonrelHydrogenLevel(1, alpha));
        const double e1 = 13.6057;
        const double reference = -e1 * e1 * (4.0 / 0.5 - 3.0) / (2.0 * 510998.95);
        out.push_back(check("H2-electron", "1s correction in eV vs -(E1^2/2m0c^2)(4n/(l+1/2)-3) (rel)",
                            relDiff(correctionEv, reference), 0.005,
                            "correction " + fmt(correctionEv) + " eV, reference " + fmt(reference) + " eV"));
    }

    // S1: termination and the G = 0 Laguerre limit.
    {
        double worstTail = 0;
        for (int n = 1; n <= 6; ++n) {
            for (int l = 0; l < n; ++l) {
                const auto s = hydrogen::seriesSolve(QuantumState(n, l), alpha);
                const double root = std::sqrt((l + 0.5) * (l + 0.5) - alpha.squared());
                const int j = s.jmax;
                const double next =
                    (2.0 * (j + 0.5 + root) - s.rho0) / ((j + 1.0) * (j + 2.0 * root + 1.0)) * s.coeffs[j];
                worstTail = std::max(worstTail, std::abs(next) / std::abs(s.coeffs[j]));
            }
        }
        out.push_back(check("S1-termination", "|c_{jmax+1}| / |c_jmax| recomputed from the recursion, n<=6", worstTail,
                            1e-14));

        double worstLaguerre = 0;
        const CouplingG zero(0.0);
        for (int n = 1; n <= 6; ++n) {
            for (int l = 0; l < n; ++l) {
                const auto s = hydrogen::seriesSolve(QuantumState(n, l), zero);
                const auto ref = laguerreSeries(s.jmax, 2 * l + 1);
                for (std::size_t i = 0; i < ref.size(); ++i) {
                    worstLaguerre = std::max(worstLaguerre, relDiff(s.coeffs[i], ref[i]));
                }
            }
        }
        out.push_back(check("S1-laguerre", "G=0 series coefficients vs associated Laguerre (rel)", worstLaguerre,
                            1e-12));
    }

    // S2: node count, 3-D normalization and radial-equation residual.
    {
        int nodeMismatches = 0;
        double worstNorm = 0;
        double worstResidual = 0;
        for (int n = 1; n <= 4; ++n) {
            for (int l = 0; l < n; ++l) {
                const QuantumState st(n, l);
                const auto orbital = hydrogen::assemble(st, alpha);
                const auto& rw = orbital.radial();
                std::vector<double> samples;
                const int count = 20000;
                for (int i = 1; i <= count; ++i) {
                    samples.push_back(rw.u(rw.rhoCut() * i / count));
                }
                if (numeric::countSignChanges(samples) != st.jmax()) {
                    ++nodeMismatches;
                }
                const double norm3 = radialNormClosedForm(rw) * angularNorm(l, st.m());
                worstNorm = std::max(worstNorm, std::abs(norm3 - 1.0));

                const auto problem = oracle::coulombProblem(l, alpha.value());
                const auto u = [&rw](double rho) { return rw.u(rho); };
                const auto res = oracle::gridResidual(u, problem, rw.series().rho0, {0.01, 40.0, 4001, 3e-3});
                worstResidual = std::max(worstResidual, res.residual);
            }
        }
        out.push_back(check("S2-nodes", "states whose u node count differs from jmax, n<=4", nodeMismatches, 0.0));
        out.push_back(check("S2-norm", "| int |psi|^2 d^3r - 1 |, n<=4", worstNorm, 1e-8));
        out.push_back(check("S2-residual", "radial equation residual on rho in [0.01, 40], n<=4 (rel)",
                            worstResidual, 1e-8));
    }
}

void dynamicsChecks(std::vector<CheckResult>& out, std::uint64_t seed)
{
    {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> speed(-0.99, 0.99);
        std::uniform_real_distribution<double> time(0.01, 10.0);
        double worst = 0;
        for (int i = 0; i < 1000; ++i) {
            const double dt = time(rng);
            const double qdot = speed(rng);
            const double boost = speed(rng);
            const auto iv = dynamics::intervalCheck(dt, qdot, boost);
            worst = std::max(worst, std::abs(iv.ds2 - iv.ds2Boosted) / (dt * dt));
        }
        out.push_back(check("D1-interval", "interval invariance, 1000 random (dt, qdot, boost), seed " +
                                               std::to_string(seed) + " (rel to dt^2)",
                            worst, 1e-12));
    }
    {
        double worst = 0;
        for (double v : {0.0, 1e-8, 1e-4, 1e-2, 0.1, 0.3, 0.6, 0.9, 0.99, 0.999999}) {
            const dynamics::PFKinematics kin(v, 0.0);
            worst = std::max(worst, std::abs(dynamics::relativisticQdot(kin).value - v));
        }
        out.push_back(check("D1-qdot", "qdot(+1/2 convention, chi'=0) - vP (abs)", worst, 1e-14));
    }
    {
        const auto chi = oscillator::eigenfunction(0, 1.0);
        dynamics::Field field;
        field.value = [chi](double x) { return chi(x); };
        field.slope = [chi](double x) { return -x * chi(x); };
        const auto q = dynamics::trajectoryQ(field, -4.0, 4.0);
        double worst = 0;
        for (int i = 0; i <= 60; ++i) {
            const double x = -3.0 + 0.1 * i;
            const double fd = numeric::firstDerivative([&q](double t) { return q(t); }, x, 1e-3);
            worst = std::max(worst, std::abs(fd - q.rate(x)));
        }
        out.push_back(check("D1-trajectory", "q'(x) vs gPF sqrt(1+chi'^2), ground-state field (abs)", worst, 1e-9));
    }
    {
        double worst = 0;
        for (double v : {0.1, 0.6}) {
            for (double slope : {0.5, 1.0}) {
                for (double boost : {0.3, -0.5}) {
                    worst = std::max(worst, std::abs(dynamics::boostedQdotMismatch({v, slope}, boost)));
                }
            }
        }
        auto diag = check("D-boost-diagnostic",
                          "velocity-addition mismatch if chi' were boost invariant (diagnostic only)", worst, 0.0);
        diag.diagnostic = true;
        diag.passed = true;
        diag.detail = "chi' transformation law is not specified; reported, not asserted";
        out.push_back(diag);
    }
}

} // namespace

std::vector<CheckResult> runSuite(Suite suite, std::uint64_t seed)
{
    std::vector<CheckResult> out;
    if (suite == Suite::All || suite == Suite::Oscillator) {
        oscillatorChecks(out);
    }
    if (suite == Suite::All || suite == Suite::Hydrogen) {
        hydrogenChecks(out);
    }
    if (suite == Suite::All || suite == Suite::Dynamics) {
        dynamicsChecks(out, seed);
    }
    return out;
}

bool allPassed(const std::vector<CheckResult>& results)
{
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.diagnostic || r.passed; });
}

} // namespace pfspec::verification
