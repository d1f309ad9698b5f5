#include "pfspec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "pfspec/numeric.hpp"

namespace pfspec::oracle {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct State
{
    double u;
    double du;
};

struct Sweep
{
    std::vector<double> samples; // u at every grid point, start included
    State end{};
};

// Fixed-step RK4 for u'' = W(s) u from s0 to s1 (either direction).
Sweep sweep(const ShootingProblem& p, double e, double s0, double s1, State y, bool keep)
{
    const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(s1 - s0) / p.step)));
    const double h = (s1 - s0) / steps;
    Sweep out;
    if (keep) {
        out.samples.reserve(static_cast<std::size_t>(steps) + 1);
        out.samples.push_back(y.u);
    }
    const auto& w = p.potential;
    for (int i = 0; i < steps; ++i) {
        const double s = s0 + i * h;
        const double wa = w(s, e);
        const double wm = w(s + 0.5 * h, e);
        const double wb = w(s + h, e);
        const double k1u = y.du;
        const double k1d = wa * y.u;
        const double k2u = y.du + 0.5 * h * k1d;
        const double k2d = wm * (y.u + 0.5 * h * k1u);
        const double k3u = y.du + 0.5 * h * k2d;
        const double k3d = wm * (y.u + 0.5 * h * k2u);
        const double k4u = y.du + h * k3d;
        const double k4d = wb * (y.u + h * k3u);
        y.u += h / 6.0 * (k1u + 2 * k2u + 2 * k3u + k4u);
        y.du += h / 6.0 * (k1d + 2 * k2d + 2 * k3d + k4d);
        const double mag = std::abs(y.u) + std::abs(y.du);
        if (mag > 1e150) {
            y.u /= mag;
            y.du /= mag;
        }
        if (keep) {
            out.samples.push_back(y.u);
        }
    }
    out.end = y;
    return out;
}

State leftStart(const ShootingProblem& p, double e)
{
    if (p.leftState) {
        const auto [u, du] = p.leftState(e);
        return {u, du};
    }
    const double s = p.sMin;
    const double pw = p.leftExponent;
    const double c1 = p.leftCorrection ? p.leftCorrection(e) : 0.0;
    const double sp = std::pow(s, pw);
    const double spm1 = pw == 0.0 ? 0.0 : pw * std::pow(s, pw - 1.0);
    return {sp * (1.0 + c1 * s), spm1 * (1.0 + c1 * s) + c1 * sp};
}

State rightStart(const ShootingProblem& p, double e)
{
    const double kappa = p.rightDecay ? p.rightDecay(e) : 1.0;
    return {1.0, -kappa};
}

int stepsBetween(const ShootingProblem& p, double a, double b)
{
    return std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / p.step)));
}

// Brent's method (van Wijngaarden-Dekker-Brent), stopping once the bracket is
// below xtol and |f| below ftol, or the bracket reaches machine resolution.
double brent(const std::function<double(double)>& f, double a, double b, double xtol, double ftol,
             int maxIterations)
{
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) {
        return a;
    }
    if (fb == 0.0) {
        return b;
    }
    if ((fa > 0) == (fb > 0)) {
        throw BracketError("bracketedRoot: no sign change on [" + std::to_string(a) + ", " +
                           std::to_string(b) + "]");
    }
    double c = b;
    double fc = fb;
    double d = b - a;
    double e = d;
    for (int iter = 0; iter < maxIterations; ++iter) {
        if ((fb > 0) == (fc > 0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 2.0 * kEps * std::abs(b) + 0.5 * xtol;
        const double xm = 0.5 * (c - b);
        const bool narrow = std::abs(xm) <= tol1;
        if (fb == 0.0 || (narrow && std::abs(fb) < ftol)) {
            return b;
        }
        if (std::abs(xm) <= 2.0 * kEps * std::abs(b)) {
            return b; // cannot resolve further in double precision
        }
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            const double s = fb / fa;
            double p = 0;
            double q = 0;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0) {
                q = -q;
            }
            p = std::abs(p);
            const double min1 = 3.0 * xm * q - std::abs(tol1 * q);
            const double min2 = std::abs(e * q);
            if (2.0 * p < std::min(min1, min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if (std::abs(d) > tol1) {
            b += d;
        } else {
            b += std::copysign(tol1, xm);
        }
        fb = f(b);
    }
    return b;
}

} // namespace

double bracketedRoot(const std::function<double(double)>& f, double a, double b, double tol, int maxIterations)
{
    return brent(f, a, b, tol, tol, maxIterations);
}

std::vector<double> integrateOutward(const ShootingProblem& problem, double e)
{
    return sweep(problem, e, problem.sMin, problem.sMax, leftStart(problem, e), true).samples;
}

int outwardNodes(const ShootingProblem& problem, double e)
{
    return numeric::countSignChanges(integrateOutward(problem, e));
}

double matchMismatch(const ShootingProblem& problem, double e)
{
    const State l = sweep(problem, e, problem.sMin, problem.sMatch, leftStart(problem, e), false).end;
    const State r = sweep(problem, e, problem.sMax, problem.sMatch, rightStart(problem, e), false).end;
    const double nl = std::hypot(l.u, l.du);
    const double nr = std::hypot(r.u, r.du);
    return (l.du * r.u - l.u * r.du) / (nl * nr);
}

EigenResult shootEigenvalue(const ShootingProblem& problem, int targetNodes, Interval bracket)
{
    if (!(problem.sMin < problem.sMatch && problem.sMatch < problem.sMax)) {
        throw DomainError("shootEigenvalue: require sMin < sMatch < sMax");
    }
    const auto f = [&problem](double e) { return matchMismatch(problem, e); };
    const double scale = std::max(std::abs(bracket.lo), std::abs(bracket.hi));
    const double e = brent(f, bracket.lo, bracket.hi, 4.0 * kEps * scale, 1e-10, 300);

    const Sweep left = sweep(problem, e, problem.sMin, problem.sMatch, leftStart(problem, e), true);
    const Sweep right = sweep(problem, e, problem.sMax, problem.sMatch, rightStart(problem, e), true);
    const State& l = left.end;
    const State& r = right.end;
    const double factor = (l.u * r.u + l.du * r.du) / (r.u * r.u + r.du * r.du);
    std::vector<double> joined(left.samples);
    // Inward samples run sMax -> sMatch; drop the shared sMatch point.
    for (auto it = right.samples.rbegin() + 1; it != right.samples.rend(); ++it) {
        joined.push_back(factor * *it);
    }

    EigenResult result;
    result.eigenvalue = e;
    result.matchResidual = std::abs(f(e));
    result.nodes = numeric::countSignChanges(joined);
    result.gridSize = stepsBetween(problem, problem.sMin, problem.sMatch) +
                      stepsBetween(problem, problem.sMatch, problem.sMax);
    result.converged = result.matchResidual < 1e-10;
    if (result.nodes != targetNodes) {
        throw SpectrumOrderingError("shootEigenvalue: converged eigenvalue " + std::to_string(e) + " has " +
                                    std::to_string(result.nodes) + " nodes, expected " +
                                    std::to_string(targetNodes));
    }
    return result;
}

Interval bracketByNodes(const ShootingProblem& problem, int targetNodes, double lo, double hiGuess)
{
    if (outwardNodes(problem, lo) > targetNodes) {
        throw BracketError("bracketByNodes: lower bound already exceeds the target node count");
    }
    if (!(hiGuess > lo)) {
        throw BracketError("bracketByNodes: hiGuess must exceed lo");
    }
    double hi = hiGuess;
    int doublings = 0;
    while (outwardNodes(problem, hi) <= targetNodes) {
        if (++doublings > 60) {
            throw BracketError("bracketByNodes: no upper bound found");
        }
        const double w = hi - lo;
        lo = hi;
        hi += 2.0 * w;
    }
    const double width0 = hi - lo;
    while (hi - lo > 1e-6 * width0) {
        const double mid = 0.5 * (lo + hi);
        if (outwardNodes(problem, mid) <= targetNodes) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double pad = std::max(hi - lo, 1e-4 * width0);
    return {lo - pad, hi + pad};
}

ResidualReport gridResidual(const std::function<double(double)>& u, const ShootingProblem& problem,
                            double eigenvalue, const ResidualOptions& options)
{
    ResidualReport report;
    double maxSecond = 0;
    double maxResidual = 0;
    const int n = std::max(2, options.points);
    for (int i = 0; i < n; ++i) {
        const double s = options.lo + (options.hi - options.lo) * i / (n - 1);
        double h = options.fdStep;
        if (problem.singularity) {
            h = std::min(h, std::abs(s - *problem.singularity) / 40.0);
            if (!(h > 0)) {
                continue;
            }
        }
        const double second = numeric::secondDerivative(u, s, h);
        maxSecond = std::max(maxSecond, std::abs(second));
        maxResidual = std::max(maxResidual, std::abs(second - problem.potential(s, eigenvalue) * u(s)));
    }
    if (maxSecond == 0.0) {
        report.degenerate = true;
        report.residual = 0.0;
        return report;
    }
    report.residual = maxResidual / maxSecond;
    return report;
}

ShootingProblem harmonicProblem(int parity, double sMax)
{
    ShootingProblem p;
    p.potential = [](double s, double eps) { return s * s - eps; };
    p.sMin = 0.0;
    p.sMax = sMax;
    p.sMatch = 1.0;
    p.leftExponent = parity % 2;
    p.rightDecay = [sMax](double) { return sMax; };
    return p;
}

ShootingProblem oscillatorProblem(OscillatorEquation equation, double lambda, int parity, double sMax)
{
    if (!(lambda > 0)) {
        throw DomainError("oscillatorProblem: lambda must be positive");
    }
    const auto quadratic = [equation](double e) {
        switch (equation) {
        case OscillatorEquation::MassDependent:
            return e * e;
        case OscillatorEquation::MassIndependent:
            return e;
        case OscillatorEquation::RestEnergyAlpha:
            break;
        }
        return 1.0;
    };
    ShootingProblem p;
    p.potential = [quadratic, lambda](double s, double e) {
        return quadratic(e) * s * s - (e - 1.0) * (e + 1.0) / lambda;
    };
    p.sMin = 0.0;
    p.sMax = sMax;
    p.sMatch = 1.0;
    p.leftExponent = parity % 2;
    p.rightDecay = [quadratic, sMax](double e) { return std::sqrt(std::abs(quadratic(e))) * sMax; };
    return p;
}

std::pair<double, double> coulombFrobenius(int l, double g, double rho0, double rho)
{
    const double bb = l * (l + 1.0) - g * g;
    const double pw = 0.5 + std::sqrt(0.25 + bb);
    // a_k k (2p + k - 1) = a_{k-2} - rho0 a_{k-1}
    double am2 = 0.0;
    double am1 = 1.0;
    double sum = 1.0;
    double dsum = pw;
    double power = 1.0;
    for (int k = 1; k < 400; ++k) {
        const double ak = (am2 - rho0 * am1) / (k * (2.0 * pw + k - 1.0));
        power *= rho;
        const double term = ak * power;
        sum += term;
        dsum += (pw + k) * term;
        am2 = am1;
        am1 = ak;
        if (k > 4 && std::abs(term) < 1e-18 * std::abs(sum) && std::abs(am2 * power) < 1e-18 * std::abs(sum)) {
            break;
        }
    }
    const double lead = std::pow(rho, pw);
    return {lead * sum, lead * dsum / rho};
}

ShootingProblem coulombProblem(int l, double g, double sMax, double seriesStart)
{
    const double bb = l * (l + 1.0) - g * g;
    const double disc = 0.25 + bb;
    if (l < 0 || !(disc > 0)) {
        throw DomainError("coulombProblem: l(l+1) - G^2 <= -1/4");
    }
    const double pw = 0.5 + std::sqrt(disc);
    ShootingProblem p;
    p.potential = [bb](double rho, double rho0) { return 1.0 - rho0 / rho + bb / (rho * rho); };
    p.sMin = seriesStart;
    p.sMax = sMax;
    p.sMatch = 1.0;
    p.leftExponent = pw;
    p.leftCorrection = [pw](double rho0) { return -rho0 / (2.0 * pw); };
    p.leftState = [l, g, seriesStart](double rho0) { return coulombFrobenius(l, g, rho0, seriesStart); };
    p.rightDecay = [sMax](double rho0) { return 1.0 - rho0 / (2.0 * sMax); };
    p.singularity = 0.0;
    return p;
}

EigenResult solveOscillator(OscillatorEquation equation, double lambda, int n, double step)
{
    if (n < 0) {
        throw DomainError("solveOscillator: n must be >= 0");
    }
    auto problem = oscillatorProblem(equation, lambda, n % 2, 8.0 + std::sqrt(2.0 * n + 1.0));
    problem.step = step;
    const int k = n / 2;
    const Interval bracket = bracketByNodes(problem, k, 1.0, 1.0 + lambda);
    return shootEigenvalue(problem, k, bracket);
}

EigenResult solveCoulomb(int l, double g, int jmax, double step)
{
    if (jmax < 0) {
        throw DomainError("solveCoulomb: jmax must be >= 0");
    }
    const int nEstimate = jmax + l + 1;
    auto problem = coulombProblem(l, g, 40.0 + 6.0 * nEstimate);
    problem.sMatch = nEstimate;
    problem.step = step;
    const Interval bracket = bracketByNodes(problem, jmax, 0.0, 1.0);
    return shootEigenvalue(problem, jmax, bracket);
}

EigenResult solveHarmonic(int n, double step)
{
    if (n < 0) {
        throw DomainError("solveHarmonic: n must be >= 0");
    }
    auto problem = harmonicProblem(n % 2, 8.0 + std::sqrt(2.0 * n + 1.0));
    problem.step = step;
    const Interval bracket = bracketByNodes(problem, n / 2, 0.0, 1.0);
    return shootEigenvalue(problem, n / 2, bracket);
}

std::vector<double> denseHarmonicEigenvalues(int count, double halfWidth, int gridPoints)
{
    const double h = 2.0 * halfWidth / (gridPoints + 1);
    Eigen::VectorXd diag(gridPoints);
    Eigen::VectorXd sub = Eigen::VectorXd::Constant(gridPoints - 1, -1.0 / (h * h));
    for (int i = 0; i < gridPoints; ++i) {
        const double s = -halfWidth + (i + 1) * h;
        diag[i] = 2.0 / (h * h) + s * s;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + std::min<Eigen::Index>(count, ev.size())};
}

std::vector<double> denseCoulombEigenvalues(int l, int count, double rhoMax, int gridPoints)
{
    // H u = rho0 M u with M = diag(1/rho); symmetrized as M^(-1/2) H M^(-1/2).
    const double h = rhoMax / (gridPoints + 1);
    const double ll = l * (l + 1.0);
    Eigen::VectorXd diag(gridPoints);
    Eigen::VectorXd sub(gridPoints - 1);
    for (int i = 0; i < gridPoints; ++i) {
        const double rho = (i + 1) * h;
        diag[i] = rho * (2.0 / (h * h) + 1.0 + ll / (rho * rho));
        if (i + 1 < gridPoints) {
            sub[i] = -std::sqrt(rho * (rho + h)) / (h * h);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + std::min<Eigen::Index>(count, ev.size())};
}

} // namespace pfspec::oracle
