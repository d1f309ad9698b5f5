#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace pfspec::units {

// CODATA-2018 recommended values.
namespace codata2018 {
inline constexpr double kSpeedOfLight = 299792458.0;         // m/s (exact)
inline constexpr double kElementaryCharge = 1.602176634e-19; // C (exact)
inline constexpr double kHbarJouleSecond = 1.054571817e-34;  // J s
inline constexpr double kHbarEvSecond = 6.582119569e-16;     // eV s
inline constexpr double kVacuumPermittivity = 8.8541878128e-12; // F/m
inline constexpr double kElectronRestEnergyEv = 510998.95;   // eV
} // namespace codata2018

/// Key=value overrides for the physical constants. Recognized keys:
/// rest_energy_ev, hbar (eV s), c (m/s), G (dimensionless coupling).
struct ConstantOverrides
{
    std::optional<double> restEnergyEv;
    std::optional<double> hbar;
    std::optional<double> c;
    std::optional<double> G;
};

/// Parses `key = value` lines; `#` starts a comment. Unknown keys and
/// malformed numbers throw DomainError naming the offending line.
ConstantOverrides parseConstantOverrides(std::istream& in);
ConstantOverrides loadConstantOverrides(const std::string& path);

/// Reads the file named by $PFSPEC_CONFIG, or returns no overrides when the
/// variable is unset.
ConstantOverrides constantOverridesFromEnvironment();

/// Dimensionless scheme shared by every solver: energies in units of the
/// rest energy m0 c^2, lengths in units of the reduced Compton wavelength
/// hbar / (m0 c). This type is the only place where physical units appear.
class UnitScheme
{
public:
    UnitScheme(double restEnergyEv, double hbarEvSecond, double speedOfLight);

    double restEnergy() const { return restEnergy_; }       ///< eV
    double comptonLength() const { return comptonLength_; } ///< m
    double hbar() const { return hbar_; }                   ///< eV s
    double c() const { return c_; }                         ///< m/s

    double toPhysicalEnergy(double dimensionless) const { return dimensionless * restEnergy_; }
    double toDimensionlessEnergy(double ev) const { return ev / restEnergy_; }
    double toPhysicalLength(double dimensionless) const { return dimensionless * comptonLength_; }
    double toDimensionlessLength(double metres) const { return metres / comptonLength_; }

private:
    double restEnergy_;
    double comptonLength_;
    double hbar_;
    double c_;
};

/// Builds a scheme from a rest energy in eV; hbar and c default to CODATA-2018.
/// An override file's rest_energy_ev replaces the argument.
UnitScheme makeUnitScheme(double restEnergyEv, const ConstantOverrides& overrides = {});

/// Dimensionless Coulomb coupling G = e^2 / (4 pi eps0 hbar c). Restricted to
/// [0, 1/2) so that (l + 1/2)^2 - G^2 > 0 for every l.
class CouplingG
{
public:
    explicit CouplingG(double g);

    double value() const { return g_; }
    double squared() const { return gsq_; }

private:
    double g_;
    double gsq_;
};

/// G from CODATA-2018 SI constants (numerically the fine-structure constant),
/// unless the overrides carry an explicit G.
CouplingG hydrogenCoupling(const ConstantOverrides& overrides = {});

/// lambda = hbar w0 / (m0 c^2) for the harmonic oscillator.
class OscillatorCoupling
{
public:
    explicit OscillatorCoupling(double lambda);

    double lambda() const { return lambda_; }

    /// Nonrelativistic level lambda (n + 1/2) in units of m0 c^2.
    double level(int n) const;

    /// Set when lambda (n + 1/2) >= kValidityThreshold; the closed forms assume
    /// the level is small next to the rest energy.
    std::optional<std::string> validityWarning(int n) const;

    static constexpr double kValidityThreshold = 0.1;

private:
    double lambda_;
};

/// Nonrelativistic Bohr level -G^2 / (2 n^2), in units of m0 c^2.
double nonrelHydrogenLevel(int n, CouplingG g);

} // namespace pfspec::units
