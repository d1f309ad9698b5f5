#include "pfspec/units.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>

#include "pfspec/errors.hpp"

namespace pfspec::units {

namespace {

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parseNumber(const std::string& text, int lineNo)
{
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw DomainError("constants file line " + std::to_string(lineNo) + ": not a number: '" + text + "'");
    }
    return value;
}

} // namespace

ConstantOverrides parseConstantOverrides(std::istream& in)
{
    ConstantOverrides out;
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw DomainError("constants file line " + std::to_string(lineNo) + ": expected key=value");
        }
        const std::string key = trim(line.substr(0, eq));
        const double value = parseNumber(trim(line.substr(eq + 1)), lineNo);
        if (key == "rest_energy_ev") {
            out.restEnergyEv = value;
        } else if (key == "hbar") {
            out.hbar = value;
        } else if (key == "c") {
            out.c = value;
        } else if (key == "G") {
            out.G = value;
        } else {
            throw DomainError("constants file line " + std::to_string(lineNo) + ": unknown key '" + key + "'");
        }
    }
    return out;
}

ConstantOverrides loadConstantOverrides(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot open constants file: " + path);
    }
    return parseConstantOverrides(in);
}

ConstantOverrides constantOverridesFromEnvironment()
{
    const char* path = std::getenv("PFSPEC_CONFIG");
    if (path == nullptr || *path == '\0') {
        return {};
    }
    return loadConstantOverrides(path);
}

UnitScheme::UnitScheme(double restEnergyEv, double hbarEvSecond, double speedOfLight)
    : restEnergy_(restEnergyEv)
    , comptonLength_(0)
    , hbar_(hbarEvSecond)
    , c_(speedOfLight)
{
    if (!(restEnergy_ > 0) || !(hbar_ > 0) || !(c_ > 0) || !std::isfinite(restEnergy_) ||
        !std::isfinite(hbar_) || !std::isfinite(c_)) {
        throw DomainError("UnitScheme: rest energy, hbar and c must be positive and finite");
    }
    comptonLength_ = hbar_ * c_ / restEnergy_;
}

UnitScheme makeUnitScheme(double restEnergyEv, const ConstantOverrides& overrides)
{
    const double rest = overrides.restEnergyEv.value_or(restEnergyEv);
    if (!(rest > 0)) {
        throw DomainError("makeUnitScheme: rest energy must be positive");
    }
    return UnitScheme(rest, overrides.hbar.value_or(codata2018::kHbarEvSecond),
                      overrides.c.value_or(codata2018::kSpeedOfLight));
}

CouplingG::CouplingG(double g)
    : g_(g)
    , gsq_(g * g)
{
    if (!(g >= 0.0) || !(g < 0.5)) {
        throw DomainError("CouplingG: require 0 <= G < 1/2");
    }
}

CouplingG hydrogenCoupling(const ConstantOverrides& overrides)
{
    if (overrides.G) {
        return CouplingG(*overrides.G);
    }
    using namespace codata2018;
    const double e2 = kElementaryCharge * kElementaryCharge;
    return CouplingG(e2 / (4 * std::numbers::pi * kVacuumPermittivity * kHbarJouleSecond * kSpeedOfLight));
}

OscillatorCoupling::OscillatorCoupling(double lambda)
    : lambda_(lambda)
{
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw DomainError("OscillatorCoupling: lambda must be finite and >= 0");
    }
}

double OscillatorCoupling::level(int n) const
{
    if (n < 0) {
        throw DomainError("oscillator level: n must be >= 0");
    }
    return lambda_ * (n + 0.5);
}

std::optional<std::string> OscillatorCoupling::validityWarning(int n) const
{
    const double e0 = level(n);
    if (e0 < kValidityThreshold) {
        return std::nullopt;
    }
    std::ostringstream msg;
    msg << "lambda(n+1/2) = " << e0 << " for n = " << n
        << " is not small next to the rest energy; closed forms lose validity";
    return msg.str();
}

double nonrelHydrogenLevel(int n, CouplingG g)
{
    if (n < 1) {
        throw DomainError("nonrelHydrogenLevel: n must be >= 1");
    }
    return -g.squared() / (2.0 * n * n);
}

} // namespace pfspec::units
