#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pfspec/errors.hpp"
#include "pfspec/units.hpp"

using namespace pfspec;
using namespace pfspec::units;

// CODATA-2018 recommended values, quoted directly rather than derived.
constexpr double kFineStructure = 7.2973525693e-3;
constexpr double kReducedCompton = 3.8615926796e-13; // m
constexpr double kRydbergEv = 13.605693122994;

TEST(Units, CouplingFromSiConstantsIsFineStructure)
{
    EXPECT_NEAR(hydrogenCoupling().value() / kFineStructure, 1.0, 1e-9);
}

TEST(Units, GSquaredNearRoundedValue)
{
    // 5.4e-5 is a rounded figure; the CODATA value sits within 2%.
    EXPECT_NEAR(hydrogenCoupling().squared() / 5.4e-5, 1.0, 0.02);
}

TEST(Units, ComptonLength)
{
    const auto s = makeUnitScheme(codata2018::kElectronRestEnergyEv);
    EXPECT_NEAR(s.comptonLength() / kReducedCompton, 1.0, 1e-9);
}

TEST(Units, RoundTrips)
{
    const auto s = makeUnitScheme(938272088.16);
    for (double v : {-3.5, 0.0, 1e-9, 1.0, 42.0}) {
        EXPECT_DOUBLE_EQ(s.toDimensionlessEnergy(s.toPhysicalEnergy(v)), v);
        EXPECT_DOUBLE_EQ(s.toDimensionlessLength(s.toPhysicalLength(v)), v);
    }
}

TEST(Units, BohrLevelInElectronVolts)
{
    const auto s = makeUnitScheme(codata2018::kElectronRestEnergyEv);
    // Infinite-mass Rydberg energy, G = alpha. The SI inputs reproduce alpha
    // to ~6e-10, so G^2 carries ~1.2e-9.
    EXPECT_NEAR(s.toPhysicalEnergy(nonrelHydrogenLevel(1, hydrogenCoupling())) / -kRydbergEv, 1.0, 3e-9);
    EXPECT_NEAR(nonrelHydrogenLevel(3, CouplingG(0.1)), -0.01 / 18.0, 1e-18);
}

TEST(Units, CouplingRange)
{
    EXPECT_NO_THROW(CouplingG(0.0));
    EXPECT_NO_THROW(CouplingG(0.4999));
    EXPECT_THROW(CouplingG(0.5), DomainError);
    EXPECT_THROW(CouplingG(-1e-3), DomainError);
    EXPECT_THROW(CouplingG(std::nan("")), DomainError);
    EXPECT_THROW(OscillatorCoupling(-1.0), DomainError);
}

TEST(Units, OscillatorLevelAndValidity)
{
    const OscillatorCoupling k(0.04);
    EXPECT_DOUBLE_EQ(k.level(0), 0.02);
    EXPECT_DOUBLE_EQ(k.level(2), 0.1);
    EXPECT_FALSE(k.validityWarning(1).has_value());
    EXPECT_TRUE(k.validityWarning(2).has_value());
}

TEST(Units, ParseOverrides)
{
    std::istringstream in("# constants\nrest_energy_ev = 1000\nhbar=6.5e-16  # trailing\n\nc = 3e8\nG=0.01\n");
    const auto o = parseConstantOverrides(in);
    EXPECT_DOUBLE_EQ(*o.restEnergyEv, 1000.0);
    EXPECT_DOUBLE_EQ(*o.hbar, 6.5e-16);
    EXPECT_DOUBLE_EQ(*o.c, 3e8);
    EXPECT_DOUBLE_EQ(*o.G, 0.01);
    EXPECT_DOUBLE_EQ(hydrogenCoupling(o).value(), 0.01);

    const auto s = makeUnitScheme(510998.95, o);
    EXPECT_DOUBLE_EQ(s.restEnergy(), 1000.0);
    EXPECT_DOUBLE_EQ(s.comptonLength(), 6.5e-16 * 3e8 / 1000.0);
}

TEST(Units, ParseRejectsBadInput)
{
    std::istringstream unknown("mass = 3\n");
    EXPECT_THROW(parseConstantOverrides(unknown), DomainError);
    std::istringstream malformed("c = fast\n");
    EXPECT_THROW(parseConstantOverrides(malformed), DomainError);
    std::istringstream noEquals("c 3e8\n");
    EXPECT_THROW(parseConstantOverrides(noEquals), DomainError);
    EXPECT_THROW(loadConstantOverrides("/nonexistent/pfspec.conf"), DomainError);
}

TEST(Units, EnvironmentVariable)
{
    const std::string path = ::testing::TempDir() + "pfspec_units_env.conf";
    std::ofstream(path) << "G = 0.02\n";
    ::setenv("PFSPEC_CONFIG", path.c_str(), 1);
    EXPECT_DOUBLE_EQ(*constantOverridesFromEnvironment().G, 0.02);
    ::unsetenv("PFSPEC_CONFIG");
    EXPECT_FALSE(constantOverridesFromEnvironment().G.has_value());
}
