#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

using namespace pfspec::cli;

namespace {

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "pfspec");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = runCli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep)) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == sep) {
        cells.emplace_back();
    }
    return cells;
}

struct Csv
{
    std::vector<std::string> meta;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(const std::string& name) const
    {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) {
                return i;
            }
        }
        throw std::runtime_error("no column " + name);
    }
};

Csv parseCsv(const std::string& text)
{
    Csv csv;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("#", 0) == 0) {
            csv.meta.push_back(line);
        } else if (csv.header.empty()) {
            csv.header = split(line, ',');
        } else {
            csv.rows.push_back(split(line, ','));
        }
    }
    return csv;
}

std::string metaValue(const Csv& csv, const std::string& key)
{
    for (const auto& m : csv.meta) {
        const auto pos = m.find(key + "=");
        if (pos != std::string::npos) {
            const auto start = pos + key.size() + 1;
            return m.substr(start, m.find(' ', start) - start);
        }
    }
    return {};
}

int significantDigits(const std::string& cell)
{
    int digits = 0;
    bool leading = true;
    for (char c : cell) {
        if (c == 'e' || c == 'E') {
            break;
        }
        if (c >= '0' && c <= '9') {
            if (c != '0') {
                leading = false;
            }
            if (!leading) {
                ++digits;
            }
        }
    }
    return digits;
}

} // namespace

TEST(Cli, HydrogenExactRowCount)
{
    const auto r = run({"spectrum", "--model", "hydrogen-exact", "--nmax", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto csv = parseCsv(r.out);
    ASSERT_EQ(csv.rows.size(), 6u);
    EXPECT_EQ(csv.meta.front(), "# pfspec spectrum schema v1");
    for (const auto& row : csv.rows) {
        EXPECT_LT(std::stod(row[csv.column("energy")]), 1.0);
    }
}

TEST(Cli, CsvCellsCarryFullPrecision)
{
    const auto r = run({"spectrum", "--model", "hydrogen-exact", "--nmax", "2"});
    const auto csv = parseCsv(r.out);
    for (const auto& row : csv.rows) {
        for (const char* col : {"energy", "energy_ev", "binding", "binding_ev"}) {
            EXPECT_GE(significantDigits(row[csv.column(col)]), 15) << row[csv.column(col)];
        }
    }
}

TEST(Cli, ExpandedGroundStateInElectronVolts)
{
    const auto r = run({"spectrum", "--model", "hydrogen-expanded", "--nmax", "1", "--units", "ev"});
    ASSERT_EQ(r.code, 0);
    const auto csv = parseCsv(r.out);
    ASSERT_EQ(csv.rows.size(), 1u);
    const double binding = std::stod(csv.rows[0][csv.column("binding_ev")]);
    EXPECT_NEAR(binding, -13.6057 - 9.05e-4, 2e-4);
    // The table shows the same number in eV.
    const auto table = run({"spectrum", "--model", "hydrogen-expanded", "--nmax", "1", "--units", "ev", "--format",
                            "table"});
    EXPECT_NE(table.out.find("-13.60659"), std::string::npos) << table.out;
}

TEST(Cli, ZeroOscillatorCouplingGivesRestEnergy)
{
    for (const char* model : {"osc-massdep", "osc-massindep", "osc-kleingordon"}) {
        const auto r = run({"spectrum", "--model", model, "--lambda", "0", "--nmax", "2"});
        ASSERT_EQ(r.code, 0) << r.err;
        const auto csv = parseCsv(r.out);
        ASSERT_EQ(csv.rows.size(), 3u);
        for (const auto& row : csv.rows) {
            EXPECT_EQ(std::stod(row[csv.column("energy")]), 1.0);
        }
    }
}

TEST(Cli, OracleComparisonPasses)
{
    for (const char* model : {"hydrogen-exact", "osc-massdep", "osc-massindep", "osc-kleingordon"}) {
        const auto r = run({"spectrum", "--model", model, "--nmax", "3", "--compare", "oracle"});
        EXPECT_EQ(r.code, 0) << model << ": " << r.err;
        const auto csv = parseCsv(r.out);
        for (const auto& row : csv.rows) {
            EXPECT_LT(std::stod(row[csv.column("rel_deviation")]), 1e-8);
        }
    }
}

TEST(Cli, OracleDeviationAboveToleranceFails)
{
    // The Bohr levels differ from the full radial equation at O(G^4) ~ 3e-9.
    const auto r =
        run({"spectrum", "--model", "hydrogen-nonrel", "--nmax", "2", "--compare", "oracle", "--tol", "1e-12"});
    EXPECT_EQ(r.code, kExitFailed);
    const auto loose =
        run({"spectrum", "--model", "hydrogen-nonrel", "--nmax", "2", "--compare", "oracle", "--tol", "1e-6"});
    EXPECT_EQ(loose.code, kExitOk);
}

TEST(Cli, OracleFailureExitCode)
{
    // An integration step far too coarse for the Coulomb tail breaks the
    // node-count bracket.
    const auto r = run({"spectrum", "--model", "hydrogen-exact", "--nmax", "2", "--compare", "oracle", "--step", "7"});
    EXPECT_EQ(r.code, kExitNumerical) << r.out << r.err;
}

TEST(Cli, DeterministicAcrossWorkerCounts)
{
    const std::vector<std::string> base = {"spectrum", "--model", "hydrogen-exact", "--nmax", "4", "--compare",
                                           "oracle"};
    auto one = base, many = base;
    one.insert(one.end(), {"--jobs", "1"});
    many.insert(many.end(), {"--jobs", "8"});
    const auto a = run(one), b = run(many), c = run(many);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(b.out, c.out);
    const auto ja = run({"spectrum", "--model", "osc-massdep", "--format", "json", "--compare", "oracle"});
    const auto jb = run({"spectrum", "--model", "osc-massdep", "--format", "json", "--compare", "oracle"});
    EXPECT_EQ(ja.out, jb.out);
}

TEST(Cli, JsonMirrorsCsv)
{
    const auto csvRun = run({"spectrum", "--model", "hydrogen-exact", "--nmax", "2"});
    const auto jsonRun = run({"spectrum", "--model", "hydrogen-exact", "--nmax", "2", "--format", "json"});
    const auto csv = parseCsv(csvRun.out);
    const auto doc = nlohmann::json::parse(jsonRun.out);
    EXPECT_EQ(doc["schema"], "pfspec-spectrum/1");
    ASSERT_EQ(doc["columns"].size(), csv.header.size());
    for (std::size_t i = 0; i < csv.header.size(); ++i) {
        EXPECT_EQ(doc["columns"][i], csv.header[i]);
    }
    ASSERT_EQ(doc["rows"].size(), csv.rows.size());
    for (std::size_t i = 0; i < csv.rows.size(); ++i) {
        EXPECT_EQ(doc["rows"][i]["energy"].get<double>(), std::stod(csv.rows[i][csv.column("energy")]));
    }
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({"spectrum", "--model", "hydrogen-exact", "--nmax", "2", "--l", "2"}).code, kExitUsage);
    EXPECT_EQ(run({"spectrum", "--model", "hydrogen-exact", "--nmax", "0"}).code, kExitUsage);
    EXPECT_EQ(run({"spectrum", "--model", "osc-massdep", "--nmax", "-1"}).code, kExitUsage);
    EXPECT_EQ(run({"spectrum", "--model", "unknown"}).code, kExitUsage);
    EXPECT_EQ(run({"spectrum", "--model", "hydrogen-exact", "--lambda", "0.1"}).code, kExitUsage);
    EXPECT_EQ(run({"spectrum", "--model", "osc-massdep", "--G", "0.1"}).code, kExitUsage);
    EXPECT_EQ(run({"spectrum", "--model", "hydrogen-exact", "--G", "0.7"}).code, kExitUsage);
    EXPECT_EQ(run({"spectrum", "--model", "osc-massdep", "--lambda", "0", "--compare", "oracle"}).code, kExitUsage);
    EXPECT_EQ(run({"spectrum"}).code, kExitUsage);
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"wavefunction", "--n", "2", "--l", "2"}).code, kExitUsage);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ValidityWarningReported)
{
    const auto r = run({"spectrum", "--model", "osc-massdep", "--lambda", "0.1", "--nmax", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("warning: n=1"), std::string::npos);
    EXPECT_EQ(r.err.find("warning: n=0"), std::string::npos);
}

TEST(Cli, WavefunctionSignChanges)
{
    for (int n = 1; n <= 3; ++n) {
        const auto r = run({"wavefunction", "--model", "hydrogen-exact", "--n", std::to_string(n), "--l", "0",
                            "--samples", "1000"});
        ASSERT_EQ(r.code, 0) << r.err;
        const auto csv = parseCsv(r.out);
        ASSERT_EQ(csv.rows.size(), 1000u);
        EXPECT_EQ(std::stoi(metaValue(csv, "sign_changes")), n - 1);
        EXPECT_NEAR(std::stod(metaValue(csv, "normalization")), 1.0, 1e-8);
        // Recount independently from the samples.
        int changes = 0;
        for (std::size_t i = 1; i < csv.rows.size(); ++i) {
            changes += (std::stod(csv.rows[i][1]) > 0) != (std::stod(csv.rows[i - 1][1]) > 0);
        }
        EXPECT_EQ(changes, n - 1);
    }
}

TEST(Cli, OscillatorWavefunctionAndPlot)
{
    const std::string svg = ::testing::TempDir() + "pfspec_chi3.svg";
    const auto r = run({"wavefunction", "--model", "osc-massdep", "--n", "3", "--samples", "400", "--plot", svg});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto csv = parseCsv(r.out);
    EXPECT_EQ(std::stoi(metaValue(csv, "sign_changes")), 3);
    EXPECT_NEAR(std::stod(metaValue(csv, "normalization")), 1.0, 1e-8);
    std::ifstream f(svg);
    std::string first;
    std::getline(f, first);
    EXPECT_EQ(first.rfind("<svg", 0), 0u);
}

TEST(Cli, WavefunctionOutputFile)
{
    const std::string path = ::testing::TempDir() + "pfspec_wave.json";
    const auto r = run({"wavefunction", "--n", "2", "--l", "1", "--format", "json", "--output", path});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    const auto doc = nlohmann::json::parse(f);
    EXPECT_EQ(doc["sign_changes"], 0);
    EXPECT_EQ(doc["R"].size(), 1000u);
}

TEST(Cli, VerifyHydrogenReport)
{
    const auto r = run({"verify", "--suite", "hydrogen"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    bool found = false;
    for (const auto& c : doc["checks"]) {
        if (c["id"] == "H2") {
            found = true;
            EXPECT_TRUE(c["passed"].get<bool>());
            EXPECT_LE(c["measured"].get<double>(), 10.0);
        }
    }
    EXPECT_TRUE(found);
}

TEST(Cli, VerifyDynamicsSeeded)
{
    const auto a = run({"verify", "--suite", "dynamics", "--seed", "7"});
    EXPECT_EQ(a.code, 0);
    const auto doc = nlohmann::json::parse(a.out);
    EXPECT_EQ(doc["seed"], 7);
    EXPECT_TRUE(doc["passed"].get<bool>());
    EXPECT_LT(doc["checks"][0]["measured"].get<double>(), 1e-12);
    EXPECT_EQ(a.out, run({"verify", "--suite", "dynamics", "--seed", "7"}).out);
}

TEST(Cli, VerifyAllReportsTheSecularBound)
{
    // The unapproximated secular root departs from sqrt(1 + 2 E0) at second
    // order, so the third-order bound cannot hold and the suite is red.
    const auto r = run({"verify", "--suite", "all"});
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(r.code, doc["passed"].get<bool>() ? kExitOk : kExitFailed);
    for (const auto& c : doc["checks"]) {
        if (c["id"] != "O2-secular" && !c["diagnostic"].get<bool>()) {
            EXPECT_TRUE(c["passed"].get<bool>()) << c["id"];
        }
    }
}

TEST(Cli, ConfigFileOverrides)
{
    const std::string path = ::testing::TempDir() + "pfspec_cli.conf";
    std::ofstream(path) << "# test constants\nG = 0.01\nrest_energy_ev = 1000\n";
    ::setenv("PFSPEC_CONFIG", path.c_str(), 1);
    const auto r = run({"spectrum", "--model", "hydrogen-exact", "--nmax", "1"});
    ::unsetenv("PFSPEC_CONFIG");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto csv = parseCsv(r.out);
    EXPECT_EQ(std::stod(metaValue(csv, "G")), 0.01);
    const double e = std::stod(csv.rows[0][csv.column("energy")]);
    EXPECT_NEAR(std::stod(csv.rows[0][csv.column("energy_ev")]), 1000.0 * e, 1e-9);

    // --config takes precedence over the environment.
    const std::string other = ::testing::TempDir() + "pfspec_cli2.conf";
    std::ofstream(other) << "G = 0.02\n";
    const auto r2 = run({"--config", other, "spectrum", "--model", "hydrogen-exact", "--nmax", "1"});
    EXPECT_EQ(std::stod(metaValue(parseCsv(r2.out), "G")), 0.02);

    std::ofstream(other) << "bogus = 1\n";
    EXPECT_EQ(run({"--config", other, "spectrum", "--model", "hydrogen-exact"}).code, kExitUsage);
}
