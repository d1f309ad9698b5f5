#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pfspec/errors.hpp"
#include "pfspec/hydrogen.hpp"
#include "pfspec/numeric.hpp"
#include "pfspec/oracle.hpp"
#include "pfspec/oscillator.hpp"
#include "pfspec/units.hpp"
#include "pfspec/verification.hpp"

namespace pfspec::cli {

namespace {

using Json = nlohmann::ordered_json;

// Thrown for anything the user can fix by changing the command line.
struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

enum class Model
{
    OscMassDep,
    OscMassIndep,
    OscKleinGordon,
    HydrogenExact,
    HydrogenExpanded,
    HydrogenNonrel
};

const std::map<std::string, Model> kModels = {
    {"osc-massdep", Model::OscMassDep},           {"osc-massindep", Model::OscMassIndep},
    {"osc-kleingordon", Model::OscKleinGordon},   {"hydrogen-exact", Model::HydrogenExact},
    {"hydrogen-expanded", Model::HydrogenExpanded}, {"hydrogen-nonrel", Model::HydrogenNonrel},
};

bool isHydrogen(Model m)
{
    return m == Model::HydrogenExact || m == Model::HydrogenExpanded || m == Model::HydrogenNonrel;
}

// Shortest round-trip representation; always at least 15 significant digits
// because %.17g is used.
std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string optNum(const std::optional<double>& v)
{
    return v ? num(*v) : std::string();
}

Json optJson(const std::optional<double>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

class OutputSink
{
public:
    OutputSink(const std::string& path, std::ostream& fallback)
    {
        if (path.empty() || path == "-") {
            stream_ = &fallback;
            return;
        }
        file_.open(path, std::ios::binary);
        if (!file_) {
            throw UsageError("cannot open output file '" + path + "'");
        }
        stream_ = &file_;
    }

    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_ = nullptr;
};

units::ConstantOverrides overridesFor(const std::string& configPath)
{
    if (!configPath.empty()) {
        return units::loadConstantOverrides(configPath);
    }
    return units::constantOverridesFromEnvironment();
}

// ---------------------------------------------------------------- spectrum

struct SpectrumOptions
{
    std::string model;
    int nmax = 3;
    std::optional<int> l;
    std::optional<double> lambda;
    std::optional<double> G;
    std::string units = "natural";
    std::string format = "csv";
    std::string output;
    std::string compare;
    double tol = 1e-8;
    std::string branch = "plus";
    int jobs = 0;
    double step = 1e-3;
};

struct Row
{
    int n = 0;
    std::optional<int> l;
    double energy = 0;
    double binding = 0;
    std::optional<double> oracle;
    std::optional<double> deviation;
    std::string note;
};

const std::vector<std::string> kSpectrumColumns = {"model",   "n",          "l",           "energy",
                                                   "energy_ev", "binding",   "binding_ev", "oracle_energy",
                                                   "rel_deviation", "note"};

// Runs job(i) for i in [0, count) on a small pool. Each slot is written by
// exactly one worker, so the result order never depends on scheduling.
template <class Job>
void fanOut(std::size_t count, int jobs, Job job)
{
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                job(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

std::vector<Row> spectrumRows(Model model, const SpectrumOptions& o, double coupling, Branch branch)
{
    std::vector<Row> rows;
    if (isHydrogen(model)) {
        const units::CouplingG g(coupling);
        for (int n = 1; n <= o.nmax; ++n) {
            for (int l = 0; l < n; ++l) {
                if (o.l && *o.l != l) {
                    continue;
                }
                const hydrogen::QuantumState st(n, l);
                Row r;
                r.n = n;
                r.l = l;
                switch (model) {
                case Model::HydrogenExact:
                    r.energy = hydrogen::exactEnergy(st, g, branch);
                    r.binding = branch == Branch::Plus ? hydrogen::exactBinding(st, g) : r.energy - 1.0;
                    break;
                case Model::HydrogenExpanded:
                    r.binding = hydrogen::expandedBinding(st, g);
                    r.energy = 1.0 + r.binding;
                    break;
                default:
                    r.binding = units::nonrelHydrogenLevel(n, g);
                    r.energy = 1.0 + r.binding;
                    break;
                }
                rows.push_back(r);
            }
        }
        return rows;
    }

    const units::OscillatorCoupling k(coupling);
    for (int n = 0; n <= o.nmax; ++n) {
        Row r;
        r.n = n;
        switch (model) {
        case Model::OscMassDep: {
            const auto level = oscillator::energyMassDependent(n, k, branch);
            r.energy = level.energy;
            r.binding = r.energy - 1.0;
            if (branch == Branch::Plus) {
                r.binding = level.e0 + level.e0 * level.e0 / (std::sqrt(1.0 + level.e0 * level.e0) + 1.0);
            }
            break;
        }
        case Model::OscMassIndep: {
            const auto level = oscillator::energyMassIndependent(n, k, branch);
            r.energy = level.energy;
            r.binding = branch == Branch::Plus ? 2.0 * level.e0 / (level.energy + 1.0) : r.energy - 1.0;
            break;
        }
        default:
            r.energy = oscillator::kleinGordonEnergy(n, k, branch);
            r.binding = branch == Branch::Plus ? 2.0 * k.level(n) / (r.energy + 1.0) : r.energy - 1.0;
            break;
        }
        std::vector<std::string> notes;
        if (auto w = k.validityWarning(n)) {
            notes.push_back(*w);
        }
        if (branch == Branch::Minus) {
            notes.push_back("negative-energy branch");
        }
        for (std::size_t i = 0; i < notes.size(); ++i) {
            r.note += (i ? "; " : "") + notes[i];
        }
        rows.push_back(r);
    }
    return rows;
}

double oracleEnergy(Model model, const Row& r, double coupling, double step)
{
    if (isHydrogen(model)) {
        const hydrogen::QuantumState st(r.n, *r.l);
        const auto shot = oracle::solveCoulomb(*r.l, coupling, st.jmax(), step);
        return hydrogen::energyFromRho0(shot.eigenvalue, coupling);
    }
    // The mass-independent closed form and the Klein-Gordon oscillator share
    // one equation once alpha is evaluated at the rest energy.
    const auto eq = model == Model::OscMassDep ? oracle::OscillatorEquation::MassDependent
                                               : oracle::OscillatorEquation::RestEnergyAlpha;
    return oracle::solveOscillator(eq, coupling, r.n, step).eigenvalue;
}

void writeSpectrumCsv(std::ostream& os, const std::string& model, const std::string& couplingName,
                      double coupling, const units::UnitScheme& scheme, const SpectrumOptions& o,
                      const std::vector<Row>& rows)
{
    os << "# pfspec spectrum schema v1\n";
    os << "# model=" << model << " " << couplingName << "=" << num(coupling) << " branch=" << o.branch
       << " rest_energy_ev=" << num(scheme.restEnergy()) << "\n";
    if (!o.compare.empty()) {
        os << "# compare=" << o.compare << " tol=" << num(o.tol) << " step=" << num(o.step) << "\n";
    }
    for (std::size_t i = 0; i < kSpectrumColumns.size(); ++i) {
        os << (i ? "," : "") << kSpectrumColumns[i];
    }
    os << "\n";
    for (const auto& r : rows) {
        os << model << "," << r.n << "," << (r.l ? std::to_string(*r.l) : "") << "," << num(r.energy) << ","
           << num(scheme.toPhysicalEnergy(r.energy)) << "," << num(r.binding) << ","
           << num(scheme.toPhysicalEnergy(r.binding)) << "," << optNum(r.oracle) << "," << optNum(r.deviation)
           << ",";
        // Notes never contain commas or quotes, but quote them anyway so the
        // column stays one field.
        if (!r.note.empty()) {
            os << '"' << r.note << '"';
        }
        os << "\n";
    }
}

void writeSpectrumJson(std::ostream& os, const std::string& model, const std::string& couplingName,
                       double coupling, const units::UnitScheme& scheme, const SpectrumOptions& o,
                       const std::vector<Row>& rows)
{
    Json doc;
    doc["schema"] = "pfspec-spectrum/1";
    doc["model"] = model;
    doc["coupling"] = {{"name", couplingName}, {"value", coupling}};
    doc["branch"] = o.branch;
    doc["rest_energy_ev"] = scheme.restEnergy();
    if (!o.compare.empty()) {
        doc["compare"] = {{"method", o.compare}, {"tol", o.tol}, {"step", o.step}};
    }
    doc["columns"] = kSpectrumColumns;
    Json list = Json::array();
    for (const auto& r : rows) {
        Json j;
        j["model"] = model;
        j["n"] = r.n;
        j["l"] = r.l ? Json(*r.l) : Json(nullptr);
        j["energy"] = r.energy;
        j["energy_ev"] = scheme.toPhysicalEnergy(r.energy);
        j["binding"] = r.binding;
        j["binding_ev"] = scheme.toPhysicalEnergy(r.binding);
        j["oracle_energy"] = optJson(r.oracle);
        j["rel_deviation"] = optJson(r.deviation);
        j["note"] = r.note;
        list.push_back(j);
    }
    doc["rows"] = list;
    os << doc.dump(2) << "\n";
}

void writeSpectrumTable(std::ostream& os, const units::UnitScheme& scheme, const SpectrumOptions& o,
                        const std::vector<Row>& rows)
{
    const bool ev = o.units == "ev";
    const auto scale = [&](double v) { return ev ? scheme.toPhysicalEnergy(v) : v; };
    os << std::left << std::setw(4) << "n" << std::setw(4) << "l" << std::right << std::setw(22)
       << (ev ? "energy [eV]" : "energy [m0c^2]") << std::setw(22) << (ev ? "binding [eV]" : "binding [m0c^2]");
    if (!o.compare.empty()) {
        os << std::setw(22) << "oracle" << std::setw(12) << "rel.dev";
    }
    os << "\n";
    for (const auto& r : rows) {
        os << std::left << std::setw(4) << r.n << std::setw(4) << (r.l ? std::to_string(*r.l) : "-") << std::right
           << std::setprecision(14) << std::setw(22) << scale(r.energy) << std::setprecision(10) << std::setw(22)
           << scale(r.binding);
        if (!o.compare.empty()) {
            os << std::setprecision(14) << std::setw(22) << scale(r.oracle.value_or(NAN)) << std::setprecision(3)
               << std::setw(12) << r.deviation.value_or(NAN);
        }
        if (!r.note.empty()) {
            os << "  " << r.note;
        }
        os << "\n";
    }
}

int cmdSpectrum(const SpectrumOptions& o, const std::string& configPath, bool lambdaGiven, bool gGiven,
                std::ostream& out, std::ostream& err)
{
    const Model model = kModels.at(o.model);
    const bool hyd = isHydrogen(model);
    if (hyd && lambdaGiven) {
        throw UsageError("--lambda applies to oscillator models; use --G for " + o.model);
    }
    if (!hyd && gGiven) {
        throw UsageError("--G applies to hydrogen models; use --lambda for " + o.model);
    }
    if (!hyd && o.l) {
        throw UsageError("--l applies to hydrogen models only");
    }
    if (hyd && o.nmax < 1) {
        throw UsageError("--nmax must be >= 1 for hydrogen models");
    }
    if (!hyd && o.nmax < 0) {
        throw UsageError("--nmax must be >= 0");
    }
    if (o.l && (*o.l < 0 || *o.l >= o.nmax)) {
        throw UsageError("--l must satisfy 0 <= l < nmax");
    }
    const Branch branch = o.branch == "minus" ? Branch::Minus : Branch::Plus;
    if (!o.compare.empty() && branch == Branch::Minus) {
        throw UsageError("--compare oracle supports the plus branch only");
    }
    if (!o.compare.empty() && (model == Model::HydrogenExpanded || model == Model::HydrogenNonrel)) {
        err << "note: the oracle solves the full radial equation; " << o.model
            << " differs from it at higher order in G\n";
    }

    const auto overrides = overridesFor(configPath);
    const auto scheme = units::makeUnitScheme(units::codata2018::kElectronRestEnergyEv, overrides);
    double coupling = 0;
    if (hyd) {
        coupling = gGiven ? units::CouplingG(*o.G).value() : units::hydrogenCoupling(overrides).value();
    } else {
        coupling = o.lambda.value_or(1e-3);
        if (!o.compare.empty() && !(coupling > 0)) {
            throw UsageError("--compare oracle needs --lambda > 0");
        }
    }

    auto rows = spectrumRows(model, o, coupling, branch);
    if (!hyd) {
        for (const auto& r : rows) {
            if (!r.note.empty()) {
                err << "warning: n=" << r.n << ": " << r.note << "\n";
            }
        }
    }

    bool allWithin = true;
    if (!o.compare.empty()) {
        const int jobs = o.jobs > 0 ? o.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
        try {
            fanOut(rows.size(), jobs, [&](std::size_t i) {
                const double e = oracleEnergy(model, rows[i], coupling, o.step);
                rows[i].oracle = e;
                rows[i].deviation = std::abs(rows[i].energy - e) / std::abs(e);
            });
        } catch (const DomainError&) {
            throw;
        } catch (const std::exception& e) {
            err << "oracle failure: " << e.what() << "\n";
            return kExitNumerical;
        }
        for (const auto& r : rows) {
            allWithin = allWithin && *r.deviation <= o.tol;
        }
    }

    OutputSink sink(o.output, out);
    const std::string couplingName = hyd ? "G" : "lambda";
    if (o.format == "json") {
        writeSpectrumJson(sink.get(), o.model, couplingName, coupling, scheme, o, rows);
    } else if (o.format == "table") {
        writeSpectrumTable(sink.get(), scheme, o, rows);
    } else {
        writeSpectrumCsv(sink.get(), o.model, couplingName, coupling, scheme, o, rows);
    }
    if (!allWithin) {
        err << "oracle deviation above --tol " << o.tol << "\n";
        return kExitFailed;
    }
    return kExitOk;
}

// ------------------------------------------------------------ wavefunction

struct WavefunctionOptions
{
    std::string model = "hydrogen-exact";
    int n = 1;
    int l = 0;
    int m = 0;
    int samples = 1000;
    std::optional<double> G;
    double lambda = 1e-3;
    std::optional<double> extent;
    std::string output;
    std::string plot;
    std::string format = "csv";
};

struct Sampled
{
    std::string xName;
    std::string yName;
    std::vector<double> x;
    std::vector<double> y;
    double normalization = 0;
    int signChanges = 0;
    int expectedNodes = 0;
    std::vector<std::pair<std::string, std::string>> meta;
};

Sampled sampleHydrogen(const WavefunctionOptions& o, const units::CouplingG& g)
{
    const hydrogen::QuantumState st(o.n, o.l, o.m);
    const auto orbital = hydrogen::assemble(st, g);
    const auto& rw = orbital.radial();
    const double extent = o.extent.value_or(rw.rhoCut() / rw.series().D);
    Sampled s;
    s.xName = "r";
    s.yName = "R";
    for (int i = 1; i <= o.samples; ++i) {
        const double r = extent * i / o.samples;
        s.x.push_back(r);
        s.y.push_back(rw.R(r));
    }
    const auto density = [&rw](double r) {
        const double v = rw.R(r) * r;
        return v * v;
    };
    const double peak = (rw.series().jmax + rw.series().B + 1.0) / rw.series().D;
    s.normalization = numeric::integrate(density, 0.0, peak) +
                      numeric::integrate(density, peak, std::numeric_limits<double>::infinity());
    s.signChanges = numeric::countSignChanges(s.y);
    s.expectedNodes = st.jmax();
    s.meta = {{"n", std::to_string(o.n)},
              {"l", std::to_string(o.l)},
              {"m", std::to_string(o.m)},
              {"G", num(g.value())},
              {"energy", num(hydrogen::exactEnergy(st, g))},
              {"extent", num(extent)}};
    return s;
}

Sampled sampleOscillator(const WavefunctionOptions& o, Model model)
{
    const units::OscillatorCoupling k(o.lambda);
    if (!(o.lambda > 0)) {
        throw UsageError("--lambda must be > 0 for oscillator wavefunctions");
    }
    const auto level = model == Model::OscMassDep ? oscillator::energyMassDependent(o.n, k)
                                                  : oscillator::energyMassIndependent(o.n, k);
    const auto chi = oscillator::eigenfunction(o.n, level.alpha);
    const double extent = o.extent.value_or((std::sqrt(2.0 * o.n + 1.0) + 6.0) / std::sqrt(level.alpha));
    Sampled s;
    s.xName = "x";
    s.yName = "chi";
    // Interior points only, matching the hydrogen grid convention.
    for (int i = 1; i <= o.samples; ++i) {
        const double x = -extent + 2.0 * extent * i / (o.samples + 1);
        s.x.push_back(x);
        s.y.push_back(chi(x));
    }
    const auto density = [&chi](double x) { return chi(x) * chi(x); };
    const double inf = std::numeric_limits<double>::infinity();
    s.normalization = numeric::integrate(density, -inf, 0.0) + numeric::integrate(density, 0.0, inf);
    s.signChanges = numeric::countSignChanges(s.y);
    s.expectedNodes = o.n;
    s.meta = {{"n", std::to_string(o.n)},
              {"lambda", num(o.lambda)},
              {"alpha", num(level.alpha)},
              {"energy", num(level.energy)},
              {"extent", num(extent)}};
    if (auto w = k.validityWarning(o.n)) {
        s.meta.emplace_back("warning", *w);
    }
    return s;
}

void writeSvg(const std::string& path, const Sampled& s, const std::string& title)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw UsageError("cannot open plot file '" + path + "'");
    }
    const double w = 640, h = 400, pad = 40;
    const auto [xmin, xmax] = std::minmax_element(s.x.begin(), s.x.end());
    const auto [ymin, ymax] = std::minmax_element(s.y.begin(), s.y.end());
    const double lo = std::min(*ymin, 0.0);
    const double hi = std::max(*ymax, 0.0);
    const double xs = (w - 2 * pad) / std::max(*xmax - *xmin, 1e-300);
    const double ys = (h - 2 * pad) / std::max(hi - lo, 1e-300);
    const auto px = [&](double x) { return pad + (x - *xmin) * xs; };
    const auto py = [&](double y) { return h - pad - (y - lo) * ys; };
    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
      << " " << h << "\">\n";
    f << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    f << "<text x=\"" << pad << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n";
    f << "<line x1=\"" << pad << "\" y1=\"" << py(0) << "\" x2=\"" << w - pad << "\" y2=\"" << py(0)
      << "\" stroke=\"#999\"/>\n";
    f << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
    f << std::setprecision(6);
    for (std::size_t i = 0; i < s.x.size(); ++i) {
        f << (i ? " " : "") << px(s.x[i]) << "," << py(s.y[i]);
    }
    f << "\"/>\n</svg>\n";
}

int cmdWavefunction(const WavefunctionOptions& o, const std::string& configPath, std::ostream& out)
{
    if (o.samples < 2) {
        throw UsageError("--samples must be >= 2");
    }
    const Model model = kModels.at(o.model);
    Sampled s;
    if (model == Model::HydrogenExact) {
        const auto overrides = overridesFor(configPath);
        const auto g = o.G ? units::CouplingG(*o.G) : units::hydrogenCoupling(overrides);
        s = sampleHydrogen(o, g);
    } else if (model == Model::OscMassDep || model == Model::OscMassIndep) {
        s = sampleOscillator(o, model);
    } else {
        throw UsageError("wavefunction supports hydrogen-exact, osc-massdep and osc-massindep");
    }

    OutputSink sink(o.output, out);
    auto& os = sink.get();
    if (o.format == "json") {
        Json doc;
        doc["schema"] = "pfspec-wavefunction/1";
        doc["model"] = o.model;
        for (const auto& [k, v] : s.meta) {
            doc[k] = v;
        }
        doc["normalization"] = s.normalization;
        doc["sign_changes"] = s.signChanges;
        doc["expected_nodes"] = s.expectedNodes;
        doc["columns"] = {s.xName, s.yName};
        doc[s.xName] = s.x;
        doc[s.yName] = s.y;
        os << doc.dump(2) << "\n";
    } else {
        os << "# pfspec wavefunction schema v1\n";
        os << "# model=" << o.model << "\n";
        for (const auto& [k, v] : s.meta) {
            os << "# " << k << "=" << v << "\n";
        }
        os << "# normalization=" << num(s.normalization) << "\n";
        os << "# sign_changes=" << s.signChanges << "\n";
        os << "# expected_nodes=" << s.expectedNodes << "\n";
        os << s.xName << "," << s.yName << "\n";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            os << num(s.x[i]) << "," << num(s.y[i]) << "\n";
        }
    }
    if (!o.plot.empty()) {
        writeSvg(o.plot, s, o.model + " n=" + std::to_string(o.n));
    }
    return kExitOk;
}

// ------------------------------------------------------------------ verify

int cmdVerify(const std::string& suiteName, std::uint64_t seed, const std::string& output, std::ostream& out,
              std::ostream& err)
{
    static const std::map<std::string, verification::Suite> suites = {
        {"all", verification::Suite::All},
        {"oscillator", verification::Suite::Oscillator},
        {"hydrogen", verification::Suite::Hydrogen},
        {"dynamics", verification::Suite::Dynamics},
    };
    const auto results = verification::runSuite(suites.at(suiteName), seed);
    const bool ok = verification::allPassed(results);

    Json doc;
    doc["schema"] = "pfspec-verify/1";
    doc["suite"] = suiteName;
    doc["seed"] = seed;
    doc["passed"] = ok;
    Json checks = Json::array();
    for (const auto& r : results) {
        checks.push_back({{"id", r.id},
                          {"description", r.description},
                          {"passed", r.passed},
                          {"diagnostic", r.diagnostic},
                          {"measured", r.measured},
                          {"threshold", r.threshold},
                          {"detail", r.detail}});
        if (!r.passed && !r.diagnostic) {
            err << "FAIL " << r.id << ": measured " << r.measured << " > " << r.threshold << "\n";
        }
    }
    doc["checks"] = checks;
    OutputSink sink(output, out);
    sink.get() << doc.dump(2) << "\n";
    return ok ? kExitOk : kExitFailed;
}

std::vector<std::string> modelNames()
{
    std::vector<std::string> names;
    for (const auto& [k, v] : kModels) {
        names.push_back(k);
    }
    return names;
}

} // namespace

int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Relativistic spectra of the particle-field model: closed forms, oracles and checks", "pfspec"};
    app.require_subcommand(1);
    std::string configPath;
    app.add_option("--config", configPath, "key=value constants file (overrides $PFSPEC_CONFIG)");

    SpectrumOptions so;
    auto* spectrum = app.add_subcommand("spectrum", "Tabulate energy levels for one model");
    spectrum->add_option("--model", so.model, "Model")->required()->check(CLI::IsMember(modelNames()));
    spectrum->add_option("--nmax", so.nmax, "Highest principal (hydrogen) or oscillator quantum number");
    spectrum->add_option("--l", so.l, "Only this orbital quantum number (hydrogen)");
    auto* lambdaOpt = spectrum->add_option("--lambda", so.lambda, "Oscillator coupling hbar w0 / m0c^2");
    auto* gOpt = spectrum->add_option("--G", so.G, "Coulomb coupling (default: fine-structure constant)");
    spectrum->add_option("--units", so.units, "Display units for the table format")
        ->check(CLI::IsMember({"natural", "ev"}));
    spectrum->add_option("--format", so.format, "Output format")->check(CLI::IsMember({"csv", "json", "table"}));
    spectrum->add_option("--output", so.output, "Output file (default stdout)");
    spectrum->add_option("--compare", so.compare, "Cross-check against an independent solver")
        ->check(CLI::IsMember({"oracle"}));
    spectrum->add_option("--tol", so.tol, "Relative tolerance for --compare");
    spectrum->add_option("--branch", so.branch, "Energy branch")->check(CLI::IsMember({"plus", "minus"}));
    spectrum->add_option("--jobs", so.jobs, "Worker threads for --compare (0 = hardware)");
    spectrum->add_option("--step", so.step, "Oracle integration step")->check(CLI::PositiveNumber);

    WavefunctionOptions wo;
    auto* wave = app.add_subcommand("wavefunction", "Sample a normalized eigenfunction");
    wave->add_option("--model", wo.model, "hydrogen-exact, osc-massdep or osc-massindep")
        ->check(CLI::IsMember(modelNames()));
    wave->add_option("--n", wo.n, "Principal / oscillator quantum number");
    wave->add_option("--l", wo.l, "Orbital quantum number");
    wave->add_option("--m", wo.m, "Magnetic quantum number (metadata only; R does not depend on it)");
    wave->add_option("--samples", wo.samples, "Number of grid points");
    wave->add_option("--G", wo.G, "Coulomb coupling");
    wave->add_option("--lambda", wo.lambda, "Oscillator coupling");
    wave->add_option("--extent", wo.extent, "Grid extent in Compton lengths")->check(CLI::PositiveNumber);
    wave->add_option("--format", wo.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    wave->add_option("--output", wo.output, "Output file (default stdout)");
    wave->add_option("--plot", wo.plot, "Also write an SVG plot to this path");

    std::string suite = "all";
    std::uint64_t seed = 7;
    std::string verifyOutput;
    auto* verify = app.add_subcommand("verify", "Run the acceptance checks and print a JSON report");
    verify->add_option("--suite", suite, "Which checks")->check(CLI::IsMember({"all", "oscillator", "hydrogen",
                                                                               "dynamics"}));
    verify->add_option("--seed", seed, "Seed for randomized property checks");
    verify->add_option("--output", verifyOutput, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (spectrum->parsed()) {
            return cmdSpectrum(so, configPath, lambdaOpt->count() > 0, gOpt->count() > 0, out, err);
        }
        if (wave->parsed()) {
            return cmdWavefunction(wo, configPath, out);
        }
        return cmdVerify(suite, seed, verifyOutput, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
}

} // namespace pfspec::cli
