#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pbt/metrics.hpp"
#include "pbt/oracle.hpp"
#include "pbt/partitions.hpp"
#include "pbt/permutation.hpp"
#include "pbt/spectral.hpp"

namespace pbt::cli {

namespace {

using nlohmann::ordered_json;

constexpr double kVerifyTolerance = 1e-8;

std::string formatReal(double v, int digits = 12) {
    std::ostringstream os;
    os << std::setprecision(digits) << v;
    return os.str();
}

// Bounds 1 + n P(n-1) / 2 have denominator 1 or 2.
std::string formatDecimal(Rational const& v) {
    if (isInteger(v)) return numerator(v).str();
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<double>::max_digits10) << v.convert_to<double>();
    return os.str();
}

ordered_json dimToJson(Rational const& d) {
    if (isInteger(d)) return ordered_json(numerator(d).convert_to<long long>());
    return ordered_json(d.str());
}

void requirePorts(RunConfig const& c) {
    if (c.ports < 1) throw ValidationError("--ports must be at least 1");
}

void requireDims(RunConfig const& c) {
    if (c.dims.empty()) throw ValidationError("no dimensions given (use --dims or --dim)");
    for (auto const& d : c.dims) {
        if (d < 1) throw ValidationError("dimension " + d.str() + " is below 1");
    }
}

int requireIntegerDim(RunConfig const& c) {
    if (c.dims.size() != 1 || !isInteger(c.dims.front())) {
        throw ValidationError("this command needs a single integer --dim");
    }
    auto const d = numerator(c.dims.front());
    if (d < 1 || d > 1 << 20) throw ValidationError("dimension out of range");
    return d.convert_to<int>();
}

void writeRows(std::vector<MetricsRow> const& rows, Format format, std::ostream& out) {
    if (format == Format::Json) {
        auto doc = ordered_json::array();
        for (auto const& r : rows) {
            doc.push_back({{"N", r.n},
                           {"d", dimToJson(r.d)},
                           {"S", r.S},
                           {"F_e", r.Fe},
                           {"F", r.F},
                           {"F_e_low", r.FeLow},
                           {"F_e_up", r.FeUp}});
        }
        out << doc.dump(2) << '\n';
        return;
    }
    out << "N,d,S,F_e,F,F_e_low,F_e_up\n";
    for (auto const& r : rows) {
        out << r.n << ',' << r.d.str() << ',' << formatReal(r.S) << ',' << formatReal(r.Fe) << ','
            << formatReal(r.F) << ',' << formatReal(r.FeLow) << ',' << formatReal(r.FeUp) << '\n';
    }
}

int runMetrics(RunConfig const& c, std::ostream& out, bool checkBounds) {
    requirePorts(c);
    requireDims(c);
    auto const rows = sweep(c.ports, c.dims, precisionForDigits(c.precision));
    writeRows(rows, c.format, out);
    if (checkBounds) {
        for (auto const& r : rows) {
            if (!rowInvariantsHold(r)) {
                throw ClaimViolation("fidelity bounds violated at N=" + std::to_string(r.n) + ", d=" + r.d.str());
            }
        }
    }
    return 0;
}

int runVerify(RunConfig const& c, std::ostream& out) {
    requirePorts(c);
    int const d = requireIntegerDim(c);
    oracle::hilbertDimension(c.ports, d);  // size cap

    PgmEvaluator const evaluator(c.ports);
    auto const spectrum = computeSpectrum(evaluator.algebra(), d);
    double const pipeline = precisionForDigits(c.precision) == Precision::Digits50
                                ? evaluator.successProbability<Real50>(spectrum).convert_to<double>()
                                : evaluator.successProbability<double>(spectrum);
    auto const dense = oracle::oracleSuccessProbability(c.ports, d);

    auto const retained = spectrum.retained();
    bool spectraMatch = retained.size() == dense.eigenvalues.size();
    for (std::size_t i = 0; spectraMatch && i < retained.size(); ++i) {
        spectraMatch = std::abs(retained[i].lambda.convert_to<double>() - dense.eigenvalues[i].lambda) < 1e-9 &&
                       retained[i].projTrace == dense.eigenvalues[i].multiplicity;
    }
    double const delta = std::abs(pipeline - dense.successProbability);
    bool const pass = delta <= kVerifyTolerance && spectraMatch;

    out << "N=" << c.ports << " d=" << d << '\n'
        << "pipeline S: " << formatReal(pipeline, 15) << '\n'
        << "oracle S:   " << formatReal(dense.successProbability, 15) << '\n'
        << "|delta|:    " << formatReal(delta, 3) << '\n'
        << "spectrum:   " << (spectraMatch ? "match" : "mismatch") << '\n'
        << "completeness error: " << formatReal(dense.completenessError, 3) << '\n'
        << (pass ? "PASS" : "FAIL") << '\n';
    return pass ? 0 : 2;
}

int runSpectrum(RunConfig const& c, std::ostream& out) {
    requirePorts(c);
    requireDims(c);
    if (c.dims.size() != 1) throw ValidationError("spectrum needs a single --dim");
    RhoAlgebra const algebra(c.ports);
    auto const s = computeSpectrum(algebra, c.dims.front());
    auto const moments = momentCheck(algebra, s);
    if (!moments.holds()) throw ClaimViolation("spectral moment check failed");

    if (c.format == Format::Json) {
        ordered_json doc;
        doc["N"] = c.ports;
        doc["d"] = dimToJson(s.d);
        doc["closure"] = ordered_json::array();
        for (auto const& coeff : s.closure.coeffs) doc["closure"].push_back(coeff.str());
        doc["spectrum"] = ordered_json::array();
        for (auto const& e : s.retained()) {
            doc["spectrum"].push_back({{"lambda", e.lambda.str()}, {"projTrace", e.projTrace.str()}});
        }
        if (c.dumpAlgebra) doc["rho"] = algebra.rho().toDebugString();
        out << doc.dump(2) << '\n';
        return 0;
    }
    out << "closure: " << s.closure.toString() << '\n';
    out << "lambda,projTrace\n";
    for (auto const& e : s.retained()) out << e.lambda.str() << ',' << e.projTrace.str() << '\n';
    if (c.dumpAlgebra) out << "rho:\n" << algebra.rho().toDebugString();
    return 0;
}

int runClasses(RunConfig const& c, std::ostream& out) {
    requirePorts(c);
    for (auto const& cls : enumerateMarkedClasses(c.ports)) {
        out << toString(cls) << ' ' << markedClassSize(cls).str() << '\n';
    }
    return 0;
}

int runPartitions(RunConfig const& c, std::ostream& out) {
    if (c.maxN < 1) throw ValidationError("--max must be at least 1");
    auto const table = PartitionTable::build(c.maxN);
    out << "n,P(n),W(n),bound\n";
    bool holds = true;
    for (int n = 1; n <= c.maxN; ++n) {
        auto const check = boundsCheck(n);
        holds = holds && check.holds() && check.w == table.w(n);
        out << n << ',' << table.p(n).str() << ',' << table.w(n).str() << ',' << formatDecimal(check.upper)
            << '\n';
    }
    if (!holds) throw ClaimViolation("partition bounds violated");
    return 0;
}

int dispatch(RunConfig const& c, std::ostream& out) {
    precisionForDigits(c.precision);
    if (c.command == "metrics") return runMetrics(c, out, false);
    if (c.command == "bounds") return runMetrics(c, out, true);
    if (c.command == "verify") return runVerify(c, out);
    if (c.command == "spectrum") return runSpectrum(c, out);
    if (c.command == "classes") return runClasses(c, out);
    if (c.command == "partitions") return runPartitions(c, out);
    throw ValidationError("unknown command '" + c.command + "'");
}

}  // namespace

std::vector<Rational> parseDims(std::string const& text) {
    auto const parseRational = [](std::string token) {
        auto const trim = [](std::string& s) {
            s.erase(0, s.find_first_not_of(' '));
            s.erase(s.find_last_not_of(' ') + 1);
        };
        trim(token);
        if (token.empty() || token.find_first_not_of("0123456789/") != std::string::npos ||
            token.front() == '/' || token.back() == '/' || std::count(token.begin(), token.end(), '/') > 1) {
            throw ValidationError("malformed dimension '" + token + "'");
        }
        auto const slash = token.find('/');
        if (slash != std::string::npos && BigInt(token.substr(slash + 1)) == 0) {
            throw ValidationError("zero denominator in '" + token + "'");
        }
        return Rational(token);
    };

    std::vector<Rational> dims;
    if (auto const dots = text.find(".."); dots != std::string::npos) {
        auto const lo = parseRational(text.substr(0, dots));
        auto const hi = parseRational(text.substr(dots + 2));
        if (!isInteger(lo) || !isInteger(hi)) throw ValidationError("range bounds must be integers");
        if (lo > hi) throw ValidationError("empty range '" + text + "'");
        if (hi - lo > 100000) throw ValidationError("range too long");
        for (Rational d = lo; d <= hi; d += 1) dims.push_back(d);
        return dims;
    }
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) dims.push_back(parseRational(token));
    if (dims.empty()) throw ValidationError("empty dimension list");
    return dims;
}

int defaultPrecision() {
    char const* env = std::getenv("PBT_PRECISION");
    if (env == nullptr || *env == '\0') return 15;
    try {
        std::size_t used = 0;
        int const digits = std::stoi(env, &used);
        if (env[used] != '\0') throw std::invalid_argument(env);
        return digits;
    } catch (std::logic_error const&) {
        throw ValidationError(std::string("PBT_PRECISION is not an integer: ") + env);
    }
}

int run(RunConfig const& config, std::ostream& out, std::ostream& err) {
    try {
        if (!config.outPath) return dispatch(config, out);
        std::ostringstream buffer;
        int const code = dispatch(config, buffer);
        std::ofstream file(*config.outPath, std::ios::binary);
        if (!file) throw ValidationError("cannot open " + *config.outPath);
        file << buffer.str();
        return code;
    } catch (ValidationError const& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (ClaimViolation const& e) {
        err << "claim violated: " << e.what() << '\n';
        return 2;
    }
}

int main(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;
    std::string dims;
    std::string dim;
    std::string format = "csv";
    std::optional<int> precision;

    CLI::App app{"Exact port-based teleportation metrics"};
    app.require_subcommand(1);

    auto const addPorts = [&](CLI::App* sub) {
        sub->add_option("--ports", config.ports, "Number of ports N")->required();
    };
    auto const addCommon = [&](CLI::App* sub) {
        sub->add_option("--precision", precision, "Significant digits, 15..50");
        sub->add_option("--out", config.outPath, "Write output to this file");
    };
    auto const addFormat = [&](CLI::App* sub) {
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    };

    for (auto const* name : {"metrics", "bounds"}) {
        auto* sub = app.add_subcommand(name, std::string(name) == "metrics" ? "Tabulate S, F_e, F and bounds"
                                                                            : "Tabulate and check the F_e bounds");
        addPorts(sub);
        auto* range = sub->add_option("--dims", dims, "Range a..b or list a,b,c");
        sub->add_option("--dim", dim, "Single dimension")->excludes(range);
        addFormat(sub);
        addCommon(sub);
    }
    auto* verify = app.add_subcommand("verify", "Compare the pipeline with the dense oracle");
    addPorts(verify);
    verify->add_option("--dim", dim, "Local dimension")->required();
    addCommon(verify);

    auto* spectrum = app.add_subcommand("spectrum", "Exact eigenvalues of rho with multiplicities");
    addPorts(spectrum);
    spectrum->add_option("--dim", dim, "Local dimension")->required();
    spectrum->add_flag("--dump-algebra", config.dumpAlgebra, "Also print rho in the diagram basis");
    addFormat(spectrum);
    addCommon(spectrum);

    auto* classes = app.add_subcommand("classes", "Marked conjugacy classes with their sizes");
    addPorts(classes);
    addCommon(classes);

    auto* partitions = app.add_subcommand("partitions", "Table of P(n), W(n) and the upper bound");
    partitions->add_option("--max", config.maxN, "Largest n")->required();
    addCommon(partitions);

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int const code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        config.command = app.get_subcommands().front()->get_name();
        config.format = format == "json" ? Format::Json : Format::Csv;
        config.precision = precision ? *precision : defaultPrecision();
        if (!dims.empty()) config.dims = parseDims(dims);
        if (!dim.empty()) config.dims = parseDims(dim);
    } catch (ValidationError const& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return run(config, out, err);
}

}  // namespace pbt::cli
