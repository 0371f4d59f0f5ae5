#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pbt/types.hpp"

namespace pbt::cli {

enum class Format { Csv, Json };

struct RunConfig {
    std::string command;
    int ports = 0;
    std::vector<Rational> dims;
    int maxN = 0;
    Format format = Format::Csv;
    int precision = 15;
    std::optional<std::string> outPath;
    bool dumpAlgebra = false;
};

/// `a..b` (inclusive, integers) or a comma-separated list of rationals.
std::vector<Rational> parseDims(std::string const& text);

/// Number of significant digits: PBT_PRECISION if set, else 15.
int defaultPrecision();

/// Executes a validated config. Returns 0, 1 on ValidationError, 2 on a
/// violated claim; diagnostics go to `err`.
int run(RunConfig const& config, std::ostream& out, std::ostream& err);

/// Parses the command line and runs it.
int main(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pbt::cli
