#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polybridge/algebra.hpp"
#include "polybridge/emitter.hpp"

namespace polybridge::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kSourceError = 2,
    kAlgebraError = 3,
    kUsageError = 4,
};

struct CliOptions {
    std::string input = "-";  // "-" reads the input stream
    std::optional<std::string> output;  // unset writes the output stream
    std::string main_var = "x";
    OutputFormat format = OutputFormat::CoeffScript;
    std::string array_name = "P";
    bool greek_defaults = true;
    std::optional<std::string> rename_file;
    std::vector<std::string> inline_renames;  // "from=to"
    SimplifyLevel simplify_level = SimplifyLevel::UnivariateGcd;
    bool report_time = false;
};

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

/// parse -> rename -> collect -> simplify -> emit. Diagnostics go to
/// `io.err` only; on failure nothing is written to the output.
int run(const CliOptions& options, Streams io);

/// Parses argv (argv[0] is the program name) and calls run().
int run_command_line(int argc, const char* const* argv, Streams io);

}  // namespace polybridge::cli
