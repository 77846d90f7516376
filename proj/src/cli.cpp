#include "polybridge/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polybridge/errors.hpp"
#include "polybridge/parser.hpp"
#include "polybridge/rename.hpp"

namespace polybridge::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class StageTimer {
public:
    StageTimer(bool enabled, std::ostream& err) : enabled_(enabled), err_(err) {}

    template <typename F>
    auto operator()(const char* stage, F&& body) {
        const auto start = std::chrono::steady_clock::now();
        struct Report {
            const StageTimer& timer;
            const char* stage;
            std::chrono::steady_clock::time_point start;
            ~Report() {
                if (!timer.enabled_) return;
                std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
                timer.err_ << "time: " << stage << ' ' << std::fixed << std::setprecision(3) << ms.count()
                           << " ms\n";
            }
        } report{*this, stage, start};
        return body();
    }

private:
    bool enabled_;
    std::ostream& err_;
};

std::string read_all(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string read_file(const std::string& path, const char* what) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw UsageError(std::string("cannot open ") + what + " '" + path + "'");
    }
    return read_all(file);
}

/// Drops one trailing `;` statement terminator (and surrounding whitespace).
std::string_view strip_terminator(std::string_view text) {
    auto last = text.find_last_not_of(" \t\r\n\f\v");
    if (last != std::string_view::npos && text[last] == ';') {
        return text.substr(0, last);
    }
    return text;
}

std::string resolve_var(const std::string& text) {
    std::vector<Token> tokens;
    try {
        tokens = tokenize(text);
    } catch (const SourceError&) {
    }
    if (tokens.size() != 2 || tokens[0].kind != TokenKind::Identifier ||
        tokens[0].span != Span{0, text.size()}) {
        throw UsageError("--var '" + text + "' is not an identifier");
    }
    return tokens[0].text;
}

bool is_ascii(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return static_cast<unsigned char>(c) < 0x80; });
}

RenameSpec build_renames(const CliOptions& options) {
    std::vector<RenameSpec> layers;
    if (options.greek_defaults) {
        layers.push_back(default_greek_map());
    }
    if (options.rename_file) {
        layers.push_back(parse_rename_file(read_file(*options.rename_file, "rename file")));
    }
    if (!options.inline_renames.empty()) {
        std::vector<RenameEntry> entries;
        for (const auto& pair : options.inline_renames) {
            entries.push_back(parse_rename_pair(pair));
        }
        layers.push_back(make_rename_spec(std::move(entries), RenameSource::InlineFlag));
    }
    return layer_specs(layers);
}

std::string location(const std::string& input_name, std::string_view text, std::optional<Span> span) {
    std::string out = input_name;
    if (span) {
        LineColumn lc = line_column(text, span->begin);
        out += ":" + std::to_string(lc.line) + ":" + std::to_string(lc.column);
    }
    return out;
}

std::string excerpt(std::string_view text, std::optional<Span> span) {
    if (!span || span->end <= span->begin || span->end > text.size()) return {};
    return " (at '" + std::string(text.substr(span->begin, span->end - span->begin)) + "')";
}

}  // namespace

int run(const CliOptions& options, Streams io) {
    const std::string input_name = options.input == "-" ? "<stdin>" : options.input;
    std::string source;
    std::string_view text;
    StageTimer timed(options.report_time, io.err);
    try {
        if (!is_ascii_identifier(options.array_name)) {
            throw UsageError("--name '" + options.array_name + "' is not an ASCII identifier");
        }
        std::string main_var = resolve_var(options.main_var);
        RenameSpec renames = build_renames(options);

        source = options.input == "-" ? read_all(io.in) : read_file(options.input, "input");
        text = strip_terminator(source);

        Expr parsed = timed("parse", [&] { return parse(text); });
        Expr renamed = timed("rename", [&] { return apply_renames(parsed, renames); });
        main_var = renamed_symbol(main_var, renames);
        RatFunc value = timed("normalize", [&] { return normalize(renamed); });

        std::string result;
        if (options.format == OutputFormat::ExprOnly) {
            result = timed("emit", [&] { return emit_expr(simplify(value, options.simplify_level)); });
            if (!is_ascii(result)) {
                io.err << "warning: output contains non-ASCII identifiers\n";
            }
        } else {
            MainVarPoly poly = timed("collect", [&] { return collect_main_var(value, main_var); });
            timed("simplify", [&] {
                for (auto& c : poly.coeffs) c = simplify(c, options.simplify_level);
                return 0;
            });
            EmitConfig cfg{options.format, options.array_name, Dialect::ExplicitOps};
            result = timed("emit", [&] {
                return options.format == OutputFormat::CoeffScript ? emit_coeff_script(poly, cfg)
                                                                   : emit_coeff_vector(poly, cfg);
            });
            if (!is_ascii(result)) {
                for (const auto& name : value.table()->names()) {
                    if (!is_ascii(name)) {
                        throw UsageError("identifier '" + name +
                                         "' is not ASCII; add a rename or keep the Greek defaults");
                    }
                }
            }
        }

        if (options.output) {
            std::ofstream file(*options.output, std::ios::binary | std::ios::trunc);
            if (!file || !(file << result) || !file.flush()) {
                throw UsageError("cannot write output file '" + *options.output + "'");
            }
        } else {
            io.out << result;
            io.out.flush();
        }
        return kOk;
    } catch (const SourceError& err) {
        io.err << location(input_name, text, err.span()) << ": error: " << err.what() << '\n';
        return kSourceError;
    } catch (const AlgebraError& err) {
        io.err << location(input_name, text, err.span()) << ": error: " << err.what()
               << excerpt(text, err.span());
        if (err.kind() == AlgebraErrorKind::NotPolynomialInVar) {
            io.err << "; the input is not a polynomial in the main variable";
        }
        io.err << '\n';
        return kAlgebraError;
    } catch (const RenameError& err) {
        io.err << input_name << ": error: " << err.what() << '\n';
        return kUsageError;
    } catch (const UsageError& err) {
        io.err << "error: " << err.what() << '\n';
        return kUsageError;
    }
}

int run_command_line(int argc, const char* const* argv, Streams io) {
    CLI::App app{"Translate a polynomial expression into a coefficient script", "polybridge"};
    CliOptions options;
    std::string format = "script";
    int simplify_level = 1;
    bool no_greek = false;
    std::string output;

    app.add_option("--var", options.main_var, "Main variable")->capture_default_str();
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"script", "vector", "expr"}))
        ->capture_default_str();
    app.add_option("--name", options.array_name, "Coefficient array name")->capture_default_str();
    app.add_flag("--no-greek-defaults", no_greek, "Keep Greek identifiers as they are");
    app.add_option("--rename-file", options.rename_file, "File of FROM=TO renames");
    app.add_option("--rename", options.inline_renames, "FROM=TO rename (repeatable)")
        ->allow_extra_args(false);
    app.add_option("--simplify", simplify_level, "Simplification level")
        ->check(CLI::IsMember({0, 1}))
        ->capture_default_str();
    app.add_flag("--time", options.report_time, "Report per-stage wall time");
    app.add_option("-o,--output", output, "Output file (default: standard output)");
    app.add_option("input", options.input, "Input file, or - for standard input")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        io.out << app.help();
        return kOk;
    } catch (const CLI::ParseError& err) {
        io.err << "error: " << err.what() << '\n';
        return kUsageError;
    }

    options.greek_defaults = !no_greek;
    options.simplify_level = simplify_level == 0 ? SimplifyLevel::Canonical : SimplifyLevel::UnivariateGcd;
    options.format = format == "vector" ? OutputFormat::CoeffVector
                     : format == "expr" ? OutputFormat::ExprOnly
                                        : OutputFormat::CoeffScript;
    if (!output.empty()) {
        options.output = output;
    }
    return run(options, io);
}

}  // namespace polybridge::cli
