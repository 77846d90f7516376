#pragma once

#include <string>

#include "polybridge/algebra.hpp"
#include "polybridge/ratfunc.hpp"

namespace polybridge {

enum class OutputFormat { CoeffScript, CoeffVector, ExprOnly };

/// Only one dialect exists: every operator explicit, no whitespace.
enum class Dialect { ExplicitOps };

struct EmitConfig {
    OutputFormat format = OutputFormat::CoeffScript;
    std::string array_name = "P";
    Dialect dialect = Dialect::ExplicitOps;
};

/// Explicit-operator rendering of a canonical rational function, e.g.
/// `a^2*b^3/(c^4*(t-u))`.
///
/// Terms appear in descending monomial order. A polynomial whose terms share
/// a monomial factor prints that factor pulled out, and a leading negative
/// sign is pulled out with it. The result re-parses to an equal value.
std::string emit_expr(const RatFunc& r);

/// One `NAME(j)=coeff;` line per coefficient, leading coefficient at j = 1.
std::string emit_coeff_script(const MainVarPoly& p, const EmitConfig& cfg);

/// `NAME=[lead, ..., const];` on a single line, no line terminator.
std::string emit_coeff_vector(const MainVarPoly& p, const EmitConfig& cfg);

}  // namespace polybridge
