#ifndef LCVA_CLI_HPP
#define LCVA_CLI_HPP

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcva/engine.hpp"
#include "lcva/susy.hpp"

namespace lcva {

/// Parse failure with a 1-based source location.
struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
};

/// A parsed algebra-definition file: the presentation plus the statements
/// that have no LcaPresentation counterpart (parameter declarations, the
/// optional grading, SEF bar-directions for check-sef).
struct AlgebraFile {
  LcaPresentation pres;
  std::vector<int> params;               // declared parameter ids, file order
  std::map<int, Scalar> grading;         // generator index -> weight
  std::map<int, BarDirection> susy_dirs; // generator index -> bar direction
};

/// Parses the ASCII algebra format (grammar in the README):
///   param <id>...;            parameter declarations
///   even|odd [central] <id>...;  / central <id>...;   generator declarations
///   bracket <a> <b> = <expr>;  lambda-bracket table entry
///   derive <D> <a> = <expr>;   derivation action
///   set <C> = <expr>;          central specialization
///   grading <a> = <expr>;      grading weight
///   susy <a> = bar|image;      SEF direction (check-sef without a derivation)
/// <expr> uses ids, d, l, i, sqrt2, rationals, + - * / ^ and parentheses;
/// bracket/derive values must be C[d]-linear in the generators.
AlgebraFile parse_algebra(const std::string& text);

/// Canonical rendering; parse_algebra(render_algebra(f)) reproduces f and
/// render o parse o render is a fixed point.
std::string render_algebra(const AlgebraFile& f);

/// Evaluates an element expression (no l; products become normally ordered
/// products, right-nested; d^k applies to the factor it precedes).
VElement parse_element(const std::string& text, const VertexAlgebra& va);

/// Runs one CLI command (argv without the program name), writing the text or
/// JSON report to out.  Returns 0 when every check passes, 1 when a check
/// fails, 2 on usage or parse errors.
int run_command(const std::vector<std::string>& args, std::ostream& out);

}  // namespace lcva

#endif  // LCVA_CLI_HPP
