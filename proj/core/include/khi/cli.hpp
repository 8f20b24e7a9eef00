// Command-line surface: parse and validate diagrams, run the pipeline,
// render homology tables, emit machine-readable results, and run the
// bundled acceptance corpus.
#pragma once

#include "khi/homology.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace khi {

enum class OutFormat { text, json, latex };

// Grid rendering of a graded module: quantum gradings as rows (descending),
// homological degrees as columns.  `ring` picks the symbols: towers print as
// F over a field and F[H] over F2[H]; torsion F[H]/(H) collapses to F.
// json format returns an object fragment {"free": [[i,j],...],
// "torsion": [[i,j,k],...]}.
std::string render_table(const GradedModule& M, OutFormat format, Ring ring);

// Entry point shared by the installed binary and the CLI tests.  `args`
// excludes the program name.  Exit codes: 0 success, 1 validation or usage
// failure, 2 invariant breach, 3 resource cap exceeded.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace khi
