// The acceptance suite: every structural and numerical guarantee of the
// pipeline checked against the frozen reference tables for the bundled
// corpus.  Used by the `khi corpus` command and the acceptance test binary.
#pragma once

#include <iosfwd>

namespace khi {

// Runs all acceptance criteria, printing one pass/fail line per criterion.
// Returns true iff every criterion passes.
bool run_acceptance(std::ostream& out);

}  // namespace khi
