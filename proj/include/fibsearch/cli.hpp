#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibsearch::cli {

/// Runs one command. args excludes the program name. Exactly one artifact
/// (TSV, JSON, DOT or CSV) goes to out; on failure a single "error: ..."
/// line goes to err and the status is nonzero (2 for usage errors, 1 for
/// everything else).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fibsearch::cli
