#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xprod::cli {

enum ExitCode { ok = 0, refuted = 1, usage = 2 };

// args excludes the program name. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// FNV-1a 64 of the text, as 16 hex digits.
std::string digest(const std::string& text);

} // namespace xprod::cli
