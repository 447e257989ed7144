#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace turan_forge::cli {

// Exit codes: 0 success, 1 verification failure (a claimed-forbidden
// structure was found), 2 usage or input error (one-line diagnostic on err).
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

// Same, for argument vectors without the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace turan_forge::cli
