#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringlab::cli {

/// Command dispatch.  `args` excludes the program name.  Returns the
/// process exit code: 0 success, 1 parse/validation/flag error, 2 refuted
/// witness hypothesis.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ringlab::cli
