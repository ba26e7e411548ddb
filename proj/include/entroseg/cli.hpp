#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace entroseg {

// full command-line driver; args excludes the program name.
// returns 0 on success, 1 on domain/runtime failure, 2 on usage errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace entroseg
