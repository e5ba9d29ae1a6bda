#ifndef STSURF_CLI_HPP
#define STSURF_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace stsurf {

// Runs one CLI invocation.  Exit status 0 on success, 1 on usage errors,
// 2 on validation failures (diagnostic names the violated invariant).
int cli_run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace stsurf

#endif
