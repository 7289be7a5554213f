#ifndef PISO_CLI_HPP
#define PISO_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace piso {

// Command dispatch for the workbench binary.  Exit codes: 0 when every
// checked assertion holds, 1 when a checked assertion fails, 2 on usage,
// parse or typing errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace piso

#endif  // PISO_CLI_HPP
