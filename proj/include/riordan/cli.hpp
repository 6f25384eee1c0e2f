#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace riordan {

// Runs one command-line invocation. `args` is the argument list in natural
// order, without the program name. Data output goes to `out`; notes,
// convention aliases, and error messages go to `err`, so identical
// invocations produce identical bytes on `out`.
//
// Exit codes (stable contract):
//   0   success
//   1   identity failure (a verified identity does not hold)
//   2   precision shortfall (requested data beyond the certified order)
//   3   internal inconsistency (two independent computations disagree)
//   64  usage error (bad flags, bad literals, unknown names)
int cli_main(std::vector<std::string> args, std::ostream& out,
             std::ostream& err);

} // namespace riordan
