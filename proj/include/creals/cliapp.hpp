#ifndef CREALS_CLIAPP_HPP
#define CREALS_CLIAPP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace creals {

/// Command-line frontend: eval, floor, compare, root, check. `args` holds
/// the arguments after the program name. Results go to `out`, diagnostics to
/// `err`. Returns the process exit code: 0 for a definite answer (including
/// a refutation), 1 for usage, parse, or evaluation errors, 2 when the
/// answer is unknown within the given fuel or budget.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace creals

#endif
