#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hypcyc::cli {

// Dispatches the subcommands classify / radius / angles / defect /
// jacobian / embed / bounds / sweep.  args excludes the program name.
// Exit codes: 0 success, 1 usage error, 2 domain failure (tuple not
// realizable, radius divergent, failed --check-fd).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hypcyc::cli
