#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rc::cli {

// argv[0] excluded. Returns 0 on success, 1 on a domain/capacity error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rc::cli
