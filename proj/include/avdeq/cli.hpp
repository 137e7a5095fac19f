#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace avdeq::cli {

// Batch front-end: parses a verb plus JSON inputs, dispatches to the
// library, prints one JSON document on stdout. Exit status: 0 ok, 2 on
// validation errors (diagnostic object {error, location}), 1 on internal
// invariant violations (convention-audit failures).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace avdeq::cli
