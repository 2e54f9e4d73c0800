#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncg {

/// Entry point of the `ncg` tool. Returns 0 on success, 1 on domain errors
/// and 2 on usage errors (synopsis printed to `err`). Graph files named "-"
/// are read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace ncg
