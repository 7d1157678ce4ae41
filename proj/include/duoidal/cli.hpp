#pragma once

#include <iosfwd>

namespace duoidal {

/// Entry point of the command-line tool. Returns 0 when everything
/// requested holds, 1 on a verification failure, 2 on a usage or parse
/// error.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace duoidal
