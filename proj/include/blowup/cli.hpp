#pragma once

#include <iosfwd>

namespace blowup::cli {

// Entry point behind the blowupgate executable.  Returns 0 on success, 1 on
// input/domain errors (structured error object on out), 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace blowup::cli
