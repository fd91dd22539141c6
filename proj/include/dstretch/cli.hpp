#pragma once

#include <iosfwd>

namespace dstretch {

/// Entry point of the command-line tool, with the streams injected so the
/// commands can run in-process. Returns the process exit code: 0 on
/// success, 1 when a certification or property check fails, 2 on usage or
/// input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dstretch
