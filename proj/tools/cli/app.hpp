#pragma once

#include <iosfwd>

namespace flownet::cli {

/// Parses argv and dispatches to a command. `FLOWNET_OUT` supplies the
/// output directory when --out-dir is absent.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flownet::cli
