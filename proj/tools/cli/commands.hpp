#pragma once

#include <iosfwd>

#include "config.hpp"

namespace flownet::cli {

/// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;          // unreadable input, bad arguments, unknown country
inline constexpr int kExitIncomplete = 2;     // non-convergence or strict-mode component failure

/// Each command writes its artifacts under cfg.out_dir, progress lines to
/// `log` and problems to `err`, and returns an exit code.
int cmd_ingest(const RunConfig& cfg, std::ostream& log, std::ostream& err);
int cmd_metrics(const RunConfig& cfg, std::ostream& log, std::ostream& err);
int cmd_null(const RunConfig& cfg, std::ostream& log, std::ostream& err);
int cmd_report(const RunConfig& cfg, std::ostream& log, std::ostream& err);
int cmd_ego(const RunConfig& cfg, std::ostream& log, std::ostream& err);

}  // namespace flownet::cli
