#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "svtail/harness.hpp"

namespace svtail {

/// Shortest text that preserves 17 significant digits ("%.17g").
std::string format_g17(double value);

/// "start:stop:step" (endpoints inclusive within half a step) or a
/// comma-separated ascending list.
std::vector<double> parse_t_grid(std::string_view text);

/// CSV with header: t, <tag>_log10_bound per attached tag, empirical_p,
/// ci_low, ci_high, n_trials. Floats printed with 17 significant digits.
void write_tail_curve_csv(std::ostream& os, const TailCurve& curve);

/// JSON mirror of the CSV, one array per column.
void write_tail_curve_json(std::ostream& os, const TailCurve& curve);

void write_report_text(std::ostream& os, const VerificationReport& report);
void write_report_json(std::ostream& os, const VerificationReport& report);

}  // namespace svtail
