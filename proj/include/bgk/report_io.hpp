#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "bgk/harness.hpp"

namespace bgk {

/// Marker line appended to a CSV when a run or study stopped early.
inline constexpr const char* failure_marker = "# FAILED: ";

/// CSV writers; reals are printed with 17 significant digits.
void write_run_csv(std::ostream& out, const RunReport& report);
void write_convergence_csv(std::ostream& out, const ConvergenceTable& table);
void write_cfl_csv(std::ostream& out, const std::vector<CflRow>& rows);
void write_cost_csv(std::ostream& out, const std::vector<CostRow>& rows);
void write_failure(std::ostream& out, const std::string& message);

/// 17-significant-digit representation used in every CSV.
std::string format_real(double value);

}  // namespace bgk
