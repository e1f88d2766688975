#include "bgk/report_io.hpp"

#include <iomanip>
#include <sstream>

namespace bgk {

std::string format_real(double value) {
    std::ostringstream s;
    s.imbue(std::locale::classic());
    s << std::setprecision(17) << value;
    return s.str();
}

void write_run_csv(std::ostream& out, const RunReport& report) {
    const auto& p = report.profiles;
    out << "x,rho,u,T,E\n";
    for (std::size_t i = 0; i < p.x.size(); ++i)
        out << format_real(p.x[i]) << ',' << format_real(p.rho[i]) << ',' << format_real(p.u[i])
            << ',' << format_real(p.T[i]) << ',' << format_real(p.E[i]) << '\n';
    if (report.failure) write_failure(out, *report.failure);
}

void write_convergence_csv(std::ostream& out, const ConvergenceTable& table) {
    out << "eps,nx,err_L1_rho,order\n";
    for (const auto& r : table.rows)
        out << format_real(r.eps) << ',' << r.nx << ',' << format_real(r.err_L1_rho) << ','
            << format_real(r.order) << '\n';
}

void write_cfl_csv(std::ostream& out, const std::vector<CflRow>& rows) {
    out << "cfl_requested,cfl_actual,err_L2_rho\n";
    for (const auto& r : rows)
        out << format_real(r.cfl_requested) << ',' << format_real(r.cfl_actual) << ','
            << format_real(r.err_L2_rho) << '\n';
    for (const auto& r : rows)
        if (r.failure)
            write_failure(out, "cfl_requested=" + format_real(r.cfl_requested) + ": " + *r.failure);
}

void write_cost_csv(std::ostream& out, const std::vector<CostRow>& rows) {
    out << "scheme,nx,cpu_seconds,err_L1_rho\n";
    for (const auto& r : rows)
        out << r.scheme << ',' << r.nx << ',' << format_real(r.cpu_seconds) << ','
            << format_real(r.err_L1_rho) << '\n';
}

void write_failure(std::ostream& out, const std::string& message) {
    std::string line = message;
    for (char& c : line)
        if (c == '\n' || c == '\r') c = ' ';
    out << failure_marker << line << '\n';
}

}  // namespace bgk
