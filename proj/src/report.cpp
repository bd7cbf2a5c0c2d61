#include "ocg/report.hpp"

#include <iomanip>
#include <sstream>

#include "ocg/schedule.hpp"

namespace ocg {

namespace {

std::string sig12(const Real& v) {
    std::ostringstream out;
    out << std::setprecision(12) << v;
    return out.str();
}

std::string sig12(double v) {
    std::ostringstream out;
    out << std::setprecision(12) << v;
    return out.str();
}

}  // namespace

std::string constants_header() { return "B,g_B(1),horizon,s_terminal_closed_form,s_terminal_greedy,C_B,1/C_B\n"; }

std::string constants_row(std::int64_t B) {
    if (B < 3) throw DomainError("constants need B >= 3, got " + std::to_string(B));
    const ScheduleTable table = schedule_rows(B);
    const GreedyResult greedy = greedy_schedule(B);
    const Real c = eval_C<Real>(B);
    std::ostringstream out;
    out << B << ',' << sig12(eval_g<Real>(B, Real(1))) << ',' << table.horizon << ',' << table.terminal_s() << ','
        << greedy.terminal_s << ',' << sig12(c) << ',' << sig12(Real(1 / c)) << '\n';
    return out.str();
}

std::string constants_csv(const std::vector<std::int64_t>& Bs) {
    std::string out = constants_header();
    for (auto B : Bs) out += constants_row(B);
    return out;
}

const std::vector<std::int64_t>& default_constants_list() {
    static const std::vector<std::int64_t> Bs{3, 10, 100, 1000, 10000, 100000, 1000000};
    return Bs;
}

std::string schedule_csv_closed_form(std::int64_t b) {
    const ScheduleTable table = schedule_rows(b);
    std::ostringstream out;
    out << "i,g_floor,tau,pi,s,frac\n";
    for (const ScheduleRow& r : table.rows)
        out << r.i << ',' << r.g_floor << ',' << r.tau << ',' << r.pi << ',' << r.s << ',' << sig12(r.frac) << '\n';
    return out.str();
}

std::string schedule_csv_greedy(std::int64_t b) {
    const GreedyResult g = greedy_schedule(b);
    std::ostringstream out;
    out << "i,x,p,q,s,delta\n";
    for (const GreedyState& st : g.trajectory)
        out << st.i << ',' << st.x << ',' << st.p << ',' << st.q << ',' << st.s << ',' << st.delta << '\n';
    out << "# terminal_s=" << g.terminal_s << ",terminal_delta=" << g.terminal_delta
        << ",rounds=" << g.trajectory.size() << '\n';
    return out.str();
}

}  // namespace ocg
