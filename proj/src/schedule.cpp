#include "ocg/schedule.hpp"

#include <cmath>
#include <string>

namespace ocg {

namespace {

using i128 = __int128;

}  // namespace

bool g_at_least(std::int64_t b, std::int64_t i, std::int64_t m) {
    if (b < 1 || i < 1 || i > 4 * b) throw DomainError("g_at_least needs 1 <= i <= 4b");
    if (m < 0) throw DomainError("g_at_least needs m >= 0");
    // 2 g_b(i) + 1 = sqrt(P) - sqrt(R)
    const i128 P = i128(4) * b * i - i128(i) * i;
    const i128 R = i128(4) * b * (i - 1) - i128(i - 1) * (i - 1);
    const i128 c = 2 * i128(m) + 1;
    // sqrt(P) >= c + sqrt(R)  <=>  P - R - c^2 >= 2 c sqrt(R)
    const i128 lhs = P - R - c * c;
    if (lhs < 0) return false;
    return lhs * lhs >= 4 * c * c * R;
}

std::int64_t floor_g(std::int64_t b, std::int64_t i, std::size_t* escalations) {
    const std::int64_t f = guarded_floor(
        [&](auto tag) {
            using T = typename decltype(tag)::type;
            return eval_g<T>(b, T(i));
        },
        "floor(g_b(i))", escalations);
    if (f >= 0 && !(g_at_least(b, i, f) && !g_at_least(b, i, f + 1)))
        throw PrecisionError("floor(g_b(i)) disagrees with the exact integer test at b=" + std::to_string(b) +
                             ", i=" + std::to_string(i));
    return f;
}

std::int64_t horizon(std::int64_t b, std::size_t* escalations) {
    return guarded_floor(
        [&](auto tag) {
            using T = typename decltype(tag)::type;
            return eval_g_inverse<T>(b, T(0));
        },
        "floor(g_b^{-1}(0))", escalations);
}

std::int64_t ScheduleTable::s_after(std::size_t i) const {
    if (i == 0 || rows.empty()) return 0;
    return rows[std::min(i, horizon) - 1].s;
}

int ScheduleTable::pi_after(std::size_t i) const {
    if (i == 0 || rows.empty()) return 0;
    return rows[std::min(i, horizon) - 1].pi;
}

ScheduleTable schedule_rows(std::int64_t b) {
    if (b < 3) throw DomainError("schedule_rows needs b >= 3, got " + std::to_string(b));
    ScheduleTable table;
    table.b = b;
    const std::int64_t h = horizon(b, &table.escalations);
    table.horizon = static_cast<std::size_t>(h);
    table.rows.reserve(table.horizon);
    std::int64_t s = 0;
    int pi = 0;
    for (std::int64_t i = 1; i <= h; ++i) {
        ScheduleRow row;
        row.i = static_cast<std::size_t>(i);
        row.g_floor = floor_g(b, i, &table.escalations);
        row.frac = eval_g<double>(b, double(i)) - double(row.g_floor);
        if (row.frac < 0) row.frac = 0;
        if (i > 1) {
            const std::int64_t fl = row.g_floor;
            const bool up = guarded_nonnegative(
                [&](auto tag) {
                    using T = typename decltype(tag)::type;
                    using std::sqrt;
                    const T eps = eval_g<T>(b, T(i)) - T(fl);
                    return eps - T(1) / 2 - 1 / sqrt(16 * T(b) / T(i - 1) - 4);
                },
                "tau_b(i) threshold", &table.escalations);
            row.tau = up ? 1 : 0;
        }
        s += row.g_floor + row.tau * pi;
        pi = (pi + row.tau) % 2;
        row.s = s;
        row.pi = pi;
        table.rows.push_back(row);
    }
    return table;
}

std::int64_t required_bias(std::int64_t n, std::int64_t B) {
    if (B < 3) throw DomainError("required_bias needs B >= 3");
    if (n < 1) throw DomainError("required_bias needs n >= 1");
    const std::int64_t neg_floor = guarded_floor(
        [&](auto tag) {
            using T = typename decltype(tag)::type;
            const T c = eval_C<T>(B);
            return -(T(n) / c + c * T(B));
        },
        "required_bias ceiling");
    return -neg_floor;
}

std::int64_t max_affordable_x(std::int64_t b, std::int64_t D, std::int64_t s, std::int64_t d,
                              std::int64_t i) {
    const std::int64_t c = (1 + D) * (s + i);
    if (c > b) return -1;
    const std::int64_t lin = D + 2 * s + d + i;
    // root of x^2 + lin x - (b - c) = 0
    const double disc = double(lin) * double(lin) + 4.0 * double(b - c);
    std::int64_t x = static_cast<std::int64_t>((std::sqrt(disc) - double(lin)) / 2.0);
    if (x < 0) x = 0;
    while (x > 0 && eval_Q(x, D, s, d, i) > b) --x;
    while (eval_Q(x + 1, D, s, d, i) <= b) ++x;
    return x;
}

GreedyState greedy_step(std::int64_t b, std::size_t i, std::int64_t s, int delta) {
    GreedyState st{i, s, delta, -1, 0, 0};
    const std::int64_t next = static_cast<std::int64_t>(i) + 1;
    const std::int64_t x = max_affordable_x(b, 0, s, delta, next);
    if (x < 0 || x + s == 0) return st;
    st.x = x;
    if (eval_Q(x, 1, s, delta, next) <= b) {
        st.p = delta;
        st.q = 1 - delta;
    }
    st.i = i + 1;
    st.s = s + x + st.p;
    st.delta = delta + st.q - st.p;
    return st;
}

GreedyResult greedy_schedule(std::int64_t b) {
    if (b < 3) throw DomainError("greedy_schedule needs b >= 3, got " + std::to_string(b));
    GreedyResult out;
    std::size_t i = 0;
    std::int64_t s = 0;
    int delta = 0;
    for (;;) {
        const GreedyState st = greedy_step(b, i, s, delta);
        if (st.x < 0) break;
        out.trajectory.push_back(st);
        i = st.i;
        s = st.s;
        delta = st.delta;
    }
    out.terminal_s = s;
    out.terminal_delta = delta;
    return out;
}

}  // namespace ocg
