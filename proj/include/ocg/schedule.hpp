#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ocg/types.hpp"

namespace ocg {

// 50 significant decimal digits; Real100 is the escalation level.
using Real = boost::multiprecision::cpp_bin_float_50;
using Real100 = boost::multiprecision::cpp_bin_float_100;

// Round cost Q(x, D, s, d, i) = x^2 + (D + 2s + d + i) x + (1 + D)(s + i).
constexpr std::int64_t eval_Q(std::int64_t x, std::int64_t D, std::int64_t s, std::int64_t d,
                              std::int64_t i) {
    return x * x + (D + 2 * s + d + i) * x + (1 + D) * (s + i);
}

template <class T>
    requires(!std::is_integral_v<T>)
T eval_Q(const T& x, const T& D, const T& s, const T& d, const T& i) {
    return x * x + (D + 2 * s + d + i) * x + (1 + D) * (s + i);
}

// G_b(t) = -t/2 + sqrt(b t - t^2/4) on [0, 4b].
template <class T>
T eval_G(std::int64_t b, const T& t) {
    using std::sqrt;
    if (b < 1) throw DomainError("G_b needs b >= 1");
    if (t < 0 || t > T(4 * b)) throw DomainError("G_b(t) needs t in [0, 4b]");
    const T rad = T(b) * t - t * t / 4;
    return -t / 2 + sqrt(rad < 0 ? T(0) : rad);
}

// g_b(t) = G_b(t) - G_b(t-1) on [1, 4b], evaluated without the cancellation
// of the two square roots: their difference equals (b - (2t-1)/4) / (sum).
template <class T>
T eval_g(std::int64_t b, const T& t) {
    using std::sqrt;
    if (b < 1) throw DomainError("g_b needs b >= 1");
    if (t < 1 || t > T(4 * b)) throw DomainError("g_b(t) needs t in [1, 4b]");
    const T bt = T(b);
    const T r1 = bt * t - t * t / 4;
    const T t0 = t - 1;
    const T r0 = bt * t0 - t0 * t0 / 4;
    const T root_sum = sqrt(r1 < 0 ? T(0) : r1) + sqrt(r0 < 0 ? T(0) : r0);
    if (root_sum == 0) return T(-1) / 2;
    return T(-1) / 2 + (bt - (2 * t - 1) / 4) / root_sum;
}

// Closed-form inverse of g_b on [0, g_b(1)] (the smaller root branch).
template <class T>
T eval_g_inverse(std::int64_t b, const T& x) {
    using std::sqrt;
    if (b < 1) throw DomainError("g_b^{-1} needs b >= 1");
    const T g1 = eval_g<T>(b, T(1));
    // one ulp-scale slack so that g_inverse(g(1)) is accepted
    if (x < 0 || x > g1 * (1 + 8 * std::numeric_limits<T>::epsilon()))
        throw DomainError("g_b^{-1}(x) needs x in [0, g_b(1)]");
    const T y = (2 * x + 1) * (2 * x + 1);
    const T bt = T(b);
    const T inner = 1 - (y + 1) / (16 * bt * bt);
    return 2 * bt * (1 + 1 / (4 * bt) - sqrt(y / (y + 1)) * sqrt(inner));
}

// Guard thresholds: a decision is accepted at a precision level when its
// argument is farther than the threshold from the decision boundary.
struct PrecisionPolicy {
    double double_guard = 1e-9;     // relative, fast path
    double real50_guard = 1e-30;    // absolute
    double real100_guard = 1e-60;   // absolute
};

// floor() of a quantity evaluated by `eval`, a generic callable invoked as
// eval(std::type_identity<T>{}) for T = double, Real, Real100 in turn.
template <class Eval>
std::int64_t guarded_floor(Eval&& eval, std::string_view what, std::size_t* escalations = nullptr,
                           const PrecisionPolicy& policy = {}) {
    using std::floor;
    {
        const double v = eval(std::type_identity<double>{});
        const double f = std::floor(v);
        const double dist = std::min(v - f, f + 1 - v);
        if (std::isfinite(v) && dist > policy.double_guard * std::max(1.0, std::abs(v)))
            return static_cast<std::int64_t>(f);
    }
    if (escalations) ++*escalations;
    {
        const Real v = eval(std::type_identity<Real>{});
        const Real f = floor(v);
        if (v - f > policy.real50_guard && f + 1 - v > policy.real50_guard)
            return f.convert_to<std::int64_t>();
    }
    {
        const Real100 v = eval(std::type_identity<Real100>{});
        const Real100 f = floor(v);
        if (v - f > policy.real100_guard && f + 1 - v > policy.real100_guard)
            return f.convert_to<std::int64_t>();
    }
    throw PrecisionError(std::string(what) + ": floor argument within guard of an integer at 100 digits");
}

// Sign decision `eval(...) >= 0` under the same escalation ladder.
template <class Eval>
bool guarded_nonnegative(Eval&& eval, std::string_view what, std::size_t* escalations = nullptr,
                         const PrecisionPolicy& policy = {}) {
    {
        const double v = eval(std::type_identity<double>{});
        if (std::isfinite(v) && std::abs(v) > policy.double_guard) return v >= 0;
    }
    if (escalations) ++*escalations;
    {
        const Real v = eval(std::type_identity<Real>{});
        if (abs(v) > policy.real50_guard) return v >= 0;
    }
    {
        const Real100 v = eval(std::type_identity<Real100>{});
        if (abs(v) > policy.real100_guard) return v >= 0;
    }
    throw PrecisionError(std::string(what) + ": comparison within guard of its boundary at 100 digits");
}

// Exact test g_b(i) >= m for integers m >= 0, 1 <= i <= 4b, by squaring
// sqrt(4bi - i^2) - sqrt(4b(i-1) - (i-1)^2) >= 2m + 1 twice in 128-bit ints.
bool g_at_least(std::int64_t b, std::int64_t i, std::int64_t m);

// Guarded floor(g_b(i)), cross-checked against g_at_least when nonnegative.
std::int64_t floor_g(std::int64_t b, std::int64_t i, std::size_t* escalations = nullptr);

// floor(g_b^{-1}(0)), the last round of the growth stage.
std::int64_t horizon(std::int64_t b, std::size_t* escalations = nullptr);

struct ScheduleRow {
    std::size_t i = 0;
    std::int64_t g_floor = 0;
    int tau = 0;
    int pi = 0;
    std::int64_t s = 0;
    // g_b(i) - floor(g_b(i)), double precision, for display only.
    double frac = 0.0;
};

struct ScheduleTable {
    std::int64_t b = 0;
    std::size_t horizon = 0;
    std::vector<ScheduleRow> rows;
    // Number of decisions that needed more than double precision.
    std::size_t escalations = 0;

    // s and pi after round i (clamped to the horizon); round 0 gives (0, 0).
    std::int64_t s_after(std::size_t i) const;
    int pi_after(std::size_t i) const;
    std::int64_t terminal_s() const { return s_after(horizon); }
};

// Rows i = 1..horizon with tau_i, pi_i, s_i. Requires b >= 3.
ScheduleTable schedule_rows(std::int64_t b);

// phi_{B,a} = 1/2 + (16B / g_B^{-1}(a + 1/2) - 4)^{-1/2}, 0 <= a <= floor(g_B(1)) - 1.
template <class T>
T eval_phi(std::int64_t B, std::int64_t a) {
    using std::sqrt;
    if (B < 3) throw DomainError("phi_{B,a} needs B >= 3");
    const std::int64_t g1 = floor_g(B, 1);
    if (a < 0 || a > g1 - 1) throw DomainError("phi_{B,a} needs 0 <= a <= floor(g_B(1)) - 1");
    const T inv = eval_g_inverse<T>(B, T(a) + T(1) / 2);
    return T(1) / 2 + 1 / sqrt(16 * T(B) / inv - 4);
}

// C_B, summed smallest terms first.
template <class T>
T eval_C(std::int64_t B) {
    using std::abs;
    using std::sqrt;
    if (B < 3) throw DomainError("C_B needs B >= 3");
    const std::int64_t g1 = floor_g(B, 1);
    std::vector<T> terms;
    terms.reserve(static_cast<std::size_t>(g1) + 2);
    for (std::int64_t a = 0; a < g1; ++a) {
        const T phi = eval_phi<T>(B, a);
        const T u = (2 * (T(a) + phi) + 1) * (2 * (T(a) + phi) + 1);
        const T w = T((2 * a + 3) * (2 * a + 3));
        terms.push_back(2 - sqrt(u / (u + 1)) - sqrt(w / (w + 1)));
    }
    std::sort(terms.begin(), terms.end(), [](const T& l, const T& r) { return abs(l) < abs(r); });
    T sum = 0;
    for (const T& t : terms) sum += t;
    return 1 - T(1 + g1) / (2 * T(B)) + sum;
}

// ceil(n / C_B + C_B * B): a bias at which the safe-digraph strategy is
// guaranteed to win on K_n.
std::int64_t required_bias(std::int64_t n, std::int64_t B);

struct GreedyState {
    std::size_t i = 0;   // rounds played
    std::int64_t s = 0;
    int delta = 0;
    std::int64_t x = 0;  // choice made in round i
    int p = 0;
    int q = 0;
};

struct GreedyResult {
    std::vector<GreedyState> trajectory;
    std::int64_t terminal_s = 0;
    int terminal_delta = 0;
};

// Largest x >= 0 with Q(x, D, s, d, i) <= b, or -1 when even x = 0 is too costly.
std::int64_t max_affordable_x(std::int64_t b, std::int64_t D, std::int64_t s, std::int64_t d,
                              std::int64_t i);

// One greedy decision from an (i, s, delta)-safe state. The returned state has
// x = -1 (and is otherwise unchanged) when growth is no longer possible.
GreedyState greedy_step(std::int64_t b, std::size_t i, std::int64_t s, int delta);

// Full greedy trajectory from the (0, 0, 0)-safe start. Integer arithmetic only.
GreedyResult greedy_schedule(std::int64_t b);

}  // namespace ocg
