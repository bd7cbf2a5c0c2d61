#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ocg/alpha.hpp"
#include "ocg/board.hpp"
#include "ocg/schedule.hpp"
#include "ocg/vertex_set.hpp"

namespace ocg {

// Certificate that a board is (i, s, delta)-safe: (A, B) is a uniformly
// directed biclique, the board restricted to V\B is the alpha-structure
// `not_b` with tails in A, the board restricted to V\A is `not_a` with heads
// in B, min(|A|, |B|) >= s, and while A u B != V the sizes and ranks satisfy
// |A| + |B| = 2s + delta + i, rank(not_b) = |A| - s, rank(not_a) = |B| - s - delta.
struct SafeWitness {
    VertexSet a;
    VertexSet b;
    AlphaStructure not_b;
    AlphaStructure not_a;
    std::size_t i = 0;
    std::size_t s = 0;
    std::size_t delta = 0;

    bool covers_all() const { return (a | b).size() == a.universe(); }
    VertexSet outside() const { return (a | b).complement(); }

    friend bool operator==(const SafeWitness&, const SafeWitness&) = default;
};

// The (0, 0, 0)-safe witness of the empty board.
SafeWitness initial_witness(int n);

struct SafetyReport {
    bool disjoint = true;
    bool udb = true;
    bool alpha_not_b = true;
    bool alpha_not_a = true;
    bool min_size = true;
    bool balance = true;
    std::string reason;

    bool ok() const { return disjoint && udb && alpha_not_b && alpha_not_a && min_size && balance; }
};

SafetyReport check_safe(const Board& board, const SafeWitness& w);
inline bool verify_safe(const Board& board, const SafeWitness& w) { return check_safe(board, w).ok(); }

struct TransitionParams {
    std::size_t x = 0;
    int p = 0;
    int q = 0;
};

struct Transition {
    // Arcs to direct after e, in order.
    std::vector<Arc> arcs;
    SafeWitness next;
    // Set when no arc was left after e; `arcs` is then empty.
    bool game_over = false;
    // Set when a fallback construction was used (see respond_*); diagnostics only.
    std::string note;
};

// x^2 + (p+q+2s+delta+i+1)x + (p+q+1)(s+i+1)
std::int64_t grow_bound(const SafeWitness& w, const TransitionParams& params);

// Grows the witness to (i+1, s+x+p, delta+q-p). `before` must not yet contain e.
Transition transition_grow(const Board& before, const SafeWitness& w, Arc e, const TransitionParams& params);

// Re-establishes (i+1, s, delta)-safety after e with 1 <= |S| <= n - s.
Transition transition_maintain(const Board& before, const SafeWitness& w, Arc e);

// OBreaker's scheduled response in round `round` (1-based): grows with
// x = floor(g_b(round)) and the tau/pi upgrade while round <= horizon, maintains
// afterwards. Throws RegimeError when n > s_horizon + b.
Transition scheduled_transition(const Board& before, const SafeWitness& w, Arc e,
                                const ScheduleTable& table, std::size_t round);
Transition scheduled_transition(const Board& before, const SafeWitness& w, Arc e, std::int64_t b,
                                std::size_t round);

// In-place forms used by strategies: `work` already contains e and receives S.
Transition respond_grow(Board& work, const SafeWitness& w, Arc e, const TransitionParams& params);
Transition respond_maintain(Board& work, const SafeWitness& w, Arc e);
Transition respond_scheduled(Board& work, const SafeWitness& w, Arc e, const ScheduleTable& table,
                             std::size_t round);

// Growth that runs out of vertices outside A u B: performs the maintenance
// step, then absorbs every remaining outside vertex with at most x+p joining A
// and x+q joining B, balancing |A| and |B|. The result covers V and claims
// s' = min(target_s, |A|, |B|).
Transition respond_saturating(Board& work, const SafeWitness& w, Arc e, const TransitionParams& params,
                              std::size_t target_s, std::size_t target_delta);

class RegimeError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace ocg
