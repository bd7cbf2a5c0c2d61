#include "ocg/safety.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace ocg {

SafeWitness initial_witness(int n) {
    if (n < 1) throw DomainError("initial_witness needs n >= 1");
    SafeWitness w;
    w.a = VertexSet(static_cast<std::size_t>(n));
    w.b = VertexSet(static_cast<std::size_t>(n));
    return w;
}

namespace {

bool vertices_subset(const std::set<Vertex>& vs, const VertexSet& of) {
    return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return of.contains(v); });
}

}  // namespace

SafetyReport check_safe(const Board& board, const SafeWitness& w) {
    SafetyReport r;
    const std::size_t n = static_cast<std::size_t>(board.n());
    if (w.a.universe() != n || w.b.universe() != n) {
        r.disjoint = false;
        r.reason = "witness vertex sets have the wrong universe";
        return r;
    }
    auto fail = [&](bool& flag, std::string why) {
        flag = false;
        if (r.reason.empty()) r.reason = std::move(why);
    };

    if (w.a.intersects(w.b)) fail(r.disjoint, "A and B intersect");

    w.a.for_each([&](Vertex u) {
        if (!r.udb) return;
        if (!w.b.is_subset_of(board.out_neighbours(u)))
            fail(r.udb, "(A,B) is not a UDB at tail " + std::to_string(u));
    });

    const VertexSet not_b = w.b.complement();
    if (!verify_alpha_on(board, not_b, w.not_b.decisive))
        fail(r.alpha_not_b, "D[V\\B] does not match its decisive list");
    else if (!vertices_subset(w.not_b.tails(), w.a))
        fail(r.alpha_not_b, "a decisive tail of D[V\\B] lies outside A");
    else if (w.not_b.decisive.size() > w.not_b.rank)
        fail(r.alpha_not_b, "D[V\\B] has more decisive arcs than its rank");

    const VertexSet not_a = w.a.complement();
    if (!verify_alpha_on(board, not_a, w.not_a.decisive))
        fail(r.alpha_not_a, "D[V\\A] does not match its decisive list");
    else if (!vertices_subset(w.not_a.heads(), w.b))
        fail(r.alpha_not_a, "a decisive head of D[V\\A] lies outside B");
    else if (w.not_a.decisive.size() > w.not_a.rank)
        fail(r.alpha_not_a, "D[V\\A] has more decisive arcs than its rank");

    const std::size_t sa = w.a.size(), sb = w.b.size();
    if (std::min(sa, sb) < w.s) fail(r.min_size, "min(|A|,|B|) < s");

    if (r.disjoint && !w.covers_all()) {
        const auto A = static_cast<long long>(sa), B = static_cast<long long>(sb);
        const auto s = static_cast<long long>(w.s), d = static_cast<long long>(w.delta),
                   i = static_cast<long long>(w.i);
        if (A + B != 2 * s + d + i) fail(r.balance, "|A| + |B| != 2s + delta + i");
        else if (static_cast<long long>(w.not_b.rank) != A - s) fail(r.balance, "rank(D[V\\B]) != |A| - s");
        else if (static_cast<long long>(w.not_a.rank) != B - s - d)
            fail(r.balance, "rank(D[V\\A]) != |B| - s - delta");
    }
    return r;
}

std::int64_t grow_bound(const SafeWitness& w, const TransitionParams& pr) {
    const auto x = static_cast<std::int64_t>(pr.x);
    const std::int64_t pq = pr.p + pr.q;
    const auto s = static_cast<std::int64_t>(w.s), d = static_cast<std::int64_t>(w.delta),
               i = static_cast<std::int64_t>(w.i);
    return x * x + (pq + 2 * s + d + i + 1) * x + (pq + 1) * (s + i + 1);
}

namespace {

// Scratch state for one response: a private copy of the board, the witness
// being rebuilt and the arcs directed so far.
struct Work {
    Board board;
    SafeWitness w;
    std::vector<Arc> arcs;
    std::string note;

    void direct(Arc a) {
        board.direct(a);
        arcs.push_back(a);
    }
    void add_note(const std::string& s) {
        if (!note.empty()) note += ",";
        note += s;
    }
};

bool inside(const VertexSet& excluded, Arc e) { return !excluded.contains(e.tail) && !excluded.contains(e.head); }

// The outside vertex that receives the E4 arcs: `forced` when it is outside
// A u B, else the lowest outside vertex that still has a missing arc to
// (into_b) B or from A, else the lowest outside vertex.
Vertex pick_outside(const Work& k, Vertex forced, bool into_b) {
    const VertexSet out = k.w.outside();
    if (out.contains(forced)) return forced;
    Vertex best = -1;
    out.for_each([&](Vertex v) {
        if (best >= 0) return;
        const VertexSet& side = into_b ? k.w.b : k.w.a;
        const VertexSet linked = into_b ? k.board.out_neighbours(v) : k.board.in_neighbours(v);
        if (!side.is_subset_of(linked)) best = v;
    });
    return best >= 0 ? best : out.first();
}

// F1 for the arc e just directed on k.board: restores (i+1, s, delta)-safety.
// `mu` selects the structure: true extends D[V\B], false extends D[V\A].
void apply_f1(Work& k, Arc e, bool mu) {
    SafeWitness& w = k.w;
    const std::size_t n = static_cast<std::size_t>(k.board.n());
    if (w.covers_all()) {
        AlphaStructure& st = mu ? w.not_b : w.not_a;
        const std::size_t size = mu ? w.a.size() : w.b.size();
        AlphaExtension ext = extend_alpha(size, st, e);
        for (const Arc& f : ext.forced) k.direct(f);
        st = std::move(ext.next);
        ++w.i;
        return;
    }
    if (mu) {
        AlphaExtension ext = extend_alpha(n - w.b.size(), w.not_b, e);
        for (const Arc& f : ext.forced) k.direct(f);
        const Vertex v = pick_outside(k, e.tail, true);
        w.b.for_each([&](Vertex t) {
            if (!k.board.is_directed({v, t})) k.direct({v, t});
        });
        w.a.insert(v);
        w.not_b = std::move(ext.next);
        VertexSet gone(n);
        gone.insert(v);
        w.not_a = restrict_alpha(w.not_a, gone);
    } else {
        AlphaExtension ext = extend_alpha(n - w.a.size(), w.not_a, e);
        for (const Arc& f : ext.forced) k.direct(f);
        const Vertex v = pick_outside(k, e.head, false);
        w.a.for_each([&](Vertex t) {
            if (!k.board.is_directed({t, v})) k.direct({t, v});
        });
        w.b.insert(v);
        w.not_a = std::move(ext.next);
        VertexSet gone(n);
        gone.insert(v);
        w.not_b = restrict_alpha(w.not_b, gone);
    }
    ++w.i;
}

// Which structure(s) e lives in. With A u B = V, "not B" means inside A.
std::pair<bool, bool> cases_for(const SafeWitness& w, Arc e) { return {inside(w.b, e), inside(w.a, e)}; }

// Direct every missing arc from A u U to B u W and move U into A, W into B.
void apply_f2(Work& k, const VertexSet& u, const VertexSet& wset) {
    SafeWitness& w = k.w;
    const VertexSet tails = w.a | u;
    const VertexSet heads = w.b | wset;
    tails.for_each([&](Vertex t) {
        const VertexSet missing = VertexSet(heads).subtract(k.board.out_neighbours(t));
        missing.for_each([&](Vertex h) { k.direct({t, h}); });
    });
    w.not_b = restrict_alpha(w.not_b, wset);
    w.not_a = restrict_alpha(w.not_a, u);
    w.a = tails;
    w.b = heads;
}

// Lowest `count` members of `from`, removed from it.
VertexSet take_lowest(VertexSet& from, std::size_t count) {
    VertexSet out(from.universe());
    for (std::size_t c = 0; c < count; ++c) {
        const Vertex v = from.first();
        if (v < 0) break;
        out.insert(v);
        from.erase(v);
    }
    return out;
}

void grow_f2(Work& k, const TransitionParams& pr, std::size_t target_s, std::size_t target_delta) {
    const std::size_t cap_u = pr.x + static_cast<std::size_t>(pr.p);
    const std::size_t cap_w = pr.x + static_cast<std::size_t>(pr.q);
    VertexSet out = k.w.outside();
    if (out.size() >= cap_u + cap_w) {
        const VertexSet u = take_lowest(out, cap_u);
        const VertexSet wset = take_lowest(out, cap_w);
        apply_f2(k, u, wset);
        k.w.s = target_s;
        k.w.delta = target_delta;
        return;
    }
    // Too few outside vertices: absorb all of them, keeping |A| and |B| close.
    VertexSet u(out.universe()), wset(out.universe());
    std::size_t na = k.w.a.size(), nb = k.w.b.size(), cu = 0, cw = 0;
    out.for_each([&](Vertex v) {
        const bool to_a = cw == cap_w || (cu < cap_u && na <= nb);
        if (to_a) {
            u.insert(v);
            ++cu;
            ++na;
        } else {
            wset.insert(v);
            ++cw;
            ++nb;
        }
    });
    apply_f2(k, u, wset);
    k.w.s = std::min({target_s, k.w.a.size(), k.w.b.size()});
    k.w.delta = target_delta;
    k.add_note("saturated");
}

// F1 for e with the preferred case; falls back to the other case when the
// preferred one directs nothing and the other applies.
Work f1_with_switch(const Work& start, Arc e, bool allow_empty = false) {
    const auto [in_not_b, in_not_a] = cases_for(start.w, e);
    if (!in_not_b && !in_not_a)
        throw InvariantError("arc " + to_string(e) + " lies in neither alpha-structure of the witness");
    Work k = start;
    apply_f1(k, e, in_not_b);
    if (!k.arcs.empty() || allow_empty || !(in_not_b && in_not_a)) return k;
    Work alt = start;
    apply_f1(alt, e, false);
    if (!alt.arcs.empty()) {
        alt.add_note("mu-switch");
        return alt;
    }
    return k;
}

// Shared driver: F1 for e, then `finish` (F2 or nothing). When the result
// would leave OBreaker with no arc while arcs remain, spend the first
// available arc e' and run F1 for it too.
template <class Finish>
Transition respond(Board& work, const SafeWitness& w, Arc e, Finish&& finish) {
    if (!work.is_directed(e)) throw DomainError("respond: e = " + to_string(e) + " has not been directed");
    Transition t;
    if (work.available_count() == 0) {
        t.game_over = true;
        t.next = w;
        return t;
    }
    Work start{work, w, {}, {}};
    Work k = f1_with_switch(start, e);
    finish(k);
    if (k.arcs.empty()) {
        k = f1_with_switch(start, e);
        const std::optional<Arc> ep = k.board.first_available();
        if (!ep) throw InvariantError("respond: no arc left for the monotone-rules floor");
        k.direct(*ep);
        Work k2 = f1_with_switch(k, *ep, true);
        k = std::move(k2);
        if (w.covers_all()) --k.w.i;  // e' and E2 belong to the same round here
        k.add_note("e-prime");
        finish(k);
    }
    work = std::move(k.board);
    t.arcs = std::move(k.arcs);
    t.next = std::move(k.w);
    t.note = std::move(k.note);
    return t;
}

void check_params(const SafeWitness& w, const TransitionParams& pr) {
    if (pr.p < 0 || pr.p > 1 || pr.q < 0 || pr.q > 1 || pr.p + pr.q > 1)
        throw DomainError("transition params need p, q in {0,1} with p + q <= 1");
    if (w.delta > 1) throw DomainError("growth needs delta in {0,1}");
    if (static_cast<int>(w.delta) + pr.q - pr.p < 0) throw DomainError("delta + q - p would be negative");
    if (pr.x + w.s == 0) throw DomainError("growth needs x + s > 0");
}

}  // namespace

Transition respond_saturating(Board& work, const SafeWitness& w, Arc e, const TransitionParams& params,
                              std::size_t target_s, std::size_t target_delta) {
    check_params(w, params);
    return respond(work, w, e, [&](Work& k) { grow_f2(k, params, target_s, target_delta); });
}

Transition respond_grow(Board& work, const SafeWitness& w, Arc e, const TransitionParams& params) {
    check_params(w, params);
    const std::size_t ts = w.s + params.x + static_cast<std::size_t>(params.p);
    const std::size_t td = w.delta + static_cast<std::size_t>(params.q) - static_cast<std::size_t>(params.p);
    return respond(work, w, e, [&](Work& k) { grow_f2(k, params, ts, td); });
}

Transition respond_maintain(Board& work, const SafeWitness& w, Arc e) {
    if (w.s == 0) throw DomainError("maintenance needs s > 0");
    return respond(work, w, e, [](Work&) {});
}

Transition transition_grow(const Board& before, const SafeWitness& w, Arc e, const TransitionParams& params) {
    check_params(w, params);
    if (before.available_count() < 4) throw DomainError("growth needs at least two undirected edges");
    if (!before.is_available(e)) throw RuleViolation("transition_grow: " + to_string(e) + " is not available");
    const std::size_t room = w.outside().size();
    if (w.covers_all() || 2 * params.x + static_cast<std::size_t>(params.p + params.q) >= room)
        throw DomainError("growth needs 2x + p + q < |V \\ (A u B)|");
    Board work = before;
    work.direct(e);
    return respond_grow(work, w, e, params);
}

Transition transition_maintain(const Board& before, const SafeWitness& w, Arc e) {
    if (w.s == 0) throw DomainError("maintenance needs s > 0");
    if (before.available_count() < 4) throw DomainError("maintenance needs at least two undirected edges");
    if (!before.is_available(e)) throw RuleViolation("transition_maintain: " + to_string(e) + " is not available");
    Board work = before;
    work.direct(e);
    return respond_maintain(work, w, e);
}

Transition respond_scheduled(Board& work, const SafeWitness& w, Arc e, const ScheduleTable& table,
                             std::size_t round) {
    if (round == 0) throw DomainError("rounds are 1-based");
    const std::int64_t n = work.n();
    if (n > table.terminal_s() + table.b)
        throw RegimeError("n = " + std::to_string(n) + " exceeds s_horizon + b = " +
                          std::to_string(table.terminal_s() + table.b));
    if (round <= table.horizon) {
        const ScheduleRow& row = table.rows[round - 1];
        TransitionParams pr;
        pr.x = static_cast<std::size_t>(row.g_floor);
        const int pi = static_cast<int>(std::min<std::size_t>(w.delta, 1));
        pr.p = pi * row.tau;
        pr.q = (1 - pi) * row.tau;
        if (pr.x + w.s == 0) return respond_maintain(work, w, e);
        return respond_grow(work, w, e, pr);
    }
    return respond_maintain(work, w, e);
}

Transition scheduled_transition(const Board& before, const SafeWitness& w, Arc e, const ScheduleTable& table,
                                std::size_t round) {
    if (!before.is_available(e)) throw RuleViolation("scheduled_transition: " + to_string(e) + " is not available");
    Board work = before;
    work.direct(e);
    return respond_scheduled(work, w, e, table, round);
}

Transition scheduled_transition(const Board& before, const SafeWitness& w, Arc e, std::int64_t b,
                                std::size_t round) {
    return scheduled_transition(before, w, e, schedule_rows(b), round);
}

}  // namespace ocg
