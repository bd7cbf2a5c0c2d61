#include <doctest.h>

#include <random>

#include "ocg/safety.hpp"

using namespace ocg;

namespace {

VertexSet set_of(int n, std::initializer_list<Vertex> vs) {
    VertexSet s(static_cast<std::size_t>(n));
    for (Vertex v : vs) s.insert(v);
    return s;
}

bool inside_one_side(const SafeWitness& w, Arc a) {
    return (w.a.contains(a.tail) && w.a.contains(a.head)) || (w.b.contains(a.tail) && w.b.contains(a.head));
}

}  // namespace

TEST_CASE("verify_safe examples") {
    CHECK(verify_safe(Board(5), initial_witness(5)));

    Board two(2);
    two.direct({0, 1});
    SafeWitness w = initial_witness(2);
    w.a = set_of(2, {0});
    w.b = set_of(2, {1});
    w.s = 1;
    CHECK(w.covers_all());
    CHECK(verify_safe(two, w));

    Board three(3);
    SafeWitness u = initial_witness(3);
    u.a = set_of(3, {0});
    u.b = set_of(3, {1});
    u.i = 2;
    const SafetyReport r = check_safe(three, u);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.udb);

    three.direct({0, 1});
    CHECK_FALSE(check_safe(three, u).balance);  // ranks must be |A| - s and |B| - s - delta
    u.not_b.rank = 1;
    u.not_a.rank = 1;
    CHECK(verify_safe(three, u));
    u.s = 2;
    CHECK_FALSE(verify_safe(three, u));
    u.s = 0;
    u.i = 1;
    CHECK_FALSE(check_safe(three, u).balance);
    u.i = 2;
    u.a.insert(1);
    CHECK_FALSE(check_safe(three, u).disjoint);
}

TEST_CASE("grow from the empty board") {
    const Board empty(6);
    const Transition t = transition_grow(empty, initial_witness(6), {0, 1}, {1, 0, 0});
    CHECK(t.arcs.size() >= 1);
    CHECK(t.arcs.size() <= 3);
    CHECK(t.next.i == 1);
    CHECK(t.next.s == 1);
    CHECK(t.next.delta == 0);
    Board after = empty;
    after.direct({0, 1});
    for (const Arc& a : t.arcs) after.direct(a);
    CHECK(verify_safe(after, t.next));
    CHECK(find_threat(after).safe());
}

TEST_CASE("grow preconditions") {
    const Board empty(6);
    const SafeWitness w0 = initial_witness(6);
    CHECK_THROWS_AS(transition_grow(empty, w0, {0, 1}, {0, 1, 0}), DomainError);  // delta - p < 0
    CHECK_THROWS_AS(transition_grow(empty, w0, {0, 1}, {0, 0, 0}), DomainError);  // x + s = 0
    CHECK_THROWS_AS(transition_grow(empty, w0, {0, 1}, {1, 1, 1}), DomainError);
    CHECK_THROWS_AS(transition_grow(empty, w0, {0, 1}, {3, 0, 0}), DomainError);  // no room outside
    Board b(6);
    b.direct({0, 1});
    CHECK_THROWS_AS(transition_grow(b, w0, {1, 0}, {1, 0, 0}), RuleViolation);
}

TEST_CASE("grow_bound") {
    SafeWitness w = initial_witness(30);
    w.s = 2;
    w.delta = 1;
    w.i = 3;
    CHECK(grow_bound(w, {2, 0, 0}) == 28);
    CHECK(grow_bound(initial_witness(6), {1, 0, 0}) == 3);
}

TEST_CASE("maintain with e inside V minus B") {
    Board b(4);
    b.direct({0, 1});
    SafeWitness w = initial_witness(4);
    w.a = set_of(4, {0});
    w.b = set_of(4, {1});
    w.s = 1;
    REQUIRE(verify_safe(b, w));
    const Transition t = transition_maintain(b, w, {2, 3});
    CHECK(t.arcs.size() >= 1);
    CHECK(t.arcs.size() <= 3);
    b.direct({2, 3});
    for (const Arc& a : t.arcs) b.direct(a);
    CHECK(verify_safe(b, t.next));
    CHECK(t.next.s == 1);
    CHECK(t.next.i == 1);
}

TEST_CASE("maintain when A and B cover V") {
    Board b(6);
    SafeWitness w = initial_witness(6);
    w.a = set_of(6, {0, 1, 2});
    w.b = set_of(6, {3, 4, 5});
    w.s = 3;
    for (Vertex u : {0, 1, 2})
        for (Vertex v : {3, 4, 5}) b.direct({u, v});
    REQUIRE(verify_safe(b, w));
    const Transition t = transition_maintain(b, w, {0, 1});
    REQUIRE(t.arcs.size() >= 1);
    CHECK(t.arcs.size() <= 3);
    for (const Arc& a : t.arcs) CHECK(inside_one_side(w, a));
    b.direct({0, 1});
    for (const Arc& a : t.arcs) b.direct(a);
    CHECK(verify_safe(b, t.next));
}

TEST_CASE("maintain rejects s = 0") {
    CHECK_THROWS_AS(transition_maintain(Board(5), initial_witness(5), {0, 1}), DomainError);
}

TEST_CASE("scheduled transition") {
    const Board empty(4);
    const Transition t = scheduled_transition(empty, initial_witness(4), {0, 1}, 3, 1);
    CHECK(t.next.s == 1);
    CHECK(t.next.i == 1);
    CHECK(t.next.delta == 0);
    CHECK(t.arcs.size() <= 3);
    Board after = empty;
    after.direct({0, 1});
    for (const Arc& a : t.arcs) after.direct(a);
    CHECK(verify_safe(after, t.next));

    CHECK_THROWS_AS(scheduled_transition(Board(5), initial_witness(5), {0, 1}, 3, 1), RegimeError);

    // the last undirected edge: nothing left to answer with
    Board last(2);
    const Transition over = scheduled_transition(last, initial_witness(2), {0, 1}, 3, 1);
    CHECK(over.game_over);
    CHECK(over.arcs.empty());
}

TEST_CASE("random transitions keep the board safe") {
    std::mt19937_64 rng(77);
    std::size_t grows = 0, maintains = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 16);
        Board board(n);
        SafeWitness w = initial_witness(n);
        while (board.available_count() >= 4) {
            const auto av = board.available_arcs();
            const Arc e = av[rng() % av.size()];
            TransitionParams pr{static_cast<std::size_t>(rng() % 3), 0, 0};
            const int r = static_cast<int>(rng() % 3);
            if (r == 1 && w.delta == 1) pr.p = 1;
            if (r == 2 && w.delta == 0) pr.q = 1;
            if (pr.x + w.s == 0) pr.x = 1;
            const std::size_t room = w.covers_all() ? 0 : w.outside().size();
            Transition t;
            if (2 * pr.x + static_cast<std::size_t>(pr.p + pr.q) < room && (w.s == 0 || rng() % 2)) {
                t = transition_grow(board, w, e, pr);
                ++grows;
                CHECK(t.arcs.size() >= 1);
                CHECK(static_cast<std::int64_t>(t.arcs.size()) <= grow_bound(w, pr));
                CHECK(t.next.s == w.s + pr.x + static_cast<std::size_t>(pr.p));
                CHECK(t.next.delta == w.delta + static_cast<std::size_t>(pr.q) - static_cast<std::size_t>(pr.p));
            } else if (w.s > 0) {
                t = transition_maintain(board, w, e);
                ++maintains;
                CHECK(t.arcs.size() >= 1);
                CHECK(t.arcs.size() <= static_cast<std::size_t>(n) - w.s);
                CHECK(t.next.s >= w.s);
            } else {
                break;
            }
            CHECK(t.next.i == w.i + 1);
            board.direct(e);
            for (const Arc& a : t.arcs) board.direct(a);
            const SafetyReport rep = check_safe(board, t.next);
            REQUIRE_MESSAGE(rep.ok(), rep.reason);
            REQUIRE(find_threat(board).safe());
            w = t.next;
        }
    }
    CHECK(grows > 1000);
    CHECK(maintains > 1000);
}
