#include <doctest.h>

#include <random>

#include "ocg/board.hpp"
#include "oracles.hpp"

using namespace ocg;

namespace {

oracle::Matrix to_matrix(const Board& b) {
    auto m = oracle::empty_matrix(b.n());
    for (const Arc& a : b.directed_arcs()) m[a.tail][a.head] = 1;
    return m;
}

// Random digraph (possibly cyclic) on n vertices, each pair directed with probability p.
Board random_board(int n, double p, std::mt19937_64& rng) {
    Board b(n);
    std::bernoulli_distribution coin(p), dir(0.5);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) b.direct(dir(rng) ? Arc{u, v} : Arc{v, u});
    return b;
}

// Random acyclic digraph: arcs follow a random vertex order.
Board random_dag(int n, double p, std::mt19937_64& rng) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    Board b(n);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) b.direct({order[i], order[j]});
    return b;
}

}  // namespace

TEST_CASE("new_board") {
    CHECK_THROWS_AS(Board(0), DomainError);
    CHECK(Board(1).available_count() == 0);
    const Board two(2);
    CHECK(two.available_arcs() == std::vector<Arc>{{0, 1}, {1, 0}});
    CHECK(Board(4).available_count() == 12);
}

TEST_CASE("direct and availability") {
    Board b(3);
    b.direct({0, 1});
    CHECK(b.is_directed({0, 1}));
    CHECK_FALSE(b.is_available({1, 0}));
    CHECK_FALSE(b.is_available({0, 1}));
    CHECK(b.is_available({1, 2}));
    CHECK_THROWS_AS(b.direct({0, 1}), RuleViolation);
    CHECK_THROWS_AS(b.direct({1, 0}), RuleViolation);
    CHECK_THROWS_AS(b.direct({2, 2}), DomainError);
    CHECK_THROWS_AS(b.direct({0, 3}), DomainError);
}

TEST_CASE("counting invariants along random play") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        Board b(n);
        std::size_t k = 0;
        std::size_t prev = b.available_count();
        while (b.available_count() > 0) {
            const auto av = b.available_arcs();
            REQUIRE(av.size() == b.available_count());
            b.direct(av[rng() % av.size()]);
            ++k;
            CHECK(b.directed_count() == k);
            CHECK(b.available_count() == static_cast<std::size_t>(n * (n - 1)) - 2 * k);
            CHECK(b.available_count() < prev);
            prev = b.available_count();
        }
        CHECK(k == b.total_edges());
    }
}

TEST_CASE("nth_available enumerates in lexicographic order") {
    Board b(5);
    b.direct({1, 3});
    b.direct({4, 0});
    const auto av = b.available_arcs();
    CHECK(std::is_sorted(av.begin(), av.end()));
    for (std::size_t k = 0; k < av.size(); ++k) CHECK(b.nth_available(k) == av[k]);
    CHECK(b.first_available() == av.front());
}

TEST_CASE("is_acyclic examples") {
    CHECK(is_acyclic(Board(3)));
    Board cyc(3);
    cyc.direct({0, 1});
    cyc.direct({1, 2});
    cyc.direct({2, 0});
    const auto r = check_acyclic(cyc);
    CHECK_FALSE(r.acyclic);
    REQUIRE(r.cycle.size() == 3);
    for (std::size_t i = 0; i < r.cycle.size(); ++i)
        CHECK(cyc.is_directed({r.cycle[i], r.cycle[(i + 1) % r.cycle.size()]}));
    Board tt(3);
    tt.direct({0, 1});
    tt.direct({1, 2});
    tt.direct({0, 2});
    CHECK(is_acyclic(tt));
}

TEST_CASE("is_acyclic agrees with the topological-sort oracle on 1000 random digraphs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Board b = random_board(n, 0.1 + 0.8 * (trial % 10) / 10.0, rng);
        const bool expected = oracle::acyclic(to_matrix(b));
        const auto r = check_acyclic(b);
        REQUIRE(r.acyclic == expected);
        CHECK(topological_order(b).has_value() == expected);
        if (!expected) {
            for (std::size_t i = 0; i < r.cycle.size(); ++i)
                CHECK(b.is_directed({r.cycle[i], r.cycle[(i + 1) % r.cycle.size()]}));
        }
    }
}

TEST_CASE("longest_directed_path examples") {
    CHECK(longest_directed_path(Board(3)) == std::vector<Vertex>{0});
    Board b(3);
    b.direct({0, 1});
    b.direct({1, 2});
    CHECK(longest_directed_path(b) == std::vector<Vertex>{0, 1, 2});
    b.direct({2, 0});
    CHECK_THROWS_AS(longest_directed_path(b), DomainError);
}

TEST_CASE("longest_directed_path matches path enumeration for n <= 7") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 600; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Board b = random_dag(n, 0.2 + 0.7 * (trial % 8) / 8.0, rng);
        const auto path = longest_directed_path(b);
        REQUIRE(!path.empty());
        CHECK(static_cast<int>(path.size()) - 1 == oracle::longest_path_length(to_matrix(b)));
        for (std::size_t i = 0; i + 1 < path.size(); ++i) CHECK(b.is_directed({path[i], path[i + 1]}));
    }
}

TEST_CASE("induced") {
    Board b(3);
    b.direct({0, 1});
    b.direct({1, 2});
    VertexSet s(3);
    CHECK(induced(b, s).empty());
    s.insert(0);
    s.insert(1);
    CHECK(induced(b, s) == std::vector<Arc>{{0, 1}});
    CHECK(induced(b, VertexSet::full(3)) == b.directed_arcs());
}

TEST_CASE("find_threat and creates_cycle agree with brute force") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Board b = random_dag(n, 0.5, rng);
        bool any = false;
        for (const Arc& e : b.available_arcs()) {
            Board c = b;
            c.direct(e);
            const bool cyc = !oracle::acyclic(to_matrix(c));
            CHECK(creates_cycle(b, e) == cyc);
            any = any || cyc;
        }
        const ThreatCheck t = find_threat(b);
        CHECK(t.board_acyclic);
        CHECK(t.threat.has_value() == any);
        if (t.threat) CHECK(creates_cycle(b, *t.threat));
    }
}
