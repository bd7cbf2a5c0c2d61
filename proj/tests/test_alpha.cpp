#include <doctest.h>

#include <random>

#include "ocg/alpha.hpp"
#include "oracles.hpp"

using namespace ocg;

namespace {

std::vector<oracle::Pair> pairs(const std::vector<Arc>& d) {
    std::vector<oracle::Pair> out;
    for (const Arc& a : d) out.emplace_back(a.tail, a.head);
    return out;
}

ArcSet as_arcs(const std::set<oracle::Pair>& s) {
    ArcSet out;
    for (const auto& [u, v] : s) out.insert({u, v});
    return out;
}

bool available_in(const ArcSet& d, Arc e) { return !e.is_loop() && !d.contains(e) && !d.contains(e.reversed()); }

// Random alpha-structure on vertices 0..nv-1 grown by `steps` extensions.
AlphaStructure grow_random(int nv, int steps, std::mt19937_64& rng) {
    AlphaStructure a;
    for (int s = 0; s < steps; ++s) {
        const ArcSet cur = closure(a.decisive);
        std::vector<Arc> av;
        for (int u = 0; u < nv; ++u)
            for (int v = 0; v < nv; ++v)
                if (available_in(cur, {u, v})) av.push_back({u, v});
        if (av.empty()) break;
        a = extend_alpha(static_cast<std::size_t>(nv), a, av[rng() % av.size()]).next;
    }
    return a;
}

}  // namespace

TEST_CASE("closure examples") {
    CHECK(closure({}).empty());
    const std::vector<Arc> one{{1, 2}};
    CHECK(closure(one) == ArcSet{{1, 2}});
    const std::vector<Arc> two{{1, 2}, {3, 4}};
    CHECK(closure(two) == ArcSet{{1, 2}, {1, 4}, {3, 4}});
    const std::vector<Arc> loop{{1, 2}, {2, 1}};
    CHECK_THROWS_AS(closure(loop), DomainError);
    const std::vector<Arc> mutual{{1, 2}, {3, 4}, {2, 3}, {4, 1}};
    CHECK_THROWS_AS(closure(mutual), DomainError);
}

TEST_CASE("verify_alpha examples") {
    CHECK(verify_alpha({}, {}));
    const std::vector<Arc> two{{1, 2}, {3, 4}};
    CHECK(verify_alpha({{1, 2}, {1, 4}, {3, 4}}, two));
    CHECK_FALSE(verify_alpha({{1, 2}, {3, 4}}, two));
}

TEST_CASE("extend_alpha examples") {
    AlphaStructure empty;
    auto r0 = extend_alpha(4, empty, {1, 2});
    CHECK(r0.forced.empty());
    CHECK(r0.next.decisive == std::vector<Arc>{{1, 2}});
    CHECK(r0.next.rank == 1);

    AlphaStructure a{{{1, 2}}, 1};
    auto r1 = extend_alpha(3, a, {2, 3});
    CHECK(r1.forced == std::vector<Arc>{{1, 3}});
    CHECK(r1.next.decisive == std::vector<Arc>{{1, 2}, {2, 3}});

    auto r2 = extend_alpha(4, a, {3, 4});
    REQUIRE(r2.forced.size() == 1);
    CHECK(r2.forced.front() == Arc{1, 4});  // the later position wins the tie
    CHECK(r2.next.decisive == std::vector<Arc>{{1, 2}, {3, 4}});

    CHECK_THROWS_AS(extend_alpha(3, a, {1, 2}), RuleViolation);
    CHECK_THROWS_AS(extend_alpha(3, a, {2, 1}), RuleViolation);
}

TEST_CASE("verify_alpha agrees with the definition on random lists") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 3000; ++trial) {
        const int nv = 2 + static_cast<int>(rng() % 7);
        const int k = static_cast<int>(rng() % 6);
        std::vector<Arc> d;
        for (int i = 0; i < k; ++i) {
            const int u = static_cast<int>(rng() % nv);
            int v = static_cast<int>(rng() % (nv - 1));
            if (v >= u) ++v;
            d.push_back({u, v});
        }
        auto D = oracle::closure(pairs(d));
        if (rng() % 3 == 0 && !D.empty()) D.erase(std::next(D.begin(), static_cast<long>(rng() % D.size())));
        CHECK(verify_alpha(as_arcs(D), d) == oracle::is_alpha(D, pairs(d)));
    }
}

TEST_CASE("extend_alpha contract over 10^4 random extension sequences") {
    std::mt19937_64 rng(12345);
    for (int run = 0; run < 10000; ++run) {
        const int nv = 2 + static_cast<int>(rng() % 11);
        AlphaStructure a;
        const int steps = 1 + static_cast<int>(rng() % 8);
        for (int s = 0; s < steps; ++s) {
            const ArcSet before = closure(a.decisive);
            std::vector<Arc> av;
            for (int u = 0; u < nv; ++u)
                for (int v = 0; v < nv; ++v)
                    if (available_in(before, {u, v})) av.push_back({u, v});
            if (av.empty()) break;
            const Arc e = av[rng() % av.size()];
            const AlphaExtension ext = extend_alpha(static_cast<std::size_t>(nv), a, e);
            REQUIRE(ext.forced.size() <= std::min<std::size_t>(a.rank, static_cast<std::size_t>(nv - 2)));
            ArcSet expected = before;
            expected.insert(e);
            for (const Arc& f : ext.forced) {
                CHECK(available_in(before, f));
                CHECK(f != e);
                expected.insert(f);
            }
            REQUIRE(verify_alpha(expected, ext.next.decisive));
            CHECK(ext.next.rank == a.rank + 1);
            auto tails = a.tails();
            tails.insert(e.tail);
            auto heads = a.heads();
            heads.insert(e.head);
            CHECK(ext.next.tails() == tails);
            CHECK(ext.next.heads() == heads);
            a = ext.next;
        }
    }
}

TEST_CASE("alpha-structures stay acyclic after any single available arc") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 400; ++trial) {
        const int nv = 2 + static_cast<int>(rng() % 9);
        const AlphaStructure a = grow_random(nv, static_cast<int>(rng() % 10), rng);
        const ArcSet d = closure(a.decisive);
        for (int u = 0; u < nv; ++u)
            for (int v = 0; v < nv; ++v) {
                if (!available_in(d, {u, v})) continue;
                auto m = oracle::empty_matrix(nv);
                for (const Arc& x : d) m[x.tail][x.head] = 1;
                m[u][v] = 1;
                CHECK(oracle::acyclic(m));
            }
    }
}

TEST_CASE("closure is monotone in prefixes") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 300; ++trial) {
        const AlphaStructure a = grow_random(8, 6, rng);
        const ArcSet full = closure(a.decisive);
        for (std::size_t k = 0; k <= a.decisive.size(); ++k) {
            const ArcSet part = closure(std::span<const Arc>(a.decisive.data(), k));
            CHECK(std::includes(full.begin(), full.end(), part.begin(), part.end()));
        }
    }
}

TEST_CASE("restrict_alpha yields the induced structure") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 2000; ++trial) {
        const int nv = 2 + static_cast<int>(rng() % 9);
        const AlphaStructure a = grow_random(nv, static_cast<int>(rng() % 9), rng);
        VertexSet removed(static_cast<std::size_t>(nv));
        for (int v = 0; v < nv; ++v)
            if (rng() % 3 == 0) removed.insert(v);
        ArcSet induced_arcs;
        for (const Arc& x : closure(a.decisive))
            if (!removed.contains(x.tail) && !removed.contains(x.head)) induced_arcs.insert(x);
        const AlphaStructure r = restrict_alpha(a, removed);
        CHECK(verify_alpha(induced_arcs, r.decisive));
        CHECK(r.decisive.size() <= a.decisive.size());
        CHECK(r.rank == a.rank);
    }
}

TEST_CASE("verify_alpha_on checks a board against a decisive list") {
    Board b(5);
    const std::vector<Arc> d{{0, 1}, {2, 3}};
    for (const Arc& a : closure(d)) b.direct(a);
    b.direct({4, 0});  // outside the vertex set below
    VertexSet vs = VertexSet::full(5);
    vs.erase(4);
    CHECK(verify_alpha_on(b, vs, d));
    CHECK_FALSE(verify_alpha_on(b, VertexSet::full(5), d));
    const std::vector<Arc> shorter{{0, 1}};
    CHECK_FALSE(verify_alpha_on(b, vs, shorter));
}
