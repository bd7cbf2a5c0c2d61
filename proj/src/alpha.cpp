#include "ocg/alpha.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

namespace ocg {

std::set<Vertex> AlphaStructure::tails() const {
    std::set<Vertex> s;
    for (const Arc& e : decisive) s.insert(e.tail);
    return s;
}

std::set<Vertex> AlphaStructure::heads() const {
    std::set<Vertex> s;
    for (const Arc& e : decisive) s.insert(e.head);
    return s;
}

ArcSet closure(std::span<const Arc> decisive) {
    ArcSet out;
    for (std::size_t i = 0; i < decisive.size(); ++i) {
        for (std::size_t j = i; j < decisive.size(); ++j) {
            const Arc a{decisive[i].tail, decisive[j].head};
            if (a.is_loop())
                throw DomainError("decisive list closes a loop at vertex " + std::to_string(a.tail));
            out.insert(a);
        }
    }
    for (const Arc& a : out)
        if (out.contains(a.reversed()))
            throw DomainError("decisive list closure contains both " + to_string(a) + " and " +
                              to_string(a.reversed()));
    return out;
}

bool verify_alpha(const ArcSet& arcs, std::span<const Arc> decisive) {
    try {
        return closure(decisive) == arcs;
    } catch (const DomainError&) {
        return false;
    }
}

namespace {

// 1-based positions: first index where v is a tail (k+1 if never) and last
// index where v is a head (0 if never). (x, y) is in the closure iff
// first_tail(x) <= last_head(y).
struct PositionIndex {
    std::map<Vertex, std::size_t> first_tail;
    std::map<Vertex, std::size_t> last_head;
    std::size_t k = 0;

    explicit PositionIndex(std::span<const Arc> decisive) : k(decisive.size()) {
        for (std::size_t i = 0; i < k; ++i) {
            first_tail.try_emplace(decisive[i].tail, i + 1);
            last_head[decisive[i].head] = i + 1;
        }
    }
    std::size_t tail_pos(Vertex v) const {
        auto it = first_tail.find(v);
        return it == first_tail.end() ? k + 1 : it->second;
    }
    std::size_t head_pos(Vertex v) const {
        auto it = last_head.find(v);
        return it == last_head.end() ? 0 : it->second;
    }
    bool in_closure(Arc a) const { return tail_pos(a.tail) <= head_pos(a.head); }
};

}  // namespace

AlphaExtension extend_alpha(std::size_t vertex_count, const AlphaStructure& a, Arc e) {
    if (vertex_count < 2) throw DomainError("extend_alpha needs at least two vertices");
    if (e.is_loop()) throw DomainError("extend_alpha: loop " + to_string(e));
    const auto& d = a.decisive;
    const std::size_t k = d.size();
    const PositionIndex idx(d);
    if (idx.in_closure(e)) throw RuleViolation("extend_alpha: " + to_string(e) + " already present");
    if (idx.in_closure(e.reversed()))
        throw RuleViolation("extend_alpha: reverse of " + to_string(e) + " present");

    const Vertex u = e.tail;
    const Vertex v = e.head;
    // Admissible insertion positions m (e goes after the first m arcs):
    // last_head(u) <= m < first_tail(v).
    const std::size_t lo = idx.head_pos(u);
    const std::size_t hi = idx.tail_pos(v) - 1;
    if (lo > hi) throw InvariantError("extend_alpha: no admissible insertion position");

    // new_tail[m]: distinct tails among e_1..e_m that would need an arc into v.
    // new_head[m]: distinct heads among e_{m+1}..e_k that u would need to reach.
    std::vector<std::size_t> new_tail(k + 1, 0), new_head(k + 2, 0);
    for (std::size_t i = 1; i <= k; ++i) {
        const Vertex t = d[i - 1].tail;
        const bool first = idx.tail_pos(t) == i;
        const bool counts = first && t != u && !idx.in_closure({t, v});
        new_tail[i] = new_tail[i - 1] + (counts ? 1 : 0);
    }
    for (std::size_t j = k; j >= 1; --j) {
        const Vertex h = d[j - 1].head;
        const bool last = idx.head_pos(h) == j;
        const bool counts = last && h != v && !idx.in_closure({u, h});
        new_head[j] = new_head[j + 1] + (counts ? 1 : 0);
    }

    std::size_t best_m = hi;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t m = hi + 1; m-- > lo;) {
        const std::size_t cost = new_tail[m] + new_head[m + 1];
        if (cost < best) {
            best = cost;
            best_m = m;
        }
    }

    AlphaExtension out;
    out.position = best_m;
    for (std::size_t i = 1; i <= best_m; ++i) {
        const Vertex t = d[i - 1].tail;
        if (idx.tail_pos(t) == i && t != u && !idx.in_closure({t, v})) out.forced.push_back({t, v});
    }
    for (std::size_t j = best_m + 1; j <= k; ++j) {
        const Vertex h = d[j - 1].head;
        if (idx.head_pos(h) == j && h != v && !idx.in_closure({u, h})) out.forced.push_back({u, h});
    }
    out.next.rank = a.rank + 1;
    out.next.decisive.reserve(k + 1);
    out.next.decisive.insert(out.next.decisive.end(), d.begin(), d.begin() + static_cast<std::ptrdiff_t>(best_m));
    out.next.decisive.push_back(e);
    out.next.decisive.insert(out.next.decisive.end(), d.begin() + static_cast<std::ptrdiff_t>(best_m), d.end());

    const std::size_t bound = std::min(a.rank, vertex_count - 2);
    if (out.forced.size() > bound)
        throw InvariantError("extend_alpha: forced set of size " + std::to_string(out.forced.size()) +
                             " exceeds bound " + std::to_string(bound));
    return out;
}

bool verify_alpha_on(const Board& board, const VertexSet& vertices, std::span<const Arc> decisive) {
    const std::size_t n = static_cast<std::size_t>(board.n());
    for (const Arc& e : decisive)
        if (!vertices.contains(e.tail) || !vertices.contains(e.head)) return false;

    // expected out-row of each tail: heads of e_j for j >= first_tail
    std::vector<int> first_tail(n, -1);
    for (std::size_t i = 0; i < decisive.size(); ++i)
        if (first_tail[decisive[i].tail] < 0) first_tail[decisive[i].tail] = static_cast<int>(i);

    std::vector<VertexSet> expected(n);
    VertexSet suffix(n);
    for (std::size_t j = decisive.size(); j-- > 0;) {
        suffix.insert(decisive[j].head);
        const Vertex t = decisive[j].tail;
        if (first_tail[t] == static_cast<int>(j)) expected[t] = suffix;
    }

    bool ok = true;
    vertices.for_each([&](Vertex u) {
        if (!ok) return;
        const VertexSet actual = board.out_neighbours(u) & vertices;
        if (first_tail[u] >= 0) ok = actual == expected[u];
        else ok = actual.empty();
    });
    return ok;
}

AlphaStructure restrict_alpha(const AlphaStructure& a, const VertexSet& removed) {
    const auto& d = a.decisive;
    const std::size_t k = d.size();
    // left[j]: latest index <= j with a kept tail; right[j]: earliest index >= j with a kept head
    std::vector<long> left(k, -1), right(k, -1);
    long last = -1;
    for (std::size_t j = 0; j < k; ++j) {
        if (!removed.contains(d[j].tail)) last = static_cast<long>(j);
        left[j] = last;
    }
    last = -1;
    for (std::size_t j = k; j-- > 0;) {
        if (!removed.contains(d[j].head)) last = static_cast<long>(j);
        right[j] = last;
    }
    AlphaStructure out;
    out.rank = a.rank;
    for (std::size_t j = 0; j < k; ++j) {
        if (left[j] < 0 || right[j] < 0) continue;
        const Arc arc{d[static_cast<std::size_t>(left[j])].tail, d[static_cast<std::size_t>(right[j])].head};
        if (!out.decisive.empty() && out.decisive.back() == arc) continue;
        out.decisive.push_back(arc);
    }
    return out;
}

}  // namespace ocg
