#include "ocg/board.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ocg {

std::string to_string(const Arc& a) {
    return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

Board::Board(int n) : n_(n) {
    if (n < 1) throw DomainError("board needs at least one vertex, got n=" + std::to_string(n));
    words_ = VertexSet::word_count(static_cast<std::size_t>(n));
    out_.assign(static_cast<std::size_t>(n) * words_, 0);
    in_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Board new_board(int n) { return Board(n); }

void Board::direct(Arc a) {
    if (!in_range(a)) throw DomainError("arc " + to_string(a) + " outside vertex range");
    if (a.is_loop()) throw DomainError("loop " + to_string(a) + " cannot be directed");
    if (bit(out_, a.tail, a.head)) throw RuleViolation("arc " + to_string(a) + " already directed");
    if (bit(out_, a.head, a.tail))
        throw RuleViolation("arc " + to_string(a) + " unavailable: reverse already directed");
    set_bit(out_, a.tail, a.head);
    set_bit(in_, a.head, a.tail);
    ++directed_;
}

std::vector<Arc> Board::directed_arcs() const {
    std::vector<Arc> arcs;
    arcs.reserve(directed_);
    for (Vertex u = 0; u < n_; ++u)
        out_neighbours(u).for_each([&](Vertex v) { arcs.push_back({u, v}); });
    return arcs;
}

VertexSet Board::undirected_partners(Vertex v) const {
    VertexSet s = VertexSet::full(static_cast<std::size_t>(n_));
    s.subtract(out_neighbours(v));
    s.subtract(in_neighbours(v));
    s.erase(v);
    return s;
}

std::vector<Arc> Board::available_arcs() const {
    std::vector<Arc> arcs;
    arcs.reserve(available_count());
    for (Vertex u = 0; u < n_; ++u)
        undirected_partners(u).for_each([&](Vertex v) { arcs.push_back({u, v}); });
    return arcs;
}

std::optional<Arc> Board::first_available() const {
    for (Vertex u = 0; u < n_; ++u) {
        const Vertex v = undirected_partners(u).first();
        if (v >= 0) return Arc{u, v};
    }
    return std::nullopt;
}

Arc Board::nth_available(std::size_t k) const {
    // Works on the raw rows: a vertex v != u is a partner of u iff neither
    // (u, v) nor (v, u) is directed.
    const std::size_t words = VertexSet::word_count(static_cast<std::size_t>(n_));
    for (Vertex u = 0; u < n_; ++u) {
        const auto out = out_row(u), in = in_row(u);
        std::size_t taken = 1;  // u itself
        for (std::size_t w = 0; w < words; ++w) taken += static_cast<std::size_t>(std::popcount(out[w] | in[w]));
        const std::size_t c = static_cast<std::size_t>(n_) - taken;
        if (k >= c) {
            k -= c;
            continue;
        }
        for (std::size_t w = 0; w < words; ++w) {
            Word free = ~(out[w] | in[w]);
            const std::size_t base = w * VertexSet::kWordBits;
            if (base + VertexSet::kWordBits > static_cast<std::size_t>(n_))
                free &= (Word{1} << (static_cast<std::size_t>(n_) - base)) - 1;
            if (static_cast<std::size_t>(u) / VertexSet::kWordBits == w)
                free &= ~(Word{1} << (static_cast<std::size_t>(u) % VertexSet::kWordBits));
            const std::size_t here = static_cast<std::size_t>(std::popcount(free));
            if (k >= here) {
                k -= here;
                continue;
            }
            for (; k > 0; --k) free &= free - 1;
            return {u, static_cast<Vertex>(base + static_cast<std::size_t>(std::countr_zero(free)))};
        }
    }
    throw DomainError("nth_available: index beyond available arc count");
}

AcyclicityResult check_acyclic(const Board& board) {
    const int n = board.n();
    // 0 = unvisited, 1 = on stack, 2 = done
    std::vector<char> colour(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<Vertex>> succ(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) succ[v] = board.out_neighbours(v).members();

    std::vector<std::pair<Vertex, std::size_t>> stack;
    for (Vertex root = 0; root < n; ++root) {
        if (colour[root]) continue;
        stack.push_back({root, 0});
        colour[root] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next == succ[v].size()) {
                colour[v] = 2;
                stack.pop_back();
                continue;
            }
            const Vertex w = succ[v][next++];
            if (colour[w] == 0) {
                colour[w] = 1;
                parent[w] = v;
                stack.push_back({w, 0});
            } else if (colour[w] == 1) {
                AcyclicityResult r{false, {}};
                for (Vertex x = v; x != w; x = parent[x]) r.cycle.push_back(x);
                r.cycle.push_back(w);
                std::reverse(r.cycle.begin(), r.cycle.end());
                return r;
            }
        }
    }
    return {};
}

std::optional<std::vector<Vertex>> topological_order(const Board& board) {
    const int n = board.n();
    std::vector<std::size_t> indeg(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) indeg[v] = board.in_neighbours(v).size();
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        if (indeg[v] == 0) order.push_back(v);
    for (std::size_t head = 0; head < order.size(); ++head) {
        board.out_neighbours(order[head]).for_each([&](Vertex w) {
            if (--indeg[w] == 0) order.push_back(w);
        });
    }
    if (order.size() != static_cast<std::size_t>(n)) return std::nullopt;
    return order;
}

std::vector<Vertex> longest_directed_path(const Board& board) {
    auto order = topological_order(board);
    if (!order) throw DomainError("longest_directed_path: directed arcs contain a cycle");
    const int n = board.n();
    // len[v] = number of vertices on the longest path starting at v
    std::vector<int> len(static_cast<std::size_t>(n), 1);
    for (auto it = order->rbegin(); it != order->rend(); ++it) {
        const Vertex v = *it;
        board.out_neighbours(v).for_each([&](Vertex w) { len[v] = std::max(len[v], len[w] + 1); });
    }
    Vertex cur = 0;
    for (Vertex v = 1; v < n; ++v)
        if (len[v] > len[cur]) cur = v;
    std::vector<Vertex> path{cur};
    while (len[cur] > 1) {
        Vertex next = -1;
        board.out_neighbours(cur).for_each([&](Vertex w) {
            if (next < 0 && len[w] == len[cur] - 1) next = w;
        });
        cur = next;
        path.push_back(cur);
    }
    return path;
}

std::vector<Arc> induced(const Board& board, const VertexSet& subset) {
    std::vector<Arc> arcs;
    subset.for_each([&](Vertex u) {
        (board.out_neighbours(u) & subset).for_each([&](Vertex v) { arcs.push_back({u, v}); });
    });
    return arcs;
}

Reachability::Reachability(const Board& board) {
    auto order = topological_order(board);
    if (!order) throw DomainError("Reachability: directed arcs contain a cycle");
    const std::size_t n = static_cast<std::size_t>(board.n());
    reach_.assign(n, VertexSet(n));
    for (auto it = order->rbegin(); it != order->rend(); ++it) {
        const Vertex v = *it;
        VertexSet& r = reach_[v];
        board.out_neighbours(v).for_each([&](Vertex w) {
            if (r.contains(w)) return;
            r |= reach_[w];
            r.insert(w);
        });
    }
}

bool creates_cycle(const Board& board, Arc e) {
    const std::size_t n = static_cast<std::size_t>(board.n());
    VertexSet seen(n), frontier(n);
    seen.insert(e.head);
    frontier.insert(e.head);
    while (!frontier.empty()) {
        if (frontier.contains(e.tail)) return true;
        VertexSet next(n);
        frontier.for_each([&](Vertex v) { next |= board.out_neighbours(v); });
        next.subtract(seen);
        seen |= next;
        frontier = std::move(next);
    }
    return false;
}

ThreatCheck find_threat(const Board& board) {
    if (!topological_order(board)) return {false, std::nullopt};
    const Reachability reach(board);
    // (u, v) available closes a cycle iff v ~> u. Scan each v's undirected
    // partners against the set of vertices it reaches.
    for (Vertex v = 0; v < board.n(); ++v) {
        const VertexSet hit = reach.reach(v) & board.undirected_partners(v);
        const Vertex u = hit.first();
        if (u >= 0) return {true, Arc{u, v}};
    }
    return {};
}

}  // namespace ocg
