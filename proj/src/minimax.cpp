#include "ocg/minimax.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace ocg {

std::vector<std::vector<Arc>> obreaker_moves(const Board& board, std::int64_t b) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < board.n(); ++u)
        for (Vertex v = u + 1; v < board.n(); ++v)
            if (board.is_available({u, v})) edges.emplace_back(u, v);
    const std::size_t m = edges.size();
    const std::size_t cap = static_cast<std::size_t>(std::min<std::int64_t>(b, static_cast<std::int64_t>(m)));
    std::vector<std::vector<Arc>> out;
    if (m > 20) throw DomainError("obreaker_moves: too many undirected edges to enumerate");
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        const auto k = static_cast<std::size_t>(std::popcount(mask));
        if (k > cap) continue;
        for (std::uint32_t dir = 0; dir < (1u << k); ++dir) {
            std::vector<Arc> move;
            std::size_t bit = 0;
            for (std::size_t e = 0; e < m; ++e) {
                if (!(mask >> e & 1u)) continue;
                const auto [u, v] = edges[e];
                move.push_back((dir >> bit & 1u) ? Arc{v, u} : Arc{u, v});
                ++bit;
            }
            std::sort(move.begin(), move.end());
            out.push_back(std::move(move));
        }
    }
    return out;
}

namespace {

class Solver {
public:
    explicit Solver(std::int64_t b) : b_(b) {}

    // true iff OMaker wins with optimal play from `board`, `maker` to move.
    bool maker_wins(Board& board, bool maker) {
        if (board.available_count() == 0) return !is_acyclic(board);
        const std::uint64_t key = encode(board) * 2 + (maker ? 1 : 0);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool result;
        if (maker) {
            result = false;
            for (const Arc& a : board.available_arcs()) {
                Board next = board;
                next.direct(a);
                if (maker_wins(next, false)) {
                    result = true;
                    break;
                }
            }
        } else {
            result = true;
            for (const auto& move : obreaker_moves(board, b_)) {
                Board next = board;
                for (const Arc& a : move) next.direct(a);
                if (!maker_wins(next, true)) {
                    result = false;
                    break;
                }
            }
        }
        memo_.emplace(key, result);
        return result;
    }

    std::size_t positions() const { return memo_.size(); }

private:
    static std::uint64_t encode(const Board& board) {
        std::uint64_t code = 0;
        for (Vertex u = 0; u < board.n(); ++u)
            for (Vertex v = u + 1; v < board.n(); ++v)
                code = code * 3 + (board.is_directed({u, v}) ? 1 : board.is_directed({v, u}) ? 2 : 0);
        return code;
    }

    std::int64_t b_;
    std::unordered_map<std::uint64_t, bool> memo_;
};

}  // namespace

MinimaxResult solve_from(const Board& board, std::int64_t b) {
    if (board.n() > 5) throw DomainError("solve_from: exhaustive search is limited to n <= 5");
    if (b < 1) throw DomainError("solve_from needs b >= 1");
    Solver solver(b);
    Board start = board;
    MinimaxResult r;
    r.winner = solver.maker_wins(start, true) ? Player::OMaker : Player::OBreaker;
    r.positions = solver.positions();
    return r;
}

MinimaxResult solve_game(int n, std::int64_t b) { return solve_from(Board(n), b); }

}  // namespace ocg
