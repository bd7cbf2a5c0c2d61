#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ocg/board.hpp"
#include "ocg/engine.hpp"

namespace ocg {

// All legal OBreaker moves on `board` as unordered arc sets (sorted lists):
// 1..min(b, undirected edges) distinct edges, each in either direction.
std::vector<std::vector<Arc>> obreaker_moves(const Board& board, std::int64_t b);

struct MinimaxResult {
    Player winner = Player::OBreaker;
    std::size_t positions = 0;  // distinct (board, side to move) states solved
};

// Exhaustive game-tree value of the monotone (1:b) game on K_n from the
// empty board, OMaker to move. Feasible for n <= 5.
MinimaxResult solve_game(int n, std::int64_t b);

// Same, from an arbitrary position with OMaker to move.
MinimaxResult solve_from(const Board& board, std::int64_t b);

}  // namespace ocg
