#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ocg/board.hpp"
#include "ocg/safety.hpp"

namespace ocg {

class OMakerStrategy {
public:
    virtual ~OMakerStrategy() = default;
    virtual std::string name() const = 0;
    // Called with at least one available arc; must return an available arc.
    virtual Arc choose(const Board& board) = 0;
};

class OBreakerStrategy {
public:
    virtual ~OBreakerStrategy() = default;
    virtual std::string name() const = 0;
    // `board` already contains OMaker's arc e and has at least one available
    // arc. Returns the arcs to direct, in order.
    virtual std::vector<Arc> respond(const Board& board, Arc e, std::int64_t b) = 0;
    // Current safety certificate, for strategies that keep one.
    virtual const SafeWitness* witness() const { return nullptr; }
    // Set once the strategy has left its guaranteed regime.
    virtual std::optional<std::string> failure() const { return std::nullopt; }
    // Rounds answered through a fallback construction (diagnostics).
    virtual std::size_t fallback_rounds() const { return 0; }
};

std::unique_ptr<OMakerStrategy> omaker_longest_path();
std::unique_ptr<OMakerStrategy> omaker_random(std::uint64_t seed);

std::unique_ptr<OBreakerStrategy> obreaker_trivial();
std::unique_ptr<OBreakerStrategy> obreaker_paper(std::int64_t b, std::int64_t B_cap = 10);
std::unique_ptr<OBreakerStrategy> obreaker_greedy(std::int64_t b);

// Strategy ids: "longest_path", "random" / "trivial", "paper", "greedy".
std::unique_ptr<OMakerStrategy> make_omaker(const std::string& id, std::uint64_t seed);
std::unique_ptr<OBreakerStrategy> make_obreaker(const std::string& id, std::int64_t b, std::int64_t B_cap = 10);
const std::vector<std::string>& omaker_ids();
const std::vector<std::string>& obreaker_ids();

enum class Player { OMaker, OBreaker };
std::string to_string(Player p);

struct RoundLog {
    Arc om;
    std::vector<Arc> ob;
    std::optional<bool> safe;
};

struct Violation {
    Player player = Player::OMaker;
    std::size_t round = 0;
    std::string reason;
};

struct GameRecord {
    int n = 0;
    std::int64_t b = 0;
    std::string omaker;
    std::string obreaker;
    std::uint64_t seed = 0;
    std::vector<RoundLog> rounds;
    Player winner = Player::OBreaker;
    std::optional<std::string> failure;
    std::optional<Violation> violation;

    std::size_t max_response() const;
};

// Empty when `arcs` is a legal OBreaker move on `board` with bias b, else the reason.
std::optional<std::string> check_obreaker_move(const Board& board, const std::vector<Arc>& arcs, std::int64_t b);

// Winner of a finished (or abandoned) board: OMaker iff it contains a directed cycle.
inline Player winner_of(const Board& board) { return is_acyclic(board) ? Player::OBreaker : Player::OMaker; }

// Invoked after every OBreaker move with the round number (1-based), the
// board and the strategy; used by harnesses for extra per-round checks.
using RoundObserver = std::function<void(std::size_t round, const Board&, const OBreakerStrategy&)>;

GameRecord play_game(int n, std::int64_t b, OMakerStrategy& om, OBreakerStrategy& ob, bool verify = false,
                     std::uint64_t seed = 0, const RoundObserver& observer = {});

// Convenience overload building the strategies from their ids.
GameRecord play_game(int n, std::int64_t b, const std::string& omaker, const std::string& obreaker,
                     bool verify = false, std::uint64_t seed = 0, std::int64_t B_cap = 10);

}  // namespace ocg
