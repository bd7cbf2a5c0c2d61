#include "ocg/engine.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace ocg {

std::string to_string(Player p) { return p == Player::OMaker ? "omaker" : "obreaker"; }

std::size_t GameRecord::max_response() const {
    std::size_t m = 0;
    for (const RoundLog& r : rounds) m = std::max(m, r.ob.size());
    return m;
}

std::optional<std::string> check_obreaker_move(const Board& board, const std::vector<Arc>& arcs, std::int64_t b) {
    if (arcs.empty()) return "OBreaker must direct at least one arc";
    if (static_cast<std::int64_t>(arcs.size()) > b)
        return "OBreaker directed " + std::to_string(arcs.size()) + " arcs with bias " + std::to_string(b);
    std::set<std::pair<Vertex, Vertex>> used;
    for (const Arc& a : arcs) {
        if (!board.is_available(a)) return "arc " + to_string(a) + " is not available";
        if (!used.insert(std::minmax(a.tail, a.head)).second)
            return "edge of " + to_string(a) + " directed twice in one move";
    }
    return std::nullopt;
}

GameRecord play_game(int n, std::int64_t b, OMakerStrategy& om, OBreakerStrategy& ob, bool verify,
                     std::uint64_t seed, const RoundObserver& observer) {
    if (n < 2) throw DomainError("play_game needs n >= 2");
    if (b < 1) throw DomainError("play_game needs b >= 1");
    GameRecord rec;
    rec.n = n;
    rec.b = b;
    rec.omaker = om.name();
    rec.obreaker = ob.name();
    rec.seed = seed;

    Board board(n);
    auto lose = [&](Player who, std::size_t round, std::string why) {
        rec.violation = Violation{who, round, std::move(why)};
        rec.winner = who == Player::OMaker ? Player::OBreaker : Player::OMaker;
    };

    for (std::size_t round = 1; board.available_count() > 0; ++round) {
        RoundLog log;
        log.om = om.choose(board);
        if (!board.is_available(log.om)) {
            rec.rounds.push_back(log);
            lose(Player::OMaker, round, "arc " + to_string(log.om) + " is not available");
            break;
        }
        board.direct(log.om);
        if (board.available_count() == 0) {
            rec.rounds.push_back(std::move(log));
            break;
        }
        log.ob = ob.respond(board, log.om, b);
        if (auto bad = check_obreaker_move(board, log.ob, b)) {
            rec.rounds.push_back(std::move(log));
            lose(Player::OBreaker, round, *bad);
            break;
        }
        for (const Arc& a : log.ob) board.direct(a);
        if (verify)
            if (const SafeWitness* w = ob.witness()) log.safe = verify_safe(board, *w);
        rec.rounds.push_back(std::move(log));
        if (observer) observer(round, board, ob);
    }
    if (ob.failure()) rec.failure = *ob.failure();
    if (!rec.violation) rec.winner = winner_of(board);
    return rec;
}

GameRecord play_game(int n, std::int64_t b, const std::string& omaker, const std::string& obreaker, bool verify,
                     std::uint64_t seed, std::int64_t B_cap) {
    auto om = make_omaker(omaker, seed);
    auto ob = make_obreaker(obreaker, b, B_cap);
    return play_game(n, b, *om, *ob, verify, seed);
}

}  // namespace ocg
