#include "ocg/record.hpp"

namespace ocg {

using nlohmann::json;

namespace {

json arc_json(Arc a) { return json::array({a.tail, a.head}); }

Arc arc_from(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw DomainError("arc must be a [tail, head] pair of integers");
    return {j[0].get<Vertex>(), j[1].get<Vertex>()};
}

Player player_from(const std::string& s) {
    if (s == "omaker") return Player::OMaker;
    if (s == "obreaker") return Player::OBreaker;
    throw DomainError("unknown player '" + s + "'");
}

}  // namespace

json to_json(const GameRecord& rec) {
    json rounds = json::array();
    for (const RoundLog& r : rec.rounds) {
        json jr{{"om", arc_json(r.om)}};
        json ob = json::array();
        for (const Arc& a : r.ob) ob.push_back(arc_json(a));
        jr["ob"] = std::move(ob);
        if (r.safe) jr["safe"] = *r.safe;
        rounds.push_back(std::move(jr));
    }
    json j{{"n", rec.n},
           {"b", rec.b},
           {"omaker", rec.omaker},
           {"obreaker", rec.obreaker},
           {"seed", rec.seed},
           {"rounds", std::move(rounds)},
           {"winner", to_string(rec.winner)}};
    if (rec.failure) j["failure"] = *rec.failure;
    if (rec.violation)
        j["violation"] = {{"player", to_string(rec.violation->player)},
                          {"round", rec.violation->round},
                          {"reason", rec.violation->reason}};
    return j;
}

GameRecord record_from_json(const json& j) {
    try {
        GameRecord rec;
        rec.n = j.at("n").get<int>();
        rec.b = j.at("b").get<std::int64_t>();
        rec.omaker = j.at("omaker").get<std::string>();
        rec.obreaker = j.at("obreaker").get<std::string>();
        rec.seed = j.value("seed", std::uint64_t{0});
        for (const json& jr : j.at("rounds")) {
            RoundLog r;
            r.om = arc_from(jr.at("om"));
            for (const json& a : jr.at("ob")) r.ob.push_back(arc_from(a));
            if (jr.contains("safe")) r.safe = jr.at("safe").get<bool>();
            rec.rounds.push_back(std::move(r));
        }
        rec.winner = player_from(j.at("winner").get<std::string>());
        if (j.contains("failure")) rec.failure = j.at("failure").get<std::string>();
        if (j.contains("violation")) {
            const json& v = j.at("violation");
            rec.violation = Violation{player_from(v.at("player").get<std::string>()), v.at("round").get<std::size_t>(),
                                      v.value("reason", std::string{})};
        }
        return rec;
    } catch (const json::exception& ex) {
        throw DomainError(std::string("malformed game record: ") + ex.what());
    }
}

ReplayResult replay(const GameRecord& rec) {
    ReplayResult out;
    if (rec.n < 2 || rec.b < 1) {
        out.legal = false;
        out.reason = "record needs n >= 2 and b >= 1";
        return out;
    }
    Board board(rec.n);
    auto illegal = [&](Player who, std::size_t round, const std::string& why) {
        out.legal = false;
        out.reason = to_string(who) + " in round " + std::to_string(round) + ": " + why;
        out.winner = who == Player::OMaker ? Player::OBreaker : Player::OMaker;
        out.final_board = board;
        return out;
    };
    for (std::size_t k = 0; k < rec.rounds.size(); ++k) {
        const RoundLog& r = rec.rounds[k];
        const std::size_t round = k + 1;
        if (board.available_count() == 0) return illegal(Player::OMaker, round, "move after the game ended");
        if (!board.is_available(r.om)) return illegal(Player::OMaker, round, "arc " + to_string(r.om) + " is not available");
        board.direct(r.om);
        if (board.available_count() == 0) {
            if (!r.ob.empty()) return illegal(Player::OBreaker, round, "move after the game ended");
            continue;
        }
        if (auto bad = check_obreaker_move(board, r.ob, rec.b)) return illegal(Player::OBreaker, round, *bad);
        for (const Arc& a : r.ob) board.direct(a);
    }
    if (board.available_count() != 0) {
        out.legal = false;
        out.reason = "move log ends before the tournament is complete";
    }
    out.winner = winner_of(board);
    out.final_board = std::move(board);
    return out;
}

RecordCheck verify_record(const GameRecord& rec) {
    RecordCheck c;
    const ReplayResult r = replay(rec);
    if (rec.violation) {
        if (r.legal) {
            c.ok = false;
            c.reason = "record claims a violation but the log replays legally";
        } else if (r.winner != rec.winner) {
            c.ok = false;
            c.reason = "stored winner disagrees with the violation";
        }
        return c;
    }
    if (!r.legal) {
        c.ok = false;
        c.reason = r.reason;
        return c;
    }
    if (r.winner != rec.winner) {
        c.ok = false;
        c.reason = "stored winner " + to_string(rec.winner) + " but replay gives " + to_string(r.winner);
    }
    return c;
}

}  // namespace ocg
