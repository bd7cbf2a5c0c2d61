#pragma once

#include <string>

#include <json.hpp>

#include "ocg/engine.hpp"

namespace ocg {

nlohmann::json to_json(const GameRecord& rec);
// Throws DomainError on malformed input.
GameRecord record_from_json(const nlohmann::json& j);

struct ReplayResult {
    bool legal = true;
    std::string reason;
    Board final_board{1};
    Player winner = Player::OBreaker;
};

// Replays the move log from the empty board with the referee's legality rules.
ReplayResult replay(const GameRecord& rec);

struct RecordCheck {
    bool ok = true;
    std::string reason;
};

// Replay plus consistency of the stored winner and violation fields.
RecordCheck verify_record(const GameRecord& rec);

}  // namespace ocg
