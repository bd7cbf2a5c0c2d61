// ocg: constants, schedules and games for the biased oriented-cycle game.
//
// Exit codes: 0 success (play: OBreaker won), 1 OMaker won, 2 config error,
// 3 rule violation, 4 precision failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ocg/engine.hpp"
#include "ocg/record.hpp"
#include "ocg/report.hpp"
#include "ocg/schedule.hpp"
#include "ocg/sweep.hpp"

namespace {

enum Exit { kOk = 0, kOMakerWins = 1, kConfig = 2, kRule = 3, kPrecision = 4 };

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ocg::DomainError("cannot open '" + path + "' for writing");
    out << text;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ocg::DomainError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strategy engine and checks for the biased oriented-cycle game"};
    app.require_subcommand(1);

    std::vector<std::int64_t> Bs;
    std::string out_path;
    auto* constants = app.add_subcommand("constants", "CSV of g_B(1), horizon, terminal s values and C_B per B");
    constants->add_option("-B,--B", Bs, "values of B (>= 3); default 3 10 100 ... 1e6");
    constants->add_option("-o,--out", out_path, "output file (default stdout)");

    std::int64_t sched_b = 0;
    std::string mode = "closed-form";
    auto* schedule = app.add_subcommand("schedule", "per-round schedule for bias b");
    schedule->add_option("-b,--bias", sched_b, "bias b (>= 3)")->required();
    schedule->add_option("-m,--mode", mode, "closed-form or greedy")
        ->check(CLI::IsMember({"closed-form", "greedy"}));
    schedule->add_option("-o,--out", out_path, "output file (default stdout)");

    int n = 0;
    std::int64_t b = 0, B_cap = 10;
    std::string om = "longest_path", ob = "paper";
    std::uint64_t seed = 0;
    bool verify = false;
    auto* play = app.add_subcommand("play", "play one game and write its JSON record");
    play->add_option("-n,--n", n, "number of vertices (>= 2)")->required();
    play->add_option("-b,--bias", b, "OBreaker bias; default required_bias(n, B_cap)");
    play->add_option("--omaker", om, "longest_path or random")->check(CLI::IsMember(ocg::omaker_ids()));
    play->add_option("--obreaker", ob, "trivial, paper or greedy")->check(CLI::IsMember(ocg::obreaker_ids()));
    play->add_option("--seed", seed, "seed for randomized strategies");
    play->add_option("--B-cap", B_cap, "B used by required_bias and the paper strategy");
    play->add_flag("--verify", verify, "check the safety certificate after every OBreaker move");
    play->add_option("-o,--out", out_path, "record file (default stdout)");

    std::string config_path;
    auto* sweep = app.add_subcommand("sweep", "run a grid of games from a key = value config file");
    sweep->add_option("config", config_path, "config file")->required();
    sweep->add_option("-o,--out", out_path, "CSV file (default stdout)");

    std::string record_path;
    auto* verify_rec = app.add_subcommand("verify-record", "replay a JSON record and check its verdict");
    verify_rec->add_option("record", record_path, "record file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }

    try {
        if (*constants) {
            emit(ocg::constants_csv(Bs.empty() ? ocg::default_constants_list() : Bs), out_path);
            return kOk;
        }
        if (*schedule) {
            emit(mode == "greedy" ? ocg::schedule_csv_greedy(sched_b) : ocg::schedule_csv_closed_form(sched_b), out_path);
            return kOk;
        }
        if (*play) {
            if (n < 2) throw ocg::DomainError("n must be at least 2");
            if (b == 0) b = ocg::required_bias(n, B_cap);
            const ocg::GameRecord rec = ocg::play_game(n, b, om, ob, verify, seed, B_cap);
            emit(ocg::to_json(rec).dump() + "\n", out_path);
            std::cerr << "winner: " << ocg::to_string(rec.winner) << " after " << rec.rounds.size() << " rounds\n";
            if (rec.failure) std::cerr << "strategy failure: " << *rec.failure << "\n";
            if (rec.violation) {
                std::cerr << "rule violation by " << ocg::to_string(rec.violation->player) << " in round "
                          << rec.violation->round << ": " << rec.violation->reason << "\n";
                return kRule;
            }
            return rec.winner == ocg::Player::OMaker ? kOMakerWins : kOk;
        }
        if (*sweep) {
            const ocg::SweepConfig cfg = ocg::parse_sweep_config(slurp(config_path));
            emit(ocg::sweep_csv(ocg::run_sweep(cfg)), out_path);
            return kOk;
        }
        if (*verify_rec) {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(slurp(record_path));
            } catch (const nlohmann::json::exception& e) {
                throw ocg::DomainError(std::string("record is not valid JSON: ") + e.what());
            }
            const ocg::GameRecord rec = ocg::record_from_json(j);
            const ocg::RecordCheck check = ocg::verify_record(rec);
            if (!check.ok) {
                std::cerr << "record rejected: " << check.reason << "\n";
                return kRule;
            }
            std::cout << "record ok: winner " << ocg::to_string(rec.winner) << ", " << rec.rounds.size() << " rounds\n";
            return kOk;
        }
    } catch (const ocg::PrecisionError& e) {
        std::cerr << "precision failure: " << e.what() << "\n";
        return kPrecision;
    } catch (const ocg::RuleViolation& e) {
        std::cerr << "rule violation: " << e.what() << "\n";
        return kRule;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfig;
    }
    return kOk;
}
