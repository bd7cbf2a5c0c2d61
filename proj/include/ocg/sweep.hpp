#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ocg {

// Flat key = value config, one key per line, '#' starts a comment. Lists are
// separated by spaces or commas.
//
//   n       = 50 100 200
//   bias    = required:10 fixed:12 half_minus_2 greedy_margin:2
//   pairs   = longest_path/paper random/paper
//   seeds   = 100          (seeds 0..99) or  seeds = 5..9
//   verify  = true
//   B_cap   = 10
//   threads = 0            (0: one per hardware thread)
struct SweepConfig {
    std::vector<int> n;
    std::vector<std::string> bias_rules{"required:10"};
    std::vector<std::pair<std::string, std::string>> pairs{{"longest_path", "paper"}};
    std::vector<std::uint64_t> seeds{0};
    bool verify = false;
    std::int64_t B_cap = 10;
    unsigned threads = 0;
};

// Throws DomainError on unknown keys, bad values or unknown strategy ids.
SweepConfig parse_sweep_config(const std::string& text);

// Bias for one grid cell. Rules: required:B, fixed:K, half_minus_2, greedy_margin:K.
std::int64_t resolve_bias(const std::string& rule, int n, std::int64_t B_cap);

struct SweepCell {
    int n = 0;
    std::string bias_rule;
    std::int64_t b = 0;
    std::string omaker;
    std::string obreaker;
    std::size_t games = 0;
    std::size_t obreaker_wins = 0;
    std::size_t omaker_wins = 0;
    std::size_t failures = 0;    // strategy left its regime
    std::size_t violations = 0;  // rule violations
    std::size_t errors = 0;      // exceptions while running a game
    std::size_t unsafe_rounds = 0;
    std::size_t max_response = 0;
    std::string first_error;
};

std::vector<SweepCell> run_sweep(const SweepConfig& cfg);

std::string sweep_csv_header();
std::string sweep_csv(const std::vector<SweepCell>& cells);

}  // namespace ocg
