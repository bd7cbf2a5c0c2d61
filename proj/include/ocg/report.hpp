#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ocg {

// Real columns carry 12 significant digits; integers are exact.
std::string constants_header();
std::string constants_row(std::int64_t B);
std::string constants_csv(const std::vector<std::int64_t>& Bs);

const std::vector<std::int64_t>& default_constants_list();

std::string schedule_csv_closed_form(std::int64_t b);
// Ends with a "# terminal_s=...,terminal_delta=...,rounds=..." footer.
std::string schedule_csv_greedy(std::int64_t b);

}  // namespace ocg
