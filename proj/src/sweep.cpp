#include "ocg/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>

#include "ocg/engine.hpp"
#include "ocg/schedule.hpp"

namespace ocg {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens(const std::string& s) {
    std::string t = s;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream in(t);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

std::int64_t to_int(const std::string& s, const std::string& key) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw DomainError("config key '" + key + "': '" + s + "' is not an integer");
    }
}

bool known(const std::vector<std::string>& ids, const std::string& id) {
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& text) {
    SweepConfig cfg;
    std::istringstream in(text);
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw DomainError("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::vector<std::string> vals = tokens(line.substr(eq + 1));
        if (key == "n") {
            cfg.n.clear();
            for (const auto& v : vals) {
                const auto n = to_int(v, key);
                if (n < 2) throw DomainError("config key 'n': values must be >= 2");
                cfg.n.push_back(static_cast<int>(n));
            }
        } else if (key == "bias") {
            if (vals.empty()) throw DomainError("config key 'bias' needs at least one rule");
            for (const auto& v : vals) resolve_bias(v, 10, 10);  // validates the rule
            cfg.bias_rules = vals;
        } else if (key == "pairs") {
            cfg.pairs.clear();
            for (const auto& v : vals) {
                const auto slash = v.find('/');
                if (slash == std::string::npos) throw DomainError("config key 'pairs': expected omaker/obreaker, got '" + v + "'");
                std::string om = v.substr(0, slash), ob = v.substr(slash + 1);
                if (!known(omaker_ids(), om)) throw DomainError("unknown OMaker strategy '" + om + "'");
                if (!known(obreaker_ids(), ob)) throw DomainError("unknown OBreaker strategy '" + ob + "'");
                cfg.pairs.emplace_back(std::move(om), std::move(ob));
            }
        } else if (key == "seeds") {
            if (vals.size() != 1) throw DomainError("config key 'seeds': expected a count or a range a..b");
            cfg.seeds.clear();
            const std::string& v = vals[0];
            if (const auto dots = v.find(".."); dots != std::string::npos) {
                const auto lo = to_int(v.substr(0, dots), key), hi = to_int(v.substr(dots + 2), key);
                if (lo < 0 || hi < lo) throw DomainError("config key 'seeds': bad range");
                for (auto s = lo; s <= hi; ++s) cfg.seeds.push_back(static_cast<std::uint64_t>(s));
            } else {
                const auto c = to_int(v, key);
                if (c < 0) throw DomainError("config key 'seeds': negative count");
                for (std::int64_t s = 0; s < c; ++s) cfg.seeds.push_back(static_cast<std::uint64_t>(s));
            }
        } else if (key == "verify") {
            if (vals.size() != 1 || (vals[0] != "true" && vals[0] != "false"))
                throw DomainError("config key 'verify': expected true or false");
            cfg.verify = vals[0] == "true";
        } else if (key == "B_cap") {
            if (vals.size() != 1) throw DomainError("config key 'B_cap': expected one integer");
            cfg.B_cap = to_int(vals[0], key);
            if (cfg.B_cap < 3) throw DomainError("config key 'B_cap' must be >= 3");
        } else if (key == "threads") {
            if (vals.size() != 1) throw DomainError("config key 'threads': expected one integer");
            const auto t = to_int(vals[0], key);
            if (t < 0) throw DomainError("config key 'threads' must be >= 0");
            cfg.threads = static_cast<unsigned>(t);
        } else {
            throw DomainError("unknown config key '" + key + "'");
        }
    }
    return cfg;
}

std::int64_t resolve_bias(const std::string& rule, int n, std::int64_t B_cap) {
    const auto colon = rule.find(':');
    const std::string name = rule.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : rule.substr(colon + 1);
    auto need_arg = [&]() {
        if (arg.empty()) throw DomainError("bias rule '" + name + "' needs an argument");
        return to_int(arg, "bias");
    };
    std::int64_t b = 0;
    if (name == "required") b = required_bias(n, arg.empty() ? B_cap : need_arg());
    else if (name == "fixed") b = need_arg();
    else if (name == "half_minus_2") b = n / 2 - 2;
    else if (name == "greedy_margin") b = static_cast<std::int64_t>(std::ceil(n / 1.300211)) + need_arg();
    else throw DomainError("unknown bias rule '" + rule + "'");
    return std::max<std::int64_t>(b, 1);
}

std::vector<SweepCell> run_sweep(const SweepConfig& cfg) {
    struct Job {
        std::size_t cell;
        std::uint64_t seed;
    };
    std::vector<SweepCell> cells;
    for (int n : cfg.n)
        for (const auto& rule : cfg.bias_rules)
            for (const auto& [om, ob] : cfg.pairs) {
                SweepCell c;
                c.n = n;
                c.bias_rule = rule;
                c.b = resolve_bias(rule, n, cfg.B_cap);
                c.omaker = om;
                c.obreaker = ob;
                cells.push_back(std::move(c));
            }
    std::vector<Job> jobs;
    for (std::size_t c = 0; c < cells.size(); ++c)
        for (auto s : cfg.seeds) jobs.push_back({c, s});

    std::mutex mu;
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
            const SweepCell& cell = cells[jobs[j].cell];
            GameRecord rec;
            std::string error;
            try {
                rec = play_game(cell.n, cell.b, cell.omaker, cell.obreaker, cfg.verify, jobs[j].seed, cfg.B_cap);
            } catch (const std::exception& ex) {
                error = ex.what();
            }
            std::lock_guard lock(mu);
            SweepCell& c = cells[jobs[j].cell];
            ++c.games;
            if (!error.empty()) {
                ++c.errors;
                if (c.first_error.empty()) c.first_error = error;
                continue;
            }
            (rec.winner == Player::OBreaker ? c.obreaker_wins : c.omaker_wins) += 1;
            if (rec.failure) ++c.failures;
            if (rec.violation) ++c.violations;
            for (const RoundLog& r : rec.rounds)
                if (r.safe && !*r.safe) ++c.unsafe_rounds;
            c.max_response = std::max(c.max_response, rec.max_response());
        }
    };
    unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs.size(), 1)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return cells;
}

std::string sweep_csv_header() {
    return "n,bias_rule,b,omaker,obreaker,games,obreaker_wins,omaker_wins,failures,violations,errors,unsafe_rounds,"
           "max_response\n";
}

std::string sweep_csv(const std::vector<SweepCell>& cells) {
    std::ostringstream out;
    out << sweep_csv_header();
    for (const SweepCell& c : cells)
        out << c.n << ',' << c.bias_rule << ',' << c.b << ',' << c.omaker << ',' << c.obreaker << ',' << c.games << ','
            << c.obreaker_wins << ',' << c.omaker_wins << ',' << c.failures << ',' << c.violations << ',' << c.errors
            << ',' << c.unsafe_rounds << ',' << c.max_response << '\n';
    return out.str();
}

}  // namespace ocg
