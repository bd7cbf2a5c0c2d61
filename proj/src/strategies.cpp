#include <random>
#include <stdexcept>

#include "ocg/engine.hpp"

namespace ocg {

namespace {

Arc first_or_throw(const Board& board) {
    const std::optional<Arc> a = board.first_available();
    if (!a) throw InvariantError("strategy called on a board without available arcs");
    return *a;
}

// OMaker played (u, v): every available (u, w), at most b of them; the
// lexicographically smallest available arc when there is none.
std::vector<Arc> trivial_response(const Board& board, Arc e, std::int64_t b) {
    std::vector<Arc> out;
    const Vertex u = e.tail;
    board.undirected_partners(u).for_each([&](Vertex w) {
        if (static_cast<std::int64_t>(out.size()) < b) out.push_back({u, w});
    });
    if (out.empty()) out.push_back(first_or_throw(board));
    return out;
}

class LongestPathMaker final : public OMakerStrategy {
public:
    std::string name() const override { return "longest_path"; }

    Arc choose(const Board& board) override {
        const ThreatCheck th = find_threat(board);
        if (!th.board_acyclic) return first_or_throw(board);
        if (th.threat) return *th.threat;
        const std::vector<Vertex> path = longest_directed_path(board);
        VertexSet on_path(static_cast<std::size_t>(board.n()));
        for (Vertex v : path) on_path.insert(v);
        const VertexSet free_head = VertexSet(board.undirected_partners(path.back())).subtract(on_path);
        if (!free_head.empty()) return {path.back(), free_head.first()};
        const VertexSet free_tail = VertexSet(board.undirected_partners(path.front())).subtract(on_path);
        if (!free_tail.empty()) return {free_tail.first(), path.front()};
        return first_or_throw(board);
    }
};

class RandomMaker final : public OMakerStrategy {
public:
    explicit RandomMaker(std::uint64_t seed) : rng_(seed) {}
    std::string name() const override { return "random"; }

    Arc choose(const Board& board) override {
        const std::size_t count = board.available_count();
        if (count == 0) throw InvariantError("random OMaker called on a full board");
        std::uniform_int_distribution<std::size_t> pick(0, count - 1);
        return board.nth_available(pick(rng_));
    }

private:
    std::mt19937_64 rng_;
};

class TrivialBreaker final : public OBreakerStrategy {
public:
    std::string name() const override { return "trivial"; }
    std::vector<Arc> respond(const Board& board, Arc e, std::int64_t b) override {
        return trivial_response(board, e, b);
    }
};

// Shared machinery of the two safe-digraph breakers: keeps the witness,
// enforces the bias cap and drops to the trivial response after a failure.
class SafeBreaker : public OBreakerStrategy {
public:
    explicit SafeBreaker(std::int64_t b) : b_(b) {}

    const SafeWitness* witness() const override { return failure_ || !w_ ? nullptr : &*w_; }
    std::optional<std::string> failure() const override { return failure_; }

    std::vector<Arc> respond(const Board& board, Arc e, std::int64_t b) override {
        ++round_;
        if (!w_ && !failure_) {
            if (b != b_) fail("strategy built for b = " + std::to_string(b_) + " but played at b = " + std::to_string(b));
            else if (b_ < 3) fail("bias below 3");
            else start(board.n());
            if (!failure_) w_ = initial_witness(board.n());
        }
        if (failure_) return trivial_response(board, e, b);
        Board work = board;
        Transition t;
        try {
            t = step(work, e);
        } catch (const std::exception& ex) {
            fail(std::string("round ") + std::to_string(round_) + ": " + ex.what());
            return trivial_response(board, e, b);
        }
        if (t.arcs.empty()) {
            fail("round " + std::to_string(round_) + ": empty response");
            return trivial_response(board, e, b);
        }
        if (static_cast<std::int64_t>(t.arcs.size()) > b) {
            fail("round " + std::to_string(round_) + ": response of " + std::to_string(t.arcs.size()) +
                 " arcs exceeds b");
            return trivial_response(board, e, b);
        }
        if (!t.note.empty()) ++fallbacks_;
        w_ = std::move(t.next);
        return std::move(t.arcs);
    }

    std::size_t fallback_rounds() const override { return fallbacks_; }

protected:
    virtual void start(int n) = 0;
    virtual Transition step(Board& work, Arc e) = 0;

    void fail(std::string why) {
        if (!failure_) failure_ = std::move(why);
    }

    std::int64_t b_;
    std::size_t round_ = 0;
    std::optional<SafeWitness> w_;
    std::optional<std::string> failure_;
    std::size_t fallbacks_ = 0;
};

class PaperBreaker final : public SafeBreaker {
public:
    PaperBreaker(std::int64_t b, std::int64_t B_cap) : SafeBreaker(b), B_cap_(B_cap) {}
    std::string name() const override { return "paper"; }

protected:
    void start(int n) override {
        table_ = schedule_rows(b_);
        if (n > table_->terminal_s() + b_)
            fail("out of regime: n = " + std::to_string(n) + " > s_horizon + b = " +
                 std::to_string(table_->terminal_s() + b_) + " (required_bias(n, " + std::to_string(B_cap_) +
                 ") = " + std::to_string(required_bias(n, B_cap_)) + ")");
    }
    Transition step(Board& work, Arc e) override { return respond_scheduled(work, *w_, e, *table_, round_); }

private:
    std::int64_t B_cap_;
    std::optional<ScheduleTable> table_;
};

class GreedyBreaker final : public SafeBreaker {
public:
    using SafeBreaker::SafeBreaker;
    std::string name() const override { return "greedy"; }

protected:
    void start(int n) override { n_ = n; }

    Transition step(Board& work, Arc e) override {
        const SafeWitness& w = *w_;
        const auto s = static_cast<std::int64_t>(w.s);
        const auto d = static_cast<std::int64_t>(w.delta);
        const auto i = static_cast<std::int64_t>(w.i);
        if (s < n_ - b_ || s == 0) {
            const std::int64_t x = max_affordable_x(b_, 0, s, d, i + 1);
            if (x >= 0 && x + s > 0) {
                TransitionParams pr{static_cast<std::size_t>(x), 0, 0};
                if (eval_Q(x, 1, s, d, i + 1) <= b_) {
                    pr.p = static_cast<int>(d);
                    pr.q = 1 - static_cast<int>(d);
                }
                return respond_grow(work, w, e, pr);
            }
            if (s == 0) throw RegimeError("no affordable growth from s = 0");
            fail("growth stalled at s = " + std::to_string(s) + " < n - b = " + std::to_string(n_ - b_));
        }
        return respond_maintain(work, w, e);
    }

private:
    std::int64_t n_ = 0;
};

}  // namespace

std::unique_ptr<OMakerStrategy> omaker_longest_path() { return std::make_unique<LongestPathMaker>(); }
std::unique_ptr<OMakerStrategy> omaker_random(std::uint64_t seed) { return std::make_unique<RandomMaker>(seed); }
std::unique_ptr<OBreakerStrategy> obreaker_trivial() { return std::make_unique<TrivialBreaker>(); }
std::unique_ptr<OBreakerStrategy> obreaker_paper(std::int64_t b, std::int64_t B_cap) {
    if (B_cap < 3) throw DomainError("B_cap must be at least 3");
    return std::make_unique<PaperBreaker>(b, B_cap);
}
std::unique_ptr<OBreakerStrategy> obreaker_greedy(std::int64_t b) { return std::make_unique<GreedyBreaker>(b); }

const std::vector<std::string>& omaker_ids() {
    static const std::vector<std::string> ids{"longest_path", "random"};
    return ids;
}
const std::vector<std::string>& obreaker_ids() {
    static const std::vector<std::string> ids{"trivial", "paper", "greedy"};
    return ids;
}

std::unique_ptr<OMakerStrategy> make_omaker(const std::string& id, std::uint64_t seed) {
    if (id == "longest_path") return omaker_longest_path();
    if (id == "random") return omaker_random(seed);
    throw DomainError("unknown OMaker strategy '" + id + "'");
}

std::unique_ptr<OBreakerStrategy> make_obreaker(const std::string& id, std::int64_t b, std::int64_t B_cap) {
    if (id == "trivial") return obreaker_trivial();
    if (id == "paper") return obreaker_paper(b, B_cap);
    if (id == "greedy") return obreaker_greedy(b);
    throw DomainError("unknown OBreaker strategy '" + id + "'");
}

}  // namespace ocg
