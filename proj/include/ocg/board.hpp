#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ocg/types.hpp"
#include "ocg/vertex_set.hpp"

namespace ocg {

// Partially directed K_n. Every unordered pair {u, v} is in one of three
// states: undirected, directed as (u, v), or directed as (v, u). An arc is
// available when its pair is still undirected.
//
// Out- and in-adjacency are kept as bit rows so that the strategy and
// verification code can intersect neighbourhoods with vertex sets wordwise.
class Board {
public:
    using Word = VertexSet::Word;

    explicit Board(int n);

    int n() const { return n_; }

    bool is_directed(Arc a) const { return in_range(a) && bit(out_, a.tail, a.head); }
    bool is_available(Arc a) const {
        return in_range(a) && !a.is_loop() && !bit(out_, a.tail, a.head) &&
               !bit(out_, a.head, a.tail);
    }

    // Throws DomainError for loops or out-of-range vertices and RuleViolation
    // when the pair {tail, head} has already been directed either way.
    void direct(Arc a);

    std::size_t directed_count() const { return directed_; }
    std::size_t undirected_edges() const { return total_edges() - directed_; }
    std::size_t available_count() const { return 2 * undirected_edges(); }
    std::size_t total_edges() const {
        return static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1) / 2;
    }

    std::vector<Arc> directed_arcs() const;
    std::vector<Arc> available_arcs() const;
    // Lexicographically smallest available arc, if any.
    std::optional<Arc> first_available() const;
    // The k-th available arc in lexicographic order (0-based).
    Arc nth_available(std::size_t k) const;

    std::span<const Word> out_row(Vertex v) const { return row(out_, v); }
    std::span<const Word> in_row(Vertex v) const { return row(in_, v); }
    VertexSet out_neighbours(Vertex v) const { return VertexSet::from_words(n_, out_row(v)); }
    VertexSet in_neighbours(Vertex v) const { return VertexSet::from_words(n_, in_row(v)); }
    // Vertices w such that {v, w} is still undirected.
    VertexSet undirected_partners(Vertex v) const;

    friend bool operator==(const Board&, const Board&) = default;

private:
    bool in_range(Arc a) const {
        return a.tail >= 0 && a.head >= 0 && a.tail < n_ && a.head < n_;
    }
    std::span<const Word> row(const std::vector<Word>& m, Vertex v) const {
        return {m.data() + static_cast<std::size_t>(v) * words_, words_};
    }
    bool bit(const std::vector<Word>& m, Vertex r, Vertex c) const {
        const std::size_t idx = static_cast<std::size_t>(r) * words_ +
                                static_cast<std::size_t>(c) / VertexSet::kWordBits;
        return (m[idx] >> (static_cast<unsigned>(c) % VertexSet::kWordBits)) & Word{1};
    }
    void set_bit(std::vector<Word>& m, Vertex r, Vertex c) {
        const std::size_t idx = static_cast<std::size_t>(r) * words_ +
                                static_cast<std::size_t>(c) / VertexSet::kWordBits;
        m[idx] |= Word{1} << (static_cast<unsigned>(c) % VertexSet::kWordBits);
    }

    int n_ = 0;
    std::size_t words_ = 0;
    std::size_t directed_ = 0;
    std::vector<Word> out_;
    std::vector<Word> in_;
};

Board new_board(int n);

struct AcyclicityResult {
    bool acyclic = true;
    // A directed cycle v0 -> v1 -> ... -> v0 (first vertex not repeated) when cyclic.
    std::vector<Vertex> cycle;
};

AcyclicityResult check_acyclic(const Board& board);
inline bool is_acyclic(const Board& board) { return check_acyclic(board).acyclic; }

// Topological order of the directed arcs, or nullopt when cyclic.
std::optional<std::vector<Vertex>> topological_order(const Board& board);

// Maximum-length directed path among the directed arcs; lexicographically
// smallest vertex sequence among maximum-length paths. Throws DomainError when
// the directed arcs contain a cycle.
std::vector<Vertex> longest_directed_path(const Board& board);

// Directed arcs with both endpoints in `subset`, sorted.
std::vector<Arc> induced(const Board& board, const VertexSet& subset);

// Reachability among directed arcs of an acyclic board: reach(v) is the set of
// vertices w != v with a directed path v ~> w.
class Reachability {
public:
    explicit Reachability(const Board& board);

    bool reaches(Vertex from, Vertex to) const { return reach_[from].contains(to); }
    const VertexSet& reach(Vertex v) const { return reach_[v]; }

private:
    std::vector<VertexSet> reach_;
};

struct ThreatCheck {
    bool board_acyclic = true;
    // An available arc e such that board + e contains a directed cycle.
    std::optional<Arc> threat;

    bool safe() const { return board_acyclic && !threat; }
};

// True iff directing the available arc e would close a directed cycle, i.e.
// e.head already reaches e.tail. Bitset search, O(n^2 / 64).
bool creates_cycle(const Board& board, Arc e);

// Exhaustive check that the board is acyclic and that no single available arc
// closes a directed cycle.
ThreatCheck find_threat(const Board& board);

}  // namespace ocg
