#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "ocg/board.hpp"
#include "ocg/types.hpp"
#include "ocg/vertex_set.hpp"

namespace ocg {

using ArcSet = std::set<Arc>;

// An alpha-structure given by its ordered decisive arcs e_1..e_k. The arc set
// it stands for is closure(decisive) = {(e_i.tail, e_j.head) : i <= j}.
// `rank` is tracked separately and may exceed decisive.size().
struct AlphaStructure {
    std::vector<Arc> decisive;
    std::size_t rank = 0;

    std::set<Vertex> tails() const;
    std::set<Vertex> heads() const;

    friend bool operator==(const AlphaStructure&, const AlphaStructure&) = default;
};

// Throws DomainError when the closure would contain a loop or both (u,v) and (v,u).
ArcSet closure(std::span<const Arc> decisive);

// True iff `arcs` equals closure(decisive) exactly. Ill-formed lists give false.
bool verify_alpha(const ArcSet& arcs, std::span<const Arc> decisive);

struct AlphaExtension {
    // Arcs other than e added to keep the closure property, in directing order.
    std::vector<Arc> forced;
    AlphaStructure next;
    // Number of old decisive arcs placed before e in the new order.
    std::size_t position = 0;
};

// Inserts e into the decisive order so that closure(next.decisive) =
// closure(a.decisive) + e + forced, with forced made of arcs available before
// the call and |forced| <= min(a.rank, vertex_count - 2). Among admissible
// positions the one with the fewest forced arcs wins; ties go to the latest
// position. Throws RuleViolation when e is not available w.r.t. the closure.
AlphaExtension extend_alpha(std::size_t vertex_count, const AlphaStructure& a, Arc e);

// Board-level check: the directed arcs of `board` with both ends in `vertices`
// are exactly closure(decisive), and all decisive arcs lie inside `vertices`.
bool verify_alpha_on(const Board& board, const VertexSet& vertices, std::span<const Arc> decisive);

// Decisive list for the structure induced on the vertices not in `removed`.
// The result has at most as many decisive arcs as the input; rank is kept.
AlphaStructure restrict_alpha(const AlphaStructure& a, const VertexSet& removed);

}  // namespace ocg
