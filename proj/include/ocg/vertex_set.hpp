#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ocg/types.hpp"

namespace ocg {

// Fixed-universe set of vertices {0, ..., n-1} stored as 64-bit words.
// The word layout matches the rows of Board's adjacency matrix so that row
// masks can be combined with vertex sets without conversion.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_(word_count(universe), 0) {}

    static std::size_t word_count(std::size_t universe) {
        return (universe + kWordBits - 1) / kWordBits;
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (std::size_t v = 0; v < universe; ++v) s.insert(static_cast<Vertex>(v));
        return s;
    }

    static VertexSet from_words(std::size_t universe, std::span<const Word> words) {
        VertexSet s(universe);
        for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = words[w];
        return s;
    }

    std::size_t universe() const { return universe_; }
    std::span<const Word> words() const { return words_; }

    bool contains(Vertex v) const {
        return (words_[index(v)] >> offset(v)) & Word{1};
    }
    void insert(Vertex v) { words_[index(v)] |= Word{1} << offset(v); }
    void erase(Vertex v) { words_[index(v)] &= ~(Word{1} << offset(v)); }

    std::size_t size() const {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const {
        for (Word w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const VertexSet& other) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~other.words_[w]) return false;
        return true;
    }
    bool intersects(const VertexSet& other) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & other.words_[w]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
        return *this;
    }
    VertexSet& subtract(const VertexSet& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
        return *this;
    }
    VertexSet complement() const {
        VertexSet c = full(universe_);
        return c.subtract(*this);
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    // Ascending list of members.
    std::vector<Vertex> members() const {
        std::vector<Vertex> out;
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                f(static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
    }

    // Smallest member, or -1 when empty.
    Vertex first() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w])
                return static_cast<Vertex>(w * kWordBits +
                                           static_cast<std::size_t>(std::countr_zero(words_[w])));
        return -1;
    }

private:
    static std::size_t index(Vertex v) { return static_cast<std::size_t>(v) / kWordBits; }
    static unsigned offset(Vertex v) { return static_cast<unsigned>(v) % kWordBits; }

    std::size_t universe_ = 0;
    std::vector<Word> words_;
};

}  // namespace ocg
