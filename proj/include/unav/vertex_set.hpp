#pragma once

#include "unav/errors.hpp"

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace unav {

using Vertex = std::uint32_t;

constexpr std::size_t kMaxVertices = 4096;

// Dense set of vertex ids over a fixed universe 0..universe-1, stored as
// 64-bit words. Set operations require both operands to share the universe.
class VertexSet {
public:
    static constexpr Vertex npos = static_cast<Vertex>(-1);

    VertexSet() : universe_(0) {}

    explicit VertexSet(std::size_t universe) : universe_(universe) {
        if (universe > kMaxVertices) {
            throw TooLarge("universe " + std::to_string(universe) + " exceeds max " +
                           std::to_string(kMaxVertices));
        }
        words_.resize((universe + 63) / 64, 0);
    }

    VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
        : VertexSet(universe) {
        for (Vertex v : members) insert(v);
    }

    VertexSet(std::size_t universe, const std::vector<Vertex>& members)
        : VertexSet(universe) {
        for (Vertex v : members) insert(v);
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    std::size_t universe() const { return universe_; }

    bool contains(Vertex v) const {
        return v < universe_ && (words_[v >> 6] >> (v & 63)) & 1;
    }

    void insert(Vertex v) {
        check_vertex(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void erase(Vertex v) {
        check_vertex(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    std::size_t size() const {
        std::size_t total = 0;
        for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    bool empty() const {
        for (std::uint64_t w : words_) {
            if (w != 0) return false;
        }
        return true;
    }

    void clear() {
        for (std::uint64_t& w : words_) w = 0;
    }

    VertexSet& operator&=(const VertexSet& other) {
        check_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    VertexSet& operator|=(const VertexSet& other) {
        check_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    // Set difference.
    VertexSet& operator-=(const VertexSet& other) {
        check_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet result(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) result.words_[i] = ~words_[i];
        result.trim();
        return result;
    }

    bool is_subset_of(const VertexSet& other) const {
        check_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & ~other.words_[i]) return false;
        }
        return true;
    }

    bool intersects(const VertexSet& other) const {
        check_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & other.words_[i]) return true;
        }
        return false;
    }

    std::size_t intersection_size(const VertexSet& other) const {
        check_universe(other);
        std::size_t total = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        }
        return total;
    }

    Vertex first() const { return next_from(0); }

    // Smallest member strictly greater than v, or npos.
    Vertex next(Vertex v) const { return next_from(static_cast<std::size_t>(v) + 1); }

    bool operator==(const VertexSet& other) const {
        return universe_ == other.universe_ && words_ == other.words_;
    }

    bool operator!=(const VertexSet& other) const { return !(*this == other); }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for (Vertex v : *this) out.push_back(v);
        return out;
    }

    class const_iterator {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;

        const_iterator() : set_(nullptr), current_(npos) {}
        const_iterator(const VertexSet* set, Vertex current) : set_(set), current_(current) {}

        Vertex operator*() const { return current_; }

        const_iterator& operator++() {
            current_ = set_->next(current_);
            return *this;
        }

        const_iterator operator++(int) {
            const_iterator old = *this;
            ++*this;
            return old;
        }

        bool operator==(const const_iterator& other) const { return current_ == other.current_; }
        bool operator!=(const const_iterator& other) const { return current_ != other.current_; }

    private:
        const VertexSet* set_;
        Vertex current_;
    };

    const_iterator begin() const { return const_iterator(this, first()); }
    const_iterator end() const { return const_iterator(this, npos); }

private:
    void check_vertex(Vertex v) const {
        if (v >= universe_) {
            throw InvalidVertex("vertex " + std::to_string(v) + " outside universe " +
                                std::to_string(universe_));
        }
    }

    void check_universe(const VertexSet& other) const {
        if (universe_ != other.universe_) {
            throw SizeMismatch("vertex sets over different universes (" +
                               std::to_string(universe_) + " vs " +
                               std::to_string(other.universe_) + ")");
        }
    }

    // Zeroes bits at positions >= universe in the last word.
    void trim() {
        std::size_t tail = universe_ & 63;
        if (tail != 0 && !words_.empty()) {
            words_.back() &= (std::uint64_t{1} << tail) - 1;
        }
    }

    Vertex next_from(std::size_t start) const {
        if (start >= universe_) return npos;
        std::size_t w = start >> 6;
        std::uint64_t word = words_[w] >> (start & 63);
        if (word != 0) {
            return static_cast<Vertex>(start + static_cast<std::size_t>(std::countr_zero(word)));
        }
        for (++w; w < words_.size(); ++w) {
            if (words_[w] != 0) {
                return static_cast<Vertex>(w * 64 +
                                           static_cast<std::size_t>(std::countr_zero(words_[w])));
            }
        }
        return npos;
    }

    std::size_t universe_;
    std::vector<std::uint64_t> words_;
};

}  // namespace unav
