#include "digicon/graph.hpp"

#include "digicon/errors.hpp"

#include <algorithm>
#include <bit>

namespace digicon {

namespace {

constexpr std::size_t word_bits = 64;

std::size_t words_for(std::size_t n) { return (n + word_bits - 1) / word_bits; }

} // namespace

VertexSet::VertexSet(std::size_t universe_order)
    : universe_(universe_order), words_(words_for(universe_order), 0) {}

VertexSet::VertexSet(std::size_t universe_order, std::span<const Vertex> members)
    : VertexSet(universe_order) {
    for (Vertex v : members)
        insert(v);
}

VertexSet VertexSet::full(std::size_t universe_order) {
    VertexSet s(universe_order);
    for (std::size_t w = 0; w < s.words_.size(); ++w)
        s.words_[w] = ~std::uint64_t{0};
    if (const auto tail = universe_order % word_bits; tail != 0)
        s.words_.back() = (std::uint64_t{1} << tail) - 1;
    return s;
}

VertexSet VertexSet::from_mask(std::size_t universe_order, std::uint64_t mask) {
    if (universe_order > word_bits)
        throw InvalidParameter("from_mask needs a universe of at most 64 vertices");
    if (universe_order < word_bits && (mask >> universe_order) != 0)
        throw InvalidParameter("mask has bits outside the universe");
    VertexSet s(universe_order);
    if (!s.words_.empty())
        s.words_[0] = mask;
    return s;
}

void VertexSet::check_vertex(Vertex v) const {
    if (v >= universe_)
        throw InvalidParameter("vertex " + std::to_string(v) + " outside universe of order " +
                               std::to_string(universe_));
}

void VertexSet::check_universe(const VertexSet& other) const {
    if (other.universe_ != universe_)
        throw InvalidParameter("vertex sets over different universes (" + std::to_string(universe_) +
                               " vs " + std::to_string(other.universe_) + ")");
}

bool VertexSet::contains(Vertex v) const {
    check_vertex(v);
    return (words_[v / word_bits] >> (v % word_bits)) & 1u;
}

void VertexSet::insert(Vertex v) {
    check_vertex(v);
    words_[v / word_bits] |= std::uint64_t{1} << (v % word_bits);
}

void VertexSet::erase(Vertex v) {
    check_vertex(v);
    words_[v / word_bits] &= ~(std::uint64_t{1} << (v % word_bits));
}

std::size_t VertexSet::size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool VertexSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (std::size_t w = 0; w < words_.size(); ++w) {
        for (auto bits = words_[w]; bits != 0; bits &= bits - 1)
            out.push_back(static_cast<Vertex>(w * word_bits + std::countr_zero(bits)));
    }
    return out;
}

std::uint64_t VertexSet::to_mask() const {
    if (universe_ > word_bits)
        throw InvalidParameter("to_mask needs a universe of at most 64 vertices");
    return words_.empty() ? 0 : words_[0];
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    check_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & ~other.words_[w])
            return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
    check_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & other.words_[w])
            return true;
    return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    check_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] |= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    check_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] &= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    check_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] &= ~other.words_[w];
    return *this;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0)
        return c;
    for (std::size_t w = a.words_.size(); w-- > 0;) {
        if (auto c = a.words_[w] <=> b.words_[w]; c != 0)
            return c;
    }
    return std::strong_ordering::equal;
}

std::string VertexSet::to_json() const {
    std::string out = "[";
    bool first = true;
    for (Vertex v : members()) {
        if (!first)
            out += ',';
        out += std::to_string(v);
        first = false;
    }
    out += ']';
    return out;
}

} // namespace digicon
