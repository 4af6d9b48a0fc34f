#include "cliquebounds/vertex_set.hpp"

#include <string>

#include "cliquebounds/error.hpp"

namespace cliquebounds {
namespace {

constexpr std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

void require_same_universe(const VertexSet& a, const VertexSet& b) {
  if (a.universe() != b.universe()) {
    throw PreconditionError("vertex sets over different universes (" +
                            std::to_string(a.universe()) + " vs " +
                            std::to_string(b.universe()) + ")");
  }
}

}  // namespace

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.trim();
  return s;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

bool VertexSet::contains(Vertex v) const noexcept {
  return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1U) != 0;
}

void VertexSet::insert(Vertex v) {
  check(v);
  words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v) {
  check(v);
  words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::inverted() const {
  VertexSet s(*this);
  for (auto& w : s.words_) w = ~w;
  s.trim();
  return s;
}

bool VertexSet::intersects(const VertexSet& other) const {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

Vertex VertexSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return universe_;
}

Vertex VertexSet::next(Vertex v) const noexcept {
  Vertex start = v + 1;
  if (start >= universe_) return universe_;
  std::size_t w = start / 64;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start % 64));
  while (true) {
    if (bits != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w == words_.size()) return universe_;
    bits = words_[w];
  }
}

void VertexSet::check(Vertex v) const {
  if (v >= universe_) {
    throw PreconditionError("vertex " + std::to_string(v) + " outside 0.." +
                            std::to_string(universe_) + "-1");
  }
}

void VertexSet::trim() noexcept {
  if (universe_ % 64 != 0 && !words_.empty())
    words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
}

}  // namespace cliquebounds
