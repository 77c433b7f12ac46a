#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace isk4 {

using Vertex = int;

/// Maximum number of vertices a Graph can hold.
inline constexpr int kMaxVertices = 128;

/// Fixed-width set of vertex indices in [0, 128), stored as two 64-bit lanes.
class VertexSet {
public:
  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  static VertexSet range(int n) {
    VertexSet s;
    if (n >= 64) {
      s.lanes_[0] = ~std::uint64_t{0};
      s.lanes_[1] = n >= 128 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n - 64)) - 1;
    } else if (n > 0) {
      s.lanes_[0] = (std::uint64_t{1} << n) - 1;
    }
    return s;
  }

  static VertexSet from_lanes(std::uint64_t lo, std::uint64_t hi) {
    VertexSet s;
    s.lanes_ = {lo, hi};
    return s;
  }

  static VertexSet from_vector(const std::vector<Vertex>& vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  bool contains(Vertex v) const { return (lanes_[v >> 6] >> (v & 63)) & 1U; }
  void insert(Vertex v) { lanes_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { lanes_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  VertexSet with(Vertex v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }
  VertexSet without(Vertex v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

  int size() const { return std::popcount(lanes_[0]) + std::popcount(lanes_[1]); }
  bool empty() const { return (lanes_[0] | lanes_[1]) == 0; }
  bool intersects(const VertexSet& o) const {
    return ((lanes_[0] & o.lanes_[0]) | (lanes_[1] & o.lanes_[1])) != 0;
  }
  bool subset_of(const VertexSet& o) const {
    return (lanes_[0] & ~o.lanes_[0]) == 0 && (lanes_[1] & ~o.lanes_[1]) == 0;
  }

  /// Smallest member, or -1 when empty.
  Vertex first() const {
    if (lanes_[0]) return std::countr_zero(lanes_[0]);
    if (lanes_[1]) return 64 + std::countr_zero(lanes_[1]);
    return -1;
  }

  /// Largest member, or -1 when empty.
  Vertex last() const {
    if (lanes_[1]) return 127 - std::countl_zero(lanes_[1]);
    if (lanes_[0]) return 63 - std::countl_zero(lanes_[0]);
    return -1;
  }

  std::uint64_t lane(int i) const { return lanes_[i]; }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

  VertexSet operator&(const VertexSet& o) const {
    return from_lanes(lanes_[0] & o.lanes_[0], lanes_[1] & o.lanes_[1]);
  }
  VertexSet operator|(const VertexSet& o) const {
    return from_lanes(lanes_[0] | o.lanes_[0], lanes_[1] | o.lanes_[1]);
  }
  /// Set difference.
  VertexSet operator-(const VertexSet& o) const {
    return from_lanes(lanes_[0] & ~o.lanes_[0], lanes_[1] & ~o.lanes_[1]);
  }
  VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
  VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
  VertexSet& operator-=(const VertexSet& o) { return *this = *this - o; }

  bool operator==(const VertexSet&) const = default;

  /// Orders sets by their value as a 128-bit unsigned integer.
  bool operator<(const VertexSet& o) const {
    if (lanes_[1] != o.lanes_[1]) return lanes_[1] < o.lanes_[1];
    return lanes_[0] < o.lanes_[0];
  }

  class iterator {
  public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(std::uint64_t lo, std::uint64_t hi) : lo_(lo), hi_(hi) {}

    Vertex operator*() const {
      return lo_ ? std::countr_zero(lo_) : 64 + std::countr_zero(hi_);
    }
    iterator& operator++() {
      if (lo_)
        lo_ &= lo_ - 1;
      else
        hi_ &= hi_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator&) const = default;

  private:
    std::uint64_t lo_ = 0;
    std::uint64_t hi_ = 0;
  };

  iterator begin() const { return {lanes_[0], lanes_[1]}; }
  iterator end() const { return {}; }

private:
  std::array<std::uint64_t, 2> lanes_{0, 0};
};

}  // namespace isk4
