#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ekr {

inline constexpr int kMaxVertices = 128;

/// Fixed-width set of vertex indices in [0, 128).
///
/// Ordering compares the sets as 128-bit unsigned integers (bit i has weight
/// 2^i), which is the colex order on subsets.
class VertexSet {
public:
  constexpr VertexSet() = default;

  static VertexSet single(int v) {
    VertexSet s;
    s.insert(v);
    return s;
  }
  static VertexSet range(int n) {
    VertexSet s;
    if (n >= 64) {
      s.lo_ = ~std::uint64_t{0};
      s.hi_ = n >= 128 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n - 64)) - 1);
    } else if (n > 0) {
      s.lo_ = (std::uint64_t{1} << n) - 1;
    }
    return s;
  }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs)
      s.insert(v);
    return s;
  }

  bool contains(int v) const {
    assert(v >= 0 && v < kMaxVertices);
    return v < 64 ? (lo_ >> v) & 1U : (hi_ >> (v - 64)) & 1U;
  }
  void insert(int v) {
    assert(v >= 0 && v < kMaxVertices);
    if (v < 64)
      lo_ |= std::uint64_t{1} << v;
    else
      hi_ |= std::uint64_t{1} << (v - 64);
  }
  void erase(int v) {
    assert(v >= 0 && v < kMaxVertices);
    if (v < 64)
      lo_ &= ~(std::uint64_t{1} << v);
    else
      hi_ &= ~(std::uint64_t{1} << (v - 64));
  }

  int size() const { return std::popcount(lo_) + std::popcount(hi_); }
  bool empty() const { return (lo_ | hi_) == 0; }

  /// Smallest member, or -1 when empty.
  int first() const {
    if (lo_ != 0)
      return std::countr_zero(lo_);
    if (hi_ != 0)
      return 64 + std::countr_zero(hi_);
    return -1;
  }
  /// Largest member, or -1 when empty.
  int last() const {
    if (hi_ != 0)
      return 127 - std::countl_zero(hi_);
    if (lo_ != 0)
      return 63 - std::countl_zero(lo_);
    return -1;
  }

  bool intersects(const VertexSet &o) const {
    return ((lo_ & o.lo_) | (hi_ & o.hi_)) != 0;
  }
  bool is_subset_of(const VertexSet &o) const {
    return (lo_ & ~o.lo_) == 0 && (hi_ & ~o.hi_) == 0;
  }

  VertexSet operator&(const VertexSet &o) const { return {lo_ & o.lo_, hi_ & o.hi_}; }
  VertexSet operator|(const VertexSet &o) const { return {lo_ | o.lo_, hi_ | o.hi_}; }
  VertexSet operator-(const VertexSet &o) const { return {lo_ & ~o.lo_, hi_ & ~o.hi_}; }
  VertexSet &operator&=(const VertexSet &o) { return *this = *this & o; }
  VertexSet &operator|=(const VertexSet &o) { return *this = *this | o; }
  VertexSet &operator-=(const VertexSet &o) { return *this = *this - o; }

  bool operator==(const VertexSet &) const = default;
  std::strong_ordering operator<=>(const VertexSet &o) const {
    if (auto c = hi_ <=> o.hi_; c != 0)
      return c;
    return lo_ <=> o.lo_;
  }

  std::uint64_t low_word() const { return lo_; }
  std::uint64_t high_word() const { return hi_; }

  template <typename F> void for_each(F &&f) const {
    for (std::uint64_t w = lo_; w != 0; w &= w - 1)
      f(std::countr_zero(w));
    for (std::uint64_t w = hi_; w != 0; w &= w - 1)
      f(64 + std::countr_zero(w));
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  /// Renders as `{0,2,5}`.
  std::string to_string() const;

private:
  constexpr VertexSet(std::uint64_t lo, std::uint64_t hi) : lo_(lo), hi_(hi) {}

  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet &s) const noexcept {
    return std::hash<std::uint64_t>{}(s.low_word() * 0x9e3779b97f4a7c15ULL ^ s.high_word());
  }
};

using Family = std::vector<VertexSet>;

} // namespace ekr
