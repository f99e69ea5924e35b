#pragma once

#include "ekr/vertex_set.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace ekr {

/// Dense bitset over candidate indices; width fixed at construction.
class Bits {
public:
  Bits() = default;
  explicit Bits(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool none() const;
  int count() const;
  /// Smallest set index, or -1.
  int first() const;
  bool intersects(const Bits &o) const;
  void and_with(const Bits &o);
  void and_not(const Bits &o);
  std::vector<int> indices() const;

  const std::vector<std::uint64_t> &words() const { return words_; }
  std::vector<std::uint64_t> &words() { return words_; }

private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Compatibility graph over a candidate list of vertex sets (here: two
/// candidates are compatible when they intersect).
struct CliqueProblem {
  std::vector<Bits> adj;
  int size() const { return static_cast<int>(adj.size()); }
};

/// A group of permutations of the candidate indices that maps cliques to
/// cliques (and, when `require_empty_intersection` is set, preserves the
/// intersection pattern of `members`). Element 0 need not be the identity.
class CandidateSymmetry {
public:
  virtual ~CandidateSymmetry() = default;
  virtual std::size_t order() const = 0;
  virtual int apply(std::size_t element, int candidate) const = 0;
};

struct CliqueOptions {
  std::uint64_t max_nodes = 10'000'000;
  /// Only cliques strictly larger than this are reported.
  int must_exceed = 0;
  /// When set, a clique counts only if the intersection of its members
  /// (taken from `members`) is empty.
  bool require_empty_intersection = false;
  const std::vector<VertexSet> *members = nullptr;
  /// Enables orbital branching near the root: branch on "take one member of
  /// an orbit" versus "exclude the whole orbit" while the stabiliser of the
  /// chosen candidates is nontrivial and the depth is below
  /// `symmetry_depth`.
  const CandidateSymmetry *symmetry = nullptr;
  int symmetry_depth = 16;
};

struct CliqueResult {
  /// Candidate indices of the best clique found, ascending. Empty when no
  /// clique beat `must_exceed`.
  std::vector<int> clique;
  bool complete = true;
  std::uint64_t nodes = 0;
};

/// Exact maximum clique by branch and bound with greedy-colouring bounds.
/// Candidates are first reordered by non-increasing degree.
///
/// Reference: San Segundo, Rodriguez-Losada, Jimenez, "An exact bit-parallel
/// algorithm for the maximum clique problem" (2011); orbital branching after
/// Ostrowski, Linderoth, Rossi, Smriglio (2011).
CliqueResult max_clique(const CliqueProblem &problem, const CliqueOptions &options);

} // namespace ekr
