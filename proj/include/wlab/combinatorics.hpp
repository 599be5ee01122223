#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace wlab {

using Mask = std::uint32_t;

constexpr int kMaxDim = 16;

long long binomial(int n, int k);

inline int popcount(Mask m) { return __builtin_popcount(m); }

// Number of elements of m strictly below bit i.
inline int count_below(Mask m, int i) { return popcount(m & ((Mask{1} << i) - 1)); }

// Number of elements of m strictly between bits a and b (exclusive, either order).
int count_between(Mask m, int a, int b);

// Parity of the merge permutation that sorts the concatenation (A, B); A, B disjoint.
int merge_sign(Mask a, Mask b);

// Strictly increasing 1-based index list, e.g. {1,3} for dz^1 ^ dz^3.
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::initializer_list<int> entries);
  explicit MultiIndex(std::vector<int> entries);

  static MultiIndex from_mask(Mask m);

  const std::vector<int>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  Mask mask() const;
  // Throws if any entry exceeds n.
  void check_bound(int n) const;
  std::string str() const;

  bool operator==(const MultiIndex&) const = default;

 private:
  std::vector<int> entries_;
};

// All k-subsets of {0..n-1}, lexicographic in their sorted element lists.
class SubsetBasis {
 public:
  SubsetBasis(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  int size() const { return static_cast<int>(masks_.size()); }
  Mask mask(int rank) const { return masks_[rank]; }
  int rank(Mask m) const { return rank_[m]; }
  const std::vector<Mask>& masks() const { return masks_; }

 private:
  int n_, k_;
  std::vector<Mask> masks_;
  std::vector<int> rank_;
};

// Shared immutable tables, built on first use.
const SubsetBasis& subset_basis(int n, int k);

}  // namespace wlab
